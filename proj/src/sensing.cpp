#include "isac/sensing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "isac/links.hpp"
#include "isac/specfun.hpp"

namespace isac {

double sensing_snr(const UserRx& user, const Scenario& s, double rho1) {
  if (!(rho1 >= 0.0) || !(rho1 <= 1.0))
    throw std::domain_error("sensing_snr: rho1 must lie in [0, 1]");
  return sensing_snr_from_gain(s, sensing_link_gain(s, user), rho1);
}

double detection_probability(double snr, double false_alarm) {
  if (!(false_alarm > 0.0) || !(false_alarm < 1.0))
    throw std::domain_error("detection_probability: false alarm must lie in (0, 1)");
  if (snr < 0.0) throw std::domain_error("detection_probability: snr must be nonnegative");
  const double p = 0.5 * erfc(erfcinv(2.0 * false_alarm) - std::sqrt(0.5 * snr));
  return std::clamp(p, 0.0, 1.0);
}

double detection_probability_alt(double snr, double false_alarm) {
  if (!(false_alarm > 0.0) || !(false_alarm < 1.0))
    throw std::domain_error("detection_probability: false alarm must lie in (0, 1)");
  if (snr < 0.0) throw std::domain_error("detection_probability: snr must be nonnegative");
  const double p = 0.5 * erfc(erfinv(2.0 * false_alarm) - 0.5 * std::sqrt(snr));
  return std::clamp(p, 0.0, 1.0);
}

double sensing_coverage(const std::vector<DetectionOutcome>& outcomes) {
  if (outcomes.empty())
    throw std::domain_error("sensing_coverage: at least one user required");
  std::size_t covered = 0;
  for (const DetectionOutcome& o : outcomes) covered += o.covered ? 1 : 0;
  return static_cast<double>(covered) / static_cast<double>(outcomes.size());
}

}  // namespace isac
