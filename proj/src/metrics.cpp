#include "isac/metrics.hpp"

#include <cmath>
#include <stdexcept>
#include <tuple>

#include "isac/channel.hpp"

namespace isac {

double average_se(const Association& association) {
  const std::size_t n = association.decision.size();
  if (n == 0) return 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (association.decision[i] == Decision::kUnserved) continue;
    sum += std::log2(1.0 + association.achieved_snr[i]);
  }
  return sum / static_cast<double>(n);
}

double average_ee(double avg_se, double total_power) {
  if (!(total_power > 0.0)) throw std::domain_error("average_ee: total power must be positive");
  return avg_se / total_power;
}

std::pair<double, double> link_rates(const Association& association,
                                     const std::vector<DetectionOutcome>& detections,
                                     const Scenario& s) {
  double sens_sum = 0.0;
  std::size_t sensed = 0;
  for (const DetectionOutcome& d : detections) {
    if (!d.covered) continue;
    sens_sum += s.thz.bandwidth * std::log2(1.0 + d.snr_sens);
    ++sensed;
  }

  double comm_sum = 0.0;
  std::size_t served = 0;
  for (std::size_t i = 0; i < association.decision.size(); ++i) {
    if (association.decision[i] == Decision::kUnserved) continue;
    const double bw = association.decision[i] == Decision::kThzComm
                          ? s.thz.bandwidth
                          : s.vlc_aps[static_cast<std::size_t>(association.serving_vlc_ap[i])]
                                .bandwidth;
    comm_sum += bw * std::log2(1.0 + association.achieved_snr[i]);
    ++served;
  }

  return {sensed ? sens_sum / static_cast<double>(sensed) : 0.0,
          served ? comm_sum / static_cast<double>(served) : 0.0};
}

MetricsSnapshot compute_metrics(const Scenario& s, const std::vector<UserRx>& users,
                                const std::vector<DetectionOutcome>& detections,
                                const Association& association, const MilpSolution& milp) {
  MetricsSnapshot m;
  m.avg_se = average_se(association);
  m.total_power = milp.objective;
  m.avg_ee = average_ee(m.avg_se, m.total_power);
  std::tie(m.avg_sens_rate, m.avg_comm_rate) = link_rates(association, detections, s);
  m.sc_p = sensing_coverage(detections);

  for (Decision d : association.decision) {
    switch (d) {
      case Decision::kThzComm: ++m.thz_user_count; break;
      case Decision::kVlc: ++m.vlc_user_count; break;
      case Decision::kUnserved: ++m.unserved_count; break;
    }
  }

  std::vector<std::pair<VlcAp, double>> active;
  for (std::size_t l = 0; l < milp.active.size() && l < s.vlc_aps.size(); ++l) {
    if (milp.active[l] && milp.power[l] > 0.0) active.emplace_back(s.vlc_aps[l], milp.power[l]);
  }
  m.min_illuminance_ok = true;
  for (const UserRx& u : users) {
    if (illuminance_at(u, active) < s.thresholds.min_illuminance) {
      m.min_illuminance_ok = false;
      break;
    }
  }
  return m;
}

}  // namespace isac
