#pragma once

#include <vector>

#include "isac/scenario.hpp"

namespace isac {

struct DetectionOutcome {
  double snr_sens = 0.0;  // linear
  double p_d = 0.0;
  bool covered = false;   // snr_sens >= gamma_sens
  bool detected = false;  // p_d > detection threshold
};

/// Monostatic sensing SNR of one user at sensing power fraction rho1,
/// including antenna gains and the blockage weight of the sensing link.
double sensing_snr(const UserRx& user, const Scenario& s, double rho1);

/// Neyman-Pearson detector on a Gaussian channel:
/// P_d = erfc(erfcinv(2 FA_p) - sqrt(snr / 2)) / 2.
/// Anchored by P_d(0, fa) = fa and strictly increasing in both arguments.
double detection_probability(double snr, double false_alarm);

/// Alternate printed detector form, kept for comparison plots only:
/// P_d = erfc(erfinv(2 FA_p) - sqrt(snr) / 2) / 2.
double detection_probability_alt(double snr, double false_alarm);

/// Fraction of users whose sensing SNR clears gamma_sens.
double sensing_coverage(const std::vector<DetectionOutcome>& outcomes);

}  // namespace isac
