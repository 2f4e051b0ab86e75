#pragma once

#include <utility>
#include <vector>

#include "isac/association.hpp"
#include "isac/power.hpp"
#include "isac/scenario.hpp"
#include "isac/sensing.hpp"

namespace isac {

struct MetricsSnapshot {
  double avg_se = 0.0;         // bits/s/Hz
  double avg_ee = 0.0;         // bits/J/Hz
  double avg_sens_rate = 0.0;  // bits/s, mean over covered users
  double avg_comm_rate = 0.0;  // bits/s, mean over served users
  double sc_p = 0.0;
  double total_power = 0.0;  // W, equals the solver objective
  int thz_user_count = 0;
  int vlc_user_count = 0;
  int unserved_count = 0;
  bool min_illuminance_ok = false;
};

/// Network-average spectral efficiency: sum of log2(1 + SNR) over served
/// users, normalised by the full population size.
double average_se(const Association& association);

/// Spectral efficiency per watt of total consumed power.
double average_ee(double avg_se, double total_power);

/// (mean sensing rate over covered users, mean comm rate over served users);
/// Shannon rates over the respective link bandwidths, zero for empty sets.
std::pair<double, double> link_rates(const Association& association,
                                     const std::vector<DetectionOutcome>& detections,
                                     const Scenario& s);

/// Full per-trial snapshot, including the illuminance compliance flag
/// evaluated against the executed VLC powers.
MetricsSnapshot compute_metrics(const Scenario& s, const std::vector<UserRx>& users,
                                const std::vector<DetectionOutcome>& detections,
                                const Association& association, const MilpSolution& milp);

}  // namespace isac
