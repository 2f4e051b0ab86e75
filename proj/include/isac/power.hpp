#pragma once

#include <optional>
#include <span>
#include <vector>

#include "isac/scenario.hpp"

namespace isac {

// Split of the shared THz budget between sensing and communication.
struct SplitSolution {
  double rho1 = 0.0;               // clamped to [0, 1]
  double required_fraction = 0.0;  // unclamped worst-case requirement
  std::vector<int> feasible_for;   // users meeting gamma_comm at (1 - rho1)
  bool sensing_ok = false;         // required_fraction <= 1 (or <= forced rho1)
};

// VLC activation/power assignment. rho_l <= alpha_l p_max in every solution
// and the objective counts the THz budget and circuitry once.
struct MilpSolution {
  std::vector<int> active;      // alpha_l
  std::vector<double> power;    // rho_l, W
  double objective = 0.0;       // W
  std::vector<int> unserved;    // users whose requirement exceeds p_max
};

// One VLC-assigned user: serving AP index and the drive power that meets
// gamma_VLC on its (blockage-weighted) link.
struct VlcAssignment {
  int user = 0;
  int ap = 0;
  double min_power = 0.0;  // W; may exceed p_max, the solver then drops it
};

/// Smallest sensing fraction covering every candidate,
/// max_n gamma_sens N B / ((P_w + P_cir) g_n). A value above 1 marks an
/// infeasible split; callers clamp for execution and keep the raw value.
double min_sensing_fraction(std::span<const double> sensing_gains, const ThzPhy& thz,
                            double gamma_sens);

/// Solves the split against the whole candidate set and reports which users
/// clear gamma_comm with the remaining fraction. Honors thz.rho1_override.
SplitSolution solve_power_split(const Scenario& s, std::span<const double> sensing_gains,
                                std::span<const double> comm_gains);

/// Convenience overload computing per-user link gains from the scenario.
SplitSolution solve_power_split(const Scenario& s, const std::vector<UserRx>& users);

/// Smallest drive power meeting gamma_VLC for one user-AP pair, or nothing
/// when the link gain is zero or the requirement exceeds p_max.
std::optional<double> vlc_min_power(const UserRx& user, const VlcAp& ap, const Scenario& s);

/// Exact optimum of the activation/power program under fixed single-AP
/// association: an AP serves the maximum requirement among its users, APs
/// without users stay off, users above p_max are reported unserved.
MilpSolution minimize_network_power(std::span<const VlcAssignment> assignments,
                                    int ap_count, const Scenario& s);

/// Same program solved by exact branch-and-bound over activation patterns;
/// kept as an independent route for validation and for variants whose
/// constraints couple APs.
MilpSolution minimize_network_power_bnb(std::span<const VlcAssignment> assignments,
                                        int ap_count, const Scenario& s);

/// Baseline with every AP transmitting at p_max.
MilpSolution non_optimized_power(const Scenario& s);

}  // namespace isac
