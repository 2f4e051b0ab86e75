#pragma once

#include "isac/scenario.hpp"

namespace isac {

// Per-link blockage statistics. p_block and los_weight always sum to one;
// los_weight is the multiplicative factor applied to a link SNR.
struct BlockageWeight {
  double p_block = 0.0;
  double los_weight = 1.0;
  double exposure_distance = 0.0;  // d_B, m
};

/// Effective density of a Matern type-II hard-core process thinned from a
/// Poisson parent of intensity lambda_p with hard-core distance delta:
/// (1 - exp(-lambda_p pi delta^2)) / (pi delta^2).
double effective_density(double baseline_intensity, double hardcore_distance);

/// AP-side distance below which a blocker of height h_B cuts the ray from an
/// AP mounted at height H to a ground-plane user at horizontal distance d_T:
/// d_B = d_T (1 - h_B / H).
double blocker_distance(double horizontal_distance, double blocker_height,
                        double mount_height);

/// Obstruction probability 1 - exp(-2 lambda_B d_B r_B^2) and its complement.
BlockageWeight blockage_probability(double density, double exposure_distance,
                                    double blocker_radius);

/// Full chain for one AP-user link. With blockage disabled the weight is
/// exactly one and downstream SNRs are untouched bit for bit.
BlockageWeight link_blockage_weight(const Point3& ap_pos, const Point3& user_pos,
                                    const BlockageParams& params, bool enabled);

/// SNR factor selected by the weighting convention in `params`.
inline double snr_weight(const BlockageWeight& w, const BlockageParams& params) {
  return params.literal_pb_weighting ? w.p_block : w.los_weight;
}

}  // namespace isac
