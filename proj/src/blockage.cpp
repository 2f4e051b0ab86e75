#include "isac/blockage.hpp"

#include <cmath>
#include <stdexcept>

#include "isac/units.hpp"

namespace isac {

double effective_density(double baseline_intensity, double hardcore_distance) {
  if (baseline_intensity < 0.0)
    throw std::domain_error("effective_density: baseline intensity must be nonnegative");
  if (!(hardcore_distance > 0.0))
    throw std::domain_error("effective_density: hard-core distance must be positive");
  const double cell = kPi * hardcore_distance * hardcore_distance;
  return -std::expm1(-baseline_intensity * cell) / cell;
}

double blocker_distance(double horizontal_distance, double blocker_height,
                        double mount_height) {
  if (horizontal_distance < 0.0)
    throw std::domain_error("blocker_distance: distance must be nonnegative");
  if (!(blocker_height > 0.0) || blocker_height > mount_height)
    throw std::domain_error("blocker_distance: blocker height must lie in (0, mount height]");
  return horizontal_distance * (1.0 - blocker_height / mount_height);
}

BlockageWeight blockage_probability(double density, double exposure_distance,
                                    double blocker_radius) {
  if (density < 0.0) throw std::domain_error("blockage_probability: density must be nonnegative");
  if (exposure_distance < 0.0)
    throw std::domain_error("blockage_probability: exposure distance must be nonnegative");
  if (!(blocker_radius > 0.0))
    throw std::domain_error("blockage_probability: blocker radius must be positive");
  const double los =
      std::exp(-2.0 * density * exposure_distance * blocker_radius * blocker_radius);
  return {1.0 - los, los, exposure_distance};
}

BlockageWeight link_blockage_weight(const Point3& ap_pos, const Point3& user_pos,
                                    const BlockageParams& params, bool enabled) {
  if (!enabled) return {0.0, 1.0, 0.0};
  const double d_t = horizontal_distance(ap_pos, user_pos);
  const double d_b = blocker_distance(d_t, params.blocker_height, ap_pos.z);
  return blockage_probability(params.density, d_b, params.blocker_radius);
}

}  // namespace isac
