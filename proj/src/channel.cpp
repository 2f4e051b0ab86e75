#include "isac/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "isac/units.hpp"

namespace isac {

double thz_spreading_gain(double distance, double frequency) {
  if (!(distance > 0.0)) throw std::domain_error("thz_spreading_gain: distance must be positive");
  if (!(frequency > 0.0)) throw std::domain_error("thz_spreading_gain: frequency must be positive");
  return kSpeedOfLight / (4.0 * kPi * distance * frequency);
}

double molecular_absorption_gain(double absorption_coefficient, double distance) {
  if (absorption_coefficient < 0.0)
    throw std::domain_error("molecular_absorption_gain: coefficient must be nonnegative");
  if (distance < 0.0)
    throw std::domain_error("molecular_absorption_gain: distance must be nonnegative");
  return std::exp(-0.5 * absorption_coefficient * distance);
}

LinkGain thz_comm_gain(double distance, double frequency, double absorption_coefficient) {
  const double gain = thz_spreading_gain(distance, frequency) *
                      molecular_absorption_gain(absorption_coefficient, distance);
  return {gain, distance, LinkKind::kThzComm};
}

double lambertian_order(double semi_angle) {
  if (!(semi_angle > 1e-3) || !(semi_angle < kPi / 2.0))
    throw std::domain_error("lambertian_order: semi-angle must lie in (1 mrad, pi/2)");
  return -std::log(2.0) / std::log(std::cos(semi_angle));
}

double concentrator_gain(double incidence_angle, double fov, double refractive_index) {
  if (!(fov > 0.0)) throw std::domain_error("concentrator_gain: fov must be positive");
  if (incidence_angle < 0.0)
    throw std::domain_error("concentrator_gain: incidence angle must be nonnegative");
  if (incidence_angle > fov) return 0.0;
  const double s = std::sin(fov);
  return refractive_index * refractive_index / (s * s);
}

LinkGain vlc_channel_gain(const VlcAp& ap, const UserRx& user) {
  const double drop = ap.position.z - user.position.z;
  if (!(drop > 0.0))
    throw std::domain_error("vlc_channel_gain: user must lie below the AP plane");
  const double d = distance(ap.position, user.position);
  if (!(d > 0.0)) throw std::domain_error("vlc_channel_gain: zero link distance");

  // Downward-pointing LED and upward-facing detector share the vertical axis,
  // so the irradiance, incidence and concentrator angles coincide.
  const double cos_angle = drop / d;
  const double angle = std::acos(std::min(1.0, cos_angle));
  if (angle > ap.fov || angle > user.fov) return {0.0, d, LinkKind::kVlc};

  const double m = lambertian_order(ap.semi_angle);
  const double gain = (m + 1.0) * user.pd_area / (2.0 * kPi * d * d) *
                      std::pow(cos_angle, m) * ap.filter_gain *
                      concentrator_gain(angle, ap.fov, ap.concentrator_index) * cos_angle;
  return {gain, d, LinkKind::kVlc};
}

LinkGain sensing_path_loss(double distance, double frequency,
                           double absorption_coefficient, double rcs) {
  if (!(distance > 0.0)) throw std::domain_error("sensing_path_loss: distance must be positive");
  if (!(frequency > 0.0)) throw std::domain_error("sensing_path_loss: frequency must be positive");
  if (absorption_coefficient < 0.0)
    throw std::domain_error("sensing_path_loss: coefficient must be nonnegative");
  if (rcs < 0.0) throw std::domain_error("sensing_path_loss: rcs must be nonnegative");

  const double fourpi = 4.0 * kPi;
  const double gain = kSpeedOfLight * kSpeedOfLight * rcs /
                      (fourpi * fourpi * fourpi * frequency * frequency *
                       distance * distance * distance * distance) *
                      std::exp(-2.0 * absorption_coefficient * distance);
  return {gain, distance, LinkKind::kThzSensing};
}

double illuminance_at(const UserRx& user,
                      const std::vector<std::pair<VlcAp, double>>& active_aps) {
  double lux = 0.0;
  for (const auto& [ap, power] : active_aps) {
    if (power < 0.0) throw std::domain_error("illuminance_at: power must be nonnegative");
    lux += vlc_channel_gain(ap, user).gain * ap.lumen_constant * power;
  }
  return lux;
}

}  // namespace isac
