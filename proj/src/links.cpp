#include "isac/links.hpp"

#include <cmath>
#include <limits>

#include "isac/blockage.hpp"
#include "isac/channel.hpp"

namespace isac {

namespace {

// Multiplicative SNR factor for one link. Disabled blockage bypasses the
// weighting entirely so unblocked values match bit for bit regardless of the
// weighting convention.
double blockage_snr_factor(const Scenario& s, const Point3& ap_pos,
                           const Point3& user_pos) {
  if (!s.blockage_enabled) return 1.0;
  return snr_weight(link_blockage_weight(ap_pos, user_pos, s.blockage, true),
                    s.blockage);
}

}  // namespace

double sensing_link_gain(const Scenario& s, const UserRx& user) {
  const double d_f = distance(user.position, s.thz_sensing_ap_pos);
  const double loss = sensing_path_loss(d_f, s.thz.carrier_frequency,
                                        s.thz.absorption_coefficient, user.rcs)
                          .gain;
  return s.thz.tx_gain * s.thz.rx_gain * loss *
         blockage_snr_factor(s, s.thz_sensing_ap_pos, user.position);
}

double thz_comm_link_gain(const Scenario& s, const UserRx& user) {
  const double d = distance(user.position, s.thz_comm_ap_pos);
  const double h = thz_comm_gain(d, s.thz.carrier_frequency,
                                 s.thz.absorption_coefficient)
                       .gain;
  return s.thz.tx_gain * s.thz.rx_gain * h * h *
         blockage_snr_factor(s, s.thz_comm_ap_pos, user.position);
}

double vlc_link_gain(const Scenario& s, const VlcAp& ap, const UserRx& user) {
  return vlc_channel_gain(ap, user).gain *
         blockage_snr_factor(s, ap.position, user.position);
}

double sensing_snr_from_gain(const Scenario& s, double link_gain, double rho1) {
  return (s.thz.total_power + s.thz.circuitry_power) * rho1 * link_gain /
         (s.thz.noise_psd * s.thz.bandwidth);
}

double thz_comm_snr_from_gain(const Scenario& s, double link_gain, double rho1) {
  return (s.thz.total_power + s.thz.circuitry_power) * (1.0 - rho1) * link_gain /
         (s.thz.noise_psd * s.thz.bandwidth);
}

double vlc_snr_at_power(const Scenario& s, double link_gain, double power) {
  const VlcAp& ref = s.vlc_aps.front();
  const double current =
      s.user_template.responsivity * link_gain * power / s.user_template.oe_conversion;
  return current * current / (ref.noise_psd * ref.bandwidth);
}

double vlc_required_power(const Scenario& s, double link_gain) {
  if (!(link_gain > 0.0)) return std::numeric_limits<double>::infinity();
  const VlcAp& ref = s.vlc_aps.front();
  const double target =
      std::sqrt(s.thresholds.vlc_snr * ref.noise_psd * ref.bandwidth);
  return s.user_template.oe_conversion * target /
         (s.user_template.responsivity * link_gain);
}

}  // namespace isac
