#pragma once

#include "isac/scenario.hpp"

namespace isac {

// End-to-end link power gains, blockage weight included, shared by the power
// solvers, the trial engine and the metrics. Each one multiplies the channel
// model by the antenna gains and by the per-link SNR weight selected in the
// scenario's blockage settings.

/// Round-trip sensing gain G_t G_r L(d_f) w of one user at the sensing AP.
double sensing_link_gain(const Scenario& s, const UserRx& user);

/// Downlink THz power gain G_t G_r |H|^2 w of one user at the comm AP. The
/// composed line-of-sight gain enters the SNR as a power quantity.
double thz_comm_link_gain(const Scenario& s, const UserRx& user);

/// Blockage-weighted VLC gain H w of one user at one VLC AP (weight inside
/// the photocurrent, so it is squared by the electrical SNR).
double vlc_link_gain(const Scenario& s, const VlcAp& ap, const UserRx& user);

/// Sensing SNR at sensing power fraction rho1 given a sensing link gain.
double sensing_snr_from_gain(const Scenario& s, double link_gain, double rho1);

/// THz communication SNR at communication power fraction (1 - rho1).
double thz_comm_snr_from_gain(const Scenario& s, double link_gain, double rho1);

/// Electrical VLC SNR (R g p / k)^2 / (N B) at drive power p.
double vlc_snr_at_power(const Scenario& s, double link_gain, double power);

/// Smallest drive power whose VLC SNR meets gamma_VLC; +inf when the link
/// gain is zero.
double vlc_required_power(const Scenario& s, double link_gain);

}  // namespace isac
