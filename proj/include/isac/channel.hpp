#pragma once

#include <utility>
#include <vector>

#include "isac/scenario.hpp"

namespace isac {

enum class LinkKind { kThzComm, kVlc, kThzSensing };

struct LinkGain {
  double gain = 0.0;      // dimensionless, >= 0
  double distance = 0.0;  // m
  LinkKind kind = LinkKind::kThzComm;
};

/// Free-space spreading factor c / (4 pi d f).
double thz_spreading_gain(double distance, double frequency);

/// Molecular absorption factor exp(-k d / 2).
double molecular_absorption_gain(double absorption_coefficient, double distance);

/// Line-of-sight THz gain: spreading times absorption.
LinkGain thz_comm_gain(double distance, double frequency, double absorption_coefficient);

/// Lambertian order m = -ln 2 / ln cos(semi_angle). The semi-angle must stay
/// above a 1 mrad floor, below which the order diverges.
double lambertian_order(double semi_angle);

/// Optical concentrator gain ci^2 / sin^2(fov) inside the field of view,
/// zero outside.
double concentrator_gain(double incidence_angle, double fov, double refractive_index);

/// Lambertian LED to upward-facing photodetector gain,
/// (m+1) A / (2 pi D^2) cos^m(irradiance) T_s g(psi) cos(incidence); the
/// incidence angle equals the concentrator angle for an upward receiver.
LinkGain vlc_channel_gain(const VlcAp& ap, const UserRx& user);

/// Monostatic round-trip path loss c^2 sigma / ((4 pi)^3 f^2 d^4) exp(-2 k d).
LinkGain sensing_path_loss(double distance, double frequency,
                           double absorption_coefficient, double rcs);

/// Illuminance from the active APs, each contributing channel gain times
/// lumen constant times drive power. Zero when nothing is active.
double illuminance_at(const UserRx& user,
                      const std::vector<std::pair<VlcAp, double>>& active_aps);

}  // namespace isac
