#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace isac {

struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

inline double distance(const Point3& a, const Point3& b) {
  return std::sqrt((a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y) +
                   (a.z - b.z) * (a.z - b.z));
}

inline double horizontal_distance(const Point3& a, const Point3& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

struct Room {
  double length = 0.0;  // m
  double width = 0.0;   // m
  double height = 0.0;  // m
};

// THz front end shared by the sensing and communication APs. All quantities
// are linear SI; dBm/dB values are converted at the config boundary.
struct ThzPhy {
  double carrier_frequency = 0.0;       // Hz
  double absorption_coefficient = 0.0;  // 1/m
  double tx_gain = 1.0;
  double rx_gain = 1.0;
  double bandwidth = 0.0;        // Hz
  double noise_psd = 0.0;        // W/Hz
  double total_power = 0.0;      // W
  double circuitry_power = 0.0;  // W
  // When set, the split solver is bypassed and this fraction goes to sensing.
  std::optional<double> rho1_override;
};

struct VlcAp {
  Point3 position;
  double semi_angle = 0.0;          // rad, half-illuminance semi-angle
  double max_power = 0.0;           // W
  double filter_gain = 1.0;         // T_s
  double concentrator_index = 1.0;  // ci
  double fov = 0.0;                 // rad, psi_c
  double bandwidth = 0.0;           // Hz
  double noise_psd = 0.0;           // W/Hz
  double lumen_constant = 0.0;      // lm/W
};

struct UserRx {
  Point3 position;
  double pd_area = 0.0;        // m^2
  double responsivity = 0.0;   // A/W
  double oe_conversion = 0.0;  // optical-to-electrical coefficient
  double fov = 0.0;            // rad, theta_max
  double rcs = 0.0;            // m^2, exponential with unit mean
};

struct BlockageParams {
  double baseline_intensity = 0.0;  // lambda_p, 1/m^2 (0 when density is given directly)
  double hardcore_distance = 0.0;   // delta, m
  double blocker_radius = 0.0;      // r_B, m
  double blocker_height = 0.0;      // h_B, m
  double density = 0.0;             // lambda_B, 1/m^2
  bool density_derived = false;     // density computed from baseline_intensity
  // Reproduces the obstruction-probability weighting instead of the
  // line-of-sight weighting; comparison plots only.
  bool literal_pb_weighting = false;
};

struct Thresholds {
  double sensing_snr = 0.0;      // gamma_sens, linear
  double comm_snr = 0.0;         // gamma_comm, linear
  double vlc_snr = 0.0;          // gamma_VLC, linear
  double false_alarm = 0.0;      // FA_p
  double detection = 0.0;        // P_d threshold
  double min_illuminance = 0.0;  // lux
  // Alternate printed detector form; comparison plots only.
  bool alt_pd_form = false;
};

enum class Mode { kProposed, kStandaloneThz, kNonOptimized };

const char* mode_name(Mode mode);
Mode mode_from_name(const std::string& name);

struct Scenario {
  Room room;
  Point3 thz_sensing_ap_pos;
  Point3 thz_comm_ap_pos;
  std::vector<VlcAp> vlc_aps;
  ThzPhy thz;
  int user_count = 0;
  UserRx user_template;  // position.z carries the user plane height
  BlockageParams blockage;
  Thresholds thresholds;
  bool blockage_enabled = false;
  Mode mode = Mode::kProposed;

  /// Common ceiling mount height of every AP (validated equal).
  double mount_height() const { return thz_sensing_ap_pos.z; }
};

// Validation failure; `field` is the config path of the offending value,
// e.g. "thresholds.fa_p".
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// Checks every invariant and returns the scenario unchanged; throws
/// ValidationError naming the first violated field.
const Scenario& validate_scenario(const Scenario& s);

/// Reference deployment: 5x5x3 m room, two THz APs and four VLC APs mounted
/// at 2.8 m, ten users on the 0.85 m plane.
Scenario default_scenario();

/// N users drawn uniformly over the floor with unit-mean exponential RCS.
/// Pure function of (scenario, seed); users are drawn one tuple at a time so
/// that a prefix of the list is stable when only the count changes.
std::vector<UserRx> place_users(const Scenario& s, std::uint64_t seed);

}  // namespace isac
