#include "isac/scenario.hpp"

#include "isac/rng.hpp"
#include "isac/units.hpp"

namespace isac {

const char* mode_name(Mode mode) {
  switch (mode) {
    case Mode::kProposed: return "proposed";
    case Mode::kStandaloneThz: return "standalone_thz";
    case Mode::kNonOptimized: return "non_optimized";
  }
  return "proposed";
}

Mode mode_from_name(const std::string& name) {
  if (name == "proposed") return Mode::kProposed;
  if (name == "standalone_thz") return Mode::kStandaloneThz;
  if (name == "non_optimized") return Mode::kNonOptimized;
  throw ValidationError("mode", "unknown mode '" + name +
                                    "' (expected proposed, standalone_thz or non_optimized)");
}

namespace {

void require(bool ok, const std::string& field, const std::string& message) {
  if (!ok) throw ValidationError(field, message);
}

void check_finite_point(const Point3& p, const std::string& field) {
  require(std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z), field,
          "coordinates must be finite");
}

}  // namespace

const Scenario& validate_scenario(const Scenario& s) {
  require(s.room.length > 0.0, "room.length_m", "must be positive");
  require(s.room.width > 0.0, "room.width_m", "must be positive");
  require(s.room.height > 0.0, "room.height_m", "must be positive");

  check_finite_point(s.thz_sensing_ap_pos, "aps.thz_sensing");
  check_finite_point(s.thz_comm_ap_pos, "aps.thz_comm");

  const double user_z = s.user_template.position.z;
  require(user_z > 0.0 && user_z < s.room.height, "users.height_m",
          "must lie strictly inside the room");

  // Every AP shares one ceiling mount height, strictly above the user plane.
  const double mount = s.thz_sensing_ap_pos.z;
  require(mount > user_z && mount <= s.room.height, "aps.thz_sensing",
          "AP mount height must lie above the user plane and inside the room");
  require(s.thz_comm_ap_pos.z == mount, "aps.thz_comm",
          "all APs must share the same ceiling mount height");
  for (std::size_t i = 0; i < s.vlc_aps.size(); ++i) {
    const std::string field = "aps.vlc[" + std::to_string(i) + "]";
    check_finite_point(s.vlc_aps[i].position, field);
    require(s.vlc_aps[i].position.z == mount, field,
            "all APs must share the same ceiling mount height");
  }

  require(s.thz.carrier_frequency > 0.0, "thz.carrier_frequency_hz", "must be positive");
  require(s.thz.absorption_coefficient >= 0.0, "thz.absorption_coefficient_per_m",
          "must be nonnegative");
  require(s.thz.tx_gain > 0.0, "thz.tx_gain", "must be positive");
  require(s.thz.rx_gain > 0.0, "thz.rx_gain", "must be positive");
  require(s.thz.bandwidth > 0.0, "thz.bandwidth_hz", "must be positive");
  require(s.thz.noise_psd > 0.0, "thz.noise_psd", "must be positive");
  require(s.thz.total_power > 0.0, "thz.total_power_w", "must be positive");
  require(s.thz.circuitry_power >= 0.0, "thz.circuitry_power_w", "must be nonnegative");
  if (s.thz.rho1_override) {
    require(*s.thz.rho1_override >= 0.0 && *s.thz.rho1_override <= 1.0,
            "thz.rho1_override", "must lie in [0, 1]");
  }

  if (s.mode == Mode::kProposed || s.mode == Mode::kNonOptimized) {
    require(!s.vlc_aps.empty(), "aps.vlc", "at least one VLC AP is required in this mode");
  }
  for (std::size_t i = 0; i < s.vlc_aps.size(); ++i) {
    const VlcAp& ap = s.vlc_aps[i];
    const std::string base = "vlc";
    require(ap.semi_angle > 1e-3 && ap.semi_angle < kPi / 2.0, base + ".semi_angle",
            "must lie in (1 mrad, pi/2)");
    require(ap.max_power > 0.0, base + ".max_power_w", "p_max must be positive");
    require(ap.filter_gain > 0.0, base + ".filter_gain", "must be positive");
    require(ap.concentrator_index >= 1.0, base + ".concentrator_index", "must be >= 1");
    require(ap.fov > 0.0 && ap.fov <= kPi / 2.0, base + ".fov", "must lie in (0, pi/2]");
    require(ap.bandwidth > 0.0, base + ".bandwidth_hz", "must be positive");
    require(ap.noise_psd > 0.0, base + ".noise_psd", "must be positive");
    require(ap.lumen_constant > 0.0, base + ".lumen_constant_lm_per_w", "must be positive");
  }

  require(s.user_count >= 1, "users.count", "must be at least 1");
  require(s.user_template.pd_area > 0.0, "users.pd_area_m2", "must be positive");
  require(s.user_template.responsivity > 0.0, "users.responsivity_a_per_w",
          "must be positive");
  require(s.user_template.oe_conversion > 0.0, "users.oe_conversion", "must be positive");
  require(s.user_template.fov > 0.0 && s.user_template.fov <= kPi / 2.0, "users.fov",
          "must lie in (0, pi/2]");
  require(s.user_template.rcs >= 0.0, "users.rcs", "must be nonnegative");
  require(s.user_template.position.x >= 0.0 && s.user_template.position.x <= s.room.length &&
              s.user_template.position.y >= 0.0 && s.user_template.position.y <= s.room.width,
          "users.position", "must lie inside the room footprint");

  const BlockageParams& b = s.blockage;
  require(b.baseline_intensity >= 0.0, "blockage.baseline_intensity_per_m2",
          "must be nonnegative");
  require(b.hardcore_distance > 0.0, "blockage.hardcore_distance_m", "must be positive");
  require(b.blocker_radius > 0.0, "blockage.blocker_radius_m", "must be positive");
  require(b.blocker_height > 0.0 && b.blocker_height <= mount, "blockage.blocker_height_m",
          "must lie in (0, AP mount height]");
  require(b.density >= 0.0, "blockage.density_per_m2", "must be nonnegative");
  if (b.density_derived) {
    const double cap = 1.0 / (kPi * b.hardcore_distance * b.hardcore_distance);
    require(b.density <= cap * (1.0 + 1e-12), "blockage.density_per_m2",
            "derived density exceeds the hard-core packing bound");
  }

  const Thresholds& t = s.thresholds;
  require(t.sensing_snr > 0.0, "thresholds.gamma_sens", "must be positive");
  require(t.comm_snr > 0.0, "thresholds.gamma_comm", "must be positive");
  require(t.vlc_snr > 0.0, "thresholds.gamma_vlc", "must be positive");
  require(t.false_alarm > 0.0 && t.false_alarm < 1.0, "thresholds.fa_p",
          "must lie in (0, 1)");
  require(t.detection > 0.0 && t.detection < 1.0, "thresholds.p_d_th",
          "must lie in (0, 1)");
  require(t.min_illuminance >= 0.0, "thresholds.min_illuminance_lux",
          "must be nonnegative");

  return s;
}

Scenario default_scenario() {
  Scenario s;
  s.room = {5.0, 5.0, 3.0};
  s.thz_sensing_ap_pos = {1.5, 2.5, 2.8};
  s.thz_comm_ap_pos = {3.0, 2.5, 2.8};

  s.thz.carrier_frequency = 370e9;
  s.thz.absorption_coefficient = 0.0033;
  s.thz.tx_gain = 1.0;
  s.thz.rx_gain = 1.0;
  s.thz.bandwidth = 100e6;
  s.thz.noise_psd = dbm_to_watt(-174.0);  // per Hz
  s.thz.total_power = 2.0;
  s.thz.circuitry_power = 5.6e-3;

  VlcAp ap;
  ap.semi_angle = deg_to_rad(60.0);
  ap.max_power = 5.0;
  ap.filter_gain = 1.0;
  ap.concentrator_index = 1.0;
  ap.fov = deg_to_rad(90.0);
  ap.bandwidth = 40e6;
  // -210 dBm/MHz -> -270 dBm/Hz.
  ap.noise_psd = dbm_to_watt(-210.0 - 60.0);
  // Calibrated so the four-AP deployment at p_max clears a 300 lux office
  // target at the room centre; see README.
  ap.lumen_constant = 6.0e6;
  for (auto [x, y] : {std::pair{1.25, 1.25}, {1.25, 3.75}, {3.75, 3.75}, {3.75, 1.25}}) {
    ap.position = {x, y, 2.8};
    s.vlc_aps.push_back(ap);
  }

  s.user_count = 10;
  s.user_template.position = {0.0, 0.0, 0.85};
  s.user_template.pd_area = 1e-4;  // 1 cm^2
  s.user_template.responsivity = 0.53;
  s.user_template.oe_conversion = 3.0;
  s.user_template.fov = deg_to_rad(90.0);
  s.user_template.rcs = 1.0;

  s.blockage.baseline_intensity = 0.0;
  s.blockage.hardcore_distance = 0.5;
  s.blockage.blocker_radius = 2.0;
  s.blockage.blocker_height = 1.8;
  s.blockage.density = 4.0;
  s.blockage.density_derived = false;
  s.blockage_enabled = false;

  s.thresholds.sensing_snr = db_to_linear(-5.0);
  s.thresholds.comm_snr = db_to_linear(25.0);
  s.thresholds.vlc_snr = db_to_linear(15.0);
  s.thresholds.false_alarm = 1e-2;
  s.thresholds.detection = 0.5;
  s.thresholds.min_illuminance = 300.0;

  s.mode = Mode::kProposed;
  return s;
}

std::vector<UserRx> place_users(const Scenario& s, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<UserRx> users;
  users.reserve(static_cast<std::size_t>(s.user_count));
  for (int i = 0; i < s.user_count; ++i) {
    UserRx u = s.user_template;
    u.position.x = rng.uniform(0.0, s.room.length);
    u.position.y = rng.uniform(0.0, s.room.width);
    u.rcs = rng.exponential(1.0);
    users.push_back(u);
  }
  return users;
}

}  // namespace isac
