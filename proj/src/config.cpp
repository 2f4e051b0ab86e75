#include "isac/config.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "isac/blockage.hpp"
#include "isac/units.hpp"

namespace isac {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ValidationError(path, message);
}

// Wraps one JSON object section and tracks key consumption so leftovers can
// be rejected by name.
class Section {
 public:
  Section(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) fail(path_, "must be an object");
  }

  bool has(const std::string& key) {
    auto it = j_.find(key);
    if (it == j_.end() || it->is_null()) {
      seen_.push_back(key);
      return false;
    }
    return true;
  }

  double number(const std::string& key) {
    const json& v = get(key);
    if (!v.is_number()) fail(path_ + "." + key, "must be a number");
    return v.get<double>();
  }

  int integer(const std::string& key) {
    const json& v = get(key);
    if (!v.is_number_integer()) fail(path_ + "." + key, "must be an integer");
    return v.get<int>();
  }

  bool boolean(const std::string& key, bool fallback) {
    if (!has(key)) return fallback;
    const json& v = get(key);
    if (!v.is_boolean()) fail(path_ + "." + key, "must be a boolean");
    return v.get<bool>();
  }

  std::string text(const std::string& key) {
    const json& v = get(key);
    if (!v.is_string()) fail(path_ + "." + key, "must be a string");
    return v.get<std::string>();
  }

  const json& raw(const std::string& key) { return get(key); }

  /// Exactly one of two alternative spellings; returns which one was present.
  std::string pick_one(const std::string& a, const std::string& b) {
    const bool ha = has(a), hb = has(b);
    if (ha == hb)
      fail(path_, "exactly one of '" + a + "' or '" + b + "' must be set");
    return ha ? a : b;
  }

  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      if (std::find(seen_.begin(), seen_.end(), it.key()) == seen_.end())
        fail(path_ + "." + it.key(), "unknown key");
    }
  }

  const std::string& path() const { return path_; }

 private:
  const json& get(const std::string& key) {
    auto it = j_.find(key);
    if (it == j_.end()) fail(path_ + "." + key, "missing required key");
    seen_.push_back(key);
    return *it;
  }

  const json& j_;
  std::string path_;
  std::vector<std::string> seen_;
};

Point3 parse_point(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 3 || !v[0].is_number() || !v[1].is_number() ||
      !v[2].is_number())
    fail(path, "must be an [x, y, z] array of numbers");
  return {v[0].get<double>(), v[1].get<double>(), v[2].get<double>()};
}

}  // namespace

Scenario scenario_from_json(const json& j) {
  if (!j.is_object()) fail("config", "top level must be an object");
  Scenario s;

  Section root(j, "config");
  {
    Section room(root.raw("room"), "room");
    s.room.length = room.number("length_m");
    s.room.width = room.number("width_m");
    s.room.height = room.number("height_m");
    room.finish();
  }
  {
    Section aps(root.raw("aps"), "aps");
    s.thz_sensing_ap_pos = parse_point(aps.raw("thz_sensing"), "aps.thz_sensing");
    s.thz_comm_ap_pos = parse_point(aps.raw("thz_comm"), "aps.thz_comm");
    const json& vlc = aps.raw("vlc");
    if (!vlc.is_array()) fail("aps.vlc", "must be an array of positions");
    for (std::size_t i = 0; i < vlc.size(); ++i) {
      VlcAp ap;
      ap.position = parse_point(vlc[i], "aps.vlc[" + std::to_string(i) + "]");
      s.vlc_aps.push_back(ap);
    }
    aps.finish();
  }
  {
    Section thz(root.raw("thz"), "thz");
    s.thz.carrier_frequency = thz.number("carrier_frequency_hz");
    s.thz.absorption_coefficient = thz.number("absorption_coefficient_per_m");
    s.thz.tx_gain = thz.number("tx_gain");
    s.thz.rx_gain = thz.number("rx_gain");
    s.thz.bandwidth = thz.number("bandwidth_hz");
    const std::string noise = thz.pick_one("noise_psd_dbm_per_hz", "noise_psd_w_per_hz");
    s.thz.noise_psd = noise == "noise_psd_dbm_per_hz" ? dbm_to_watt(thz.number(noise))
                                                      : thz.number(noise);
    s.thz.total_power = thz.number("total_power_w");
    s.thz.circuitry_power = thz.number("circuitry_power_w");
    if (thz.has("rho1_override")) s.thz.rho1_override = thz.number("rho1_override");
    thz.finish();
  }
  {
    Section vlc(root.raw("vlc"), "vlc");
    VlcAp shared;
    const std::string semi = vlc.pick_one("semi_angle_deg", "semi_angle_rad");
    shared.semi_angle = semi == "semi_angle_deg" ? deg_to_rad(vlc.number(semi))
                                                 : vlc.number(semi);
    shared.max_power = vlc.number("max_power_w");
    shared.filter_gain = vlc.number("filter_gain");
    shared.concentrator_index = vlc.number("concentrator_index");
    const std::string fov = vlc.pick_one("fov_deg", "fov_rad");
    shared.fov = fov == "fov_deg" ? deg_to_rad(vlc.number(fov)) : vlc.number(fov);
    shared.bandwidth = vlc.number("bandwidth_hz");
    const std::string noise = vlc.pick_one("noise_psd_dbm_per_mhz", "noise_psd_w_per_hz");
    // dBm/MHz reads as dBm/Hz after subtracting 60 dB.
    shared.noise_psd = noise == "noise_psd_dbm_per_mhz"
                           ? dbm_to_watt(vlc.number(noise) - 60.0)
                           : vlc.number(noise);
    shared.lumen_constant = vlc.number("lumen_constant_lm_per_w");
    vlc.finish();
    for (VlcAp& ap : s.vlc_aps) {
      const Point3 pos = ap.position;
      ap = shared;
      ap.position = pos;
    }
  }
  {
    Section users(root.raw("users"), "users");
    s.user_count = users.integer("count");
    s.user_template.position = {0.0, 0.0, users.number("height_m")};
    s.user_template.pd_area = users.number("pd_area_m2");
    s.user_template.responsivity = users.number("responsivity_a_per_w");
    s.user_template.oe_conversion = users.number("oe_conversion");
    const std::string fov = users.pick_one("fov_deg", "fov_rad");
    s.user_template.fov = fov == "fov_deg" ? deg_to_rad(users.number(fov))
                                           : users.number(fov);
    s.user_template.rcs = 1.0;
    users.finish();
  }
  {
    Section blk(root.raw("blockage"), "blockage");
    s.blockage_enabled = blk.boolean("enabled", false);
    s.blockage.hardcore_distance = blk.number("hardcore_distance_m");
    s.blockage.blocker_radius = blk.number("blocker_radius_m");
    s.blockage.blocker_height = blk.number("blocker_height_m");
    const std::string dens = blk.pick_one("density_per_m2", "baseline_intensity_per_m2");
    if (dens == "density_per_m2") {
      s.blockage.density = blk.number(dens);
      s.blockage.baseline_intensity = 0.0;
      s.blockage.density_derived = false;
    } else {
      s.blockage.baseline_intensity = blk.number(dens);
      if (s.blockage.baseline_intensity < 0.0)
        fail("blockage.baseline_intensity_per_m2", "must be nonnegative");
      if (!(s.blockage.hardcore_distance > 0.0))
        fail("blockage.hardcore_distance_m", "must be positive");
      s.blockage.density =
          effective_density(s.blockage.baseline_intensity, s.blockage.hardcore_distance);
      s.blockage.density_derived = true;
    }
    s.blockage.literal_pb_weighting = blk.boolean("literal_pb_weighting", false);
    blk.finish();
  }
  {
    Section th(root.raw("thresholds"), "thresholds");
    const std::string gs = th.pick_one("gamma_sens_db", "gamma_sens");
    s.thresholds.sensing_snr = gs == "gamma_sens_db" ? db_to_linear(th.number(gs))
                                                     : th.number(gs);
    const std::string gc = th.pick_one("gamma_comm_db", "gamma_comm");
    s.thresholds.comm_snr = gc == "gamma_comm_db" ? db_to_linear(th.number(gc))
                                                  : th.number(gc);
    const std::string gv = th.pick_one("gamma_vlc_db", "gamma_vlc");
    s.thresholds.vlc_snr = gv == "gamma_vlc_db" ? db_to_linear(th.number(gv))
                                                : th.number(gv);
    s.thresholds.false_alarm = th.number("fa_p");
    s.thresholds.detection = th.number("p_d_th");
    s.thresholds.min_illuminance = th.number("min_illuminance_lux");
    s.thresholds.alt_pd_form = th.boolean("alt_pd_form", false);
    th.finish();
  }
  s.mode = mode_from_name(root.text("mode"));
  root.finish();

  validate_scenario(s);
  return s;
}

json scenario_to_json(const Scenario& s) {
  json j;
  j["room"] = {{"length_m", s.room.length}, {"width_m", s.room.width},
               {"height_m", s.room.height}};
  j["aps"]["thz_sensing"] = {s.thz_sensing_ap_pos.x, s.thz_sensing_ap_pos.y,
                             s.thz_sensing_ap_pos.z};
  j["aps"]["thz_comm"] = {s.thz_comm_ap_pos.x, s.thz_comm_ap_pos.y, s.thz_comm_ap_pos.z};
  j["aps"]["vlc"] = json::array();
  for (const VlcAp& ap : s.vlc_aps)
    j["aps"]["vlc"].push_back({ap.position.x, ap.position.y, ap.position.z});

  j["thz"] = {{"carrier_frequency_hz", s.thz.carrier_frequency},
              {"absorption_coefficient_per_m", s.thz.absorption_coefficient},
              {"tx_gain", s.thz.tx_gain},
              {"rx_gain", s.thz.rx_gain},
              {"bandwidth_hz", s.thz.bandwidth},
              {"noise_psd_w_per_hz", s.thz.noise_psd},
              {"total_power_w", s.thz.total_power},
              {"circuitry_power_w", s.thz.circuitry_power}};
  if (s.thz.rho1_override) j["thz"]["rho1_override"] = *s.thz.rho1_override;

  const VlcAp ap = s.vlc_aps.empty() ? VlcAp{} : s.vlc_aps.front();
  j["vlc"] = {{"semi_angle_rad", ap.semi_angle},
              {"max_power_w", ap.max_power},
              {"filter_gain", ap.filter_gain},
              {"concentrator_index", ap.concentrator_index},
              {"fov_rad", ap.fov},
              {"bandwidth_hz", ap.bandwidth},
              {"noise_psd_w_per_hz", ap.noise_psd},
              {"lumen_constant_lm_per_w", ap.lumen_constant}};

  j["users"] = {{"count", s.user_count},
                {"height_m", s.user_template.position.z},
                {"pd_area_m2", s.user_template.pd_area},
                {"responsivity_a_per_w", s.user_template.responsivity},
                {"oe_conversion", s.user_template.oe_conversion},
                {"fov_rad", s.user_template.fov}};

  j["blockage"] = {{"enabled", s.blockage_enabled},
                   {"hardcore_distance_m", s.blockage.hardcore_distance},
                   {"blocker_radius_m", s.blockage.blocker_radius},
                   {"blocker_height_m", s.blockage.blocker_height},
                   {"literal_pb_weighting", s.blockage.literal_pb_weighting}};
  if (s.blockage.density_derived)
    j["blockage"]["baseline_intensity_per_m2"] = s.blockage.baseline_intensity;
  else
    j["blockage"]["density_per_m2"] = s.blockage.density;

  j["thresholds"] = {{"gamma_sens", s.thresholds.sensing_snr},
                     {"gamma_comm", s.thresholds.comm_snr},
                     {"gamma_vlc", s.thresholds.vlc_snr},
                     {"fa_p", s.thresholds.false_alarm},
                     {"p_d_th", s.thresholds.detection},
                     {"min_illuminance_lux", s.thresholds.min_illuminance},
                     {"alt_pd_form", s.thresholds.alt_pd_form}};
  j["mode"] = mode_name(s.mode);
  return j;
}

void apply_override(json& j, const std::string& assignment) {
  const std::size_t eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0)
    fail("--set", "override must look like section.key=value: " + assignment);
  const std::string path = assignment.substr(0, eq);
  const std::string value = assignment.substr(eq + 1);

  json* node = &j;
  std::size_t start = 0;
  while (true) {
    const std::size_t dot = path.find('.', start);
    const std::string key = path.substr(start, dot - start);
    if (key.empty()) fail("--set", "empty key segment in: " + assignment);
    if (dot == std::string::npos) {
      json parsed = json::parse(value, nullptr, false);
      (*node)[key] = parsed.is_discarded() ? json(value) : parsed;
      return;
    }
    node = &(*node)[key];
    start = dot + 1;
  }
}

Scenario load_scenario_string(const std::string& text,
                              const std::vector<std::string>& overrides) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail("config", "not valid JSON");
  for (const std::string& o : overrides) apply_override(j, o);
  return scenario_from_json(j);
}

Scenario load_scenario_file(const std::string& path,
                            const std::vector<std::string>& overrides) {
  std::ifstream in(path);
  if (!in) fail("config", "cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return load_scenario_string(buffer.str(), overrides);
}

std::string scenario_fingerprint(const Scenario& s) {
  const std::string dump = scenario_to_json(s).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : dump) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace isac
