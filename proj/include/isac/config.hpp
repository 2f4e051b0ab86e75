#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "isac/scenario.hpp"

namespace isac {

// JSON configuration boundary. Inputs may carry dB / dBm / degree quantities
// (keys suffixed _db, _dbm_*, _deg); everything is converted to linear SI on
// parse and the canonical dump uses the linear keys, so dump -> parse is an
// exact round trip. Unknown keys are rejected.

/// Parses and validates; throws ValidationError with the config field path.
Scenario scenario_from_json(const nlohmann::json& j);

/// Canonical linear-unit dump; scenario_from_json(scenario_to_json(s)) == s.
nlohmann::json scenario_to_json(const Scenario& s);

/// Applies one `key.path=value` override to a raw config document. The value
/// is parsed as JSON when possible and taken as a string otherwise.
void apply_override(nlohmann::json& j, const std::string& assignment);

Scenario load_scenario_string(const std::string& text,
                              const std::vector<std::string>& overrides = {});
Scenario load_scenario_file(const std::string& path,
                            const std::vector<std::string>& overrides = {});

/// FNV-1a hash of the canonical dump, as 16 hex digits; stamped into every
/// report for provenance.
std::string scenario_fingerprint(const Scenario& s);

}  // namespace isac
