#include "isac/report.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

#include "isac/config.hpp"

namespace isac {

std::string format_float(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

void CsvBuilder::comment(const std::string& line) {
  out_ += "# " + line + "\n";
}

void CsvBuilder::header(const std::vector<std::string>& columns) {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out_ += ',';
    out_ += columns[i];
  }
  out_ += '\n';
}

void CsvBuilder::row(const std::vector<double>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ += ',';
    out_ += format_float(cells[i]);
  }
  out_ += '\n';
}

void CsvBuilder::text_row(const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ += ',';
    out_ += cells[i];
  }
  out_ += '\n';
}

// The worker count is deliberately absent: output bytes must not depend on it.
std::string summary_json(const Scenario& s, const AggregateResult& agg,
                         std::uint64_t base_seed) {
  nlohmann::json j;
  j["fingerprint"] = scenario_fingerprint(s);
  j["trials"] = agg.trials;
  j["base_seed"] = base_seed;
  j["mode"] = mode_name(s.mode);
  j["blockage_enabled"] = s.blockage_enabled;
  const auto& names = TrialScalars::names();
  for (std::size_t k = 0; k < TrialScalars::kCount; ++k) {
    j["metrics"][names[k]] = {{"mean", agg.mean[k]}, {"std", agg.stddev[k]}};
  }
  j["config"] = scenario_to_json(s);
  return j.dump(2) + "\n";
}

std::string per_user_csv(const Scenario& s, const TrialResult& trial,
                         std::uint64_t base_seed) {
  CsvBuilder csv;
  csv.comment("isacsim per-user report");
  csv.comment("fingerprint: " + scenario_fingerprint(s));
  csv.comment("base_seed: " + std::to_string(base_seed) + " (reporting trial 0)");
  csv.header({"user", "x_m", "y_m", "rcs_m2", "snr_sens", "p_d", "covered", "detected",
              "association", "serving_vlc_ap", "comm_snr", "sens_rate_bps",
              "comm_rate_bps"});
  for (std::size_t i = 0; i < trial.users.size(); ++i) {
    const UserRx& u = trial.users[i];
    const DetectionOutcome& d = trial.detections[i];
    const Decision dec = trial.association.decision[i];
    const char* assoc = dec == Decision::kThzComm ? "thz"
                        : dec == Decision::kVlc   ? "vlc"
                                                  : "unserved";
    const double comm_snr = trial.association.achieved_snr[i];
    const double bw = dec == Decision::kThzComm ? s.thz.bandwidth
                      : dec == Decision::kVlc
                          ? s.vlc_aps[static_cast<std::size_t>(
                                          trial.association.serving_vlc_ap[i])]
                                .bandwidth
                          : 0.0;
    csv.text_row({std::to_string(i), format_float(u.position.x), format_float(u.position.y),
                  format_float(u.rcs), format_float(d.snr_sens), format_float(d.p_d),
                  d.covered ? "1" : "0", d.detected ? "1" : "0", assoc,
                  std::to_string(trial.association.serving_vlc_ap[i]),
                  format_float(comm_snr),
                  format_float(s.thz.bandwidth * std::log2(1.0 + d.snr_sens)),
                  format_float(dec == Decision::kUnserved
                                   ? 0.0
                                   : bw * std::log2(1.0 + comm_snr))});
  }
  return csv.str();
}

void write_file(const std::string& path, const std::string& content) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace isac
