#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "isac/engine.hpp"
#include "isac/scenario.hpp"

namespace isac {

/// Floats in CSV output carry 9 significant digits.
std::string format_float(double v);

// Line-oriented CSV assembly: '#'-prefixed provenance comments, one header
// row, then data rows rendered through format_float.
class CsvBuilder {
 public:
  void comment(const std::string& line);
  void header(const std::vector<std::string>& columns);
  void row(const std::vector<double>& cells);
  void text_row(const std::vector<std::string>& cells);
  const std::string& str() const { return out_; }

 private:
  std::string out_;
};

/// summary.json payload for one Monte Carlo run.
std::string summary_json(const Scenario& s, const AggregateResult& agg,
                         std::uint64_t base_seed);

/// per_user.csv payload for the designated reporting trial.
std::string per_user_csv(const Scenario& s, const TrialResult& trial,
                         std::uint64_t base_seed);

void write_file(const std::string& path, const std::string& content);

}  // namespace isac
