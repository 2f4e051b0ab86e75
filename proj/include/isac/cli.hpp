#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "isac/scenario.hpp"

namespace isac {

// Exit codes shared by every subcommand so scripts can tell configuration
// mistakes from model infeasibility.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitInfeasibleSplit = 3;

struct CliOptions {
  std::string config_path;
  std::vector<std::string> overrides;  // repeated --set key=value
  std::uint64_t seed = 42;
  int trials = 1000;
  unsigned threads = 0;  // 0 = all cores
  std::string out_dir = "out";
};

enum class BlockageSel { kOn, kOff, kBoth };

struct SweepOptions {
  CliOptions base;
  std::string parameter;  // user_count | lambda_B | fa_p | total_power | rho1 | room_scale
  std::vector<double> values;
  std::vector<Mode> modes = {Mode::kProposed};
  BlockageSel blockage = BlockageSel::kOff;
};

int cmd_validate(const CliOptions& opt);
int cmd_run(const CliOptions& opt);
int cmd_sweep(const SweepOptions& opt);
int cmd_figures(const CliOptions& opt);

/// Copy of `base` with one sweep parameter applied and revalidated.
Scenario apply_sweep_value(const Scenario& base, const std::string& parameter, double value);

}  // namespace isac
