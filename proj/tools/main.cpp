#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "isac/cli.hpp"

namespace {

void add_common(CLI::App* cmd, isac::CliOptions& opt, bool with_run_flags) {
  cmd->add_option("--config", opt.config_path, "Scenario configuration (JSON)")
      ->required();
  cmd->add_option("--set", opt.overrides,
                  "Override a config value, e.g. --set blockage.enabled=false");
  if (with_run_flags) {
    cmd->add_option("--seed", opt.seed, "Base seed for the trial streams");
    cmd->add_option("--trials", opt.trials, "Monte Carlo trials per point")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--threads", opt.threads,
                    "Worker threads (0 = all cores); results do not depend on it");
    cmd->add_option("--out", opt.out_dir, "Output directory");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Indoor THz sensing with hybrid THz/VLC communication simulator"};
  app.require_subcommand(1);

  isac::CliOptions validate_opt;
  CLI::App* validate = app.add_subcommand("validate", "Check a configuration file");
  add_common(validate, validate_opt, false);

  isac::CliOptions run_opt;
  CLI::App* run = app.add_subcommand("run", "Run one Monte Carlo experiment");
  add_common(run, run_opt, true);

  isac::SweepOptions sweep_opt;
  std::string sweep_modes = "proposed";
  std::string sweep_blockage = "off";
  CLI::App* sweep = app.add_subcommand("sweep", "Sweep one parameter");
  add_common(sweep, sweep_opt.base, true);
  sweep->add_option("--param", sweep_opt.parameter,
                    "user_count | lambda_B | fa_p | total_power | rho1 | room_scale")
      ->required();
  sweep->add_option("--values", sweep_opt.values, "Sweep values")
      ->required()
      ->delimiter(',');
  sweep->add_option("--modes", sweep_modes,
                    "Comma list of proposed,standalone_thz,non_optimized");
  sweep->add_option("--blockage", sweep_blockage, "on | off | both");

  isac::CliOptions fig_opt;
  CLI::App* figures = app.add_subcommand("figures", "Emit every figure dataset");
  add_common(figures, fig_opt, true);

  CLI11_PARSE(app, argc, argv);

  if (validate->parsed()) return isac::cmd_validate(validate_opt);
  if (run->parsed()) return isac::cmd_run(run_opt);
  if (figures->parsed()) return isac::cmd_figures(fig_opt);

  if (sweep->parsed()) {
    sweep_opt.modes.clear();
    std::size_t start = 0;
    while (start <= sweep_modes.size()) {
      const std::size_t comma = sweep_modes.find(',', start);
      const std::string name = sweep_modes.substr(start, comma - start);
      try {
        if (!name.empty()) sweep_opt.modes.push_back(isac::mode_from_name(name));
      } catch (const isac::ValidationError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return isac::kExitConfigError;
      }
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (sweep_blockage == "on") sweep_opt.blockage = isac::BlockageSel::kOn;
    else if (sweep_blockage == "off") sweep_opt.blockage = isac::BlockageSel::kOff;
    else if (sweep_blockage == "both") sweep_opt.blockage = isac::BlockageSel::kBoth;
    else {
      std::fprintf(stderr, "config error: --blockage must be on, off or both\n");
      return isac::kExitConfigError;
    }
    return isac::cmd_sweep(sweep_opt);
  }
  return isac::kExitOk;
}
