#include "isac/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>

#include "isac/config.hpp"
#include "isac/engine.hpp"
#include "isac/report.hpp"
#include "isac/rng.hpp"
#include "isac/units.hpp"

namespace isac {

namespace {

int load_or_fail(const CliOptions& opt, Scenario& out) {
  try {
    out = load_scenario_file(opt.config_path, opt.overrides);
  } catch (const ValidationError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  }
  return kExitOk;
}

std::vector<std::string> sweep_columns() {
  std::vector<std::string> cols = {"value", "mode", "blockage"};
  for (const char* name : TrialScalars::names()) {
    cols.push_back(std::string("mean_") + name);
    cols.push_back(std::string("std_") + name);
  }
  return cols;
}

void append_aggregate_row(CsvBuilder& csv, const std::string& value,
                          const std::string& mode, const std::string& blockage,
                          const AggregateResult& agg) {
  std::vector<std::string> cells = {value, mode, blockage};
  for (std::size_t k = 0; k < TrialScalars::kCount; ++k) {
    cells.push_back(format_float(agg.mean[k]));
    cells.push_back(format_float(agg.stddev[k]));
  }
  csv.text_row(cells);
}

const char* blockage_name(bool enabled) { return enabled ? "on" : "off"; }

}  // namespace

Scenario apply_sweep_value(const Scenario& base, const std::string& parameter,
                           double value) {
  Scenario s = base;
  if (parameter == "user_count") {
    s.user_count = static_cast<int>(std::llround(value));
  } else if (parameter == "lambda_B") {
    s.blockage.density = value;
    s.blockage.baseline_intensity = 0.0;
    s.blockage.density_derived = false;
  } else if (parameter == "fa_p") {
    s.thresholds.false_alarm = value;
  } else if (parameter == "total_power") {
    s.thz.total_power = value;
  } else if (parameter == "rho1") {
    s.thz.rho1_override = value;
  } else if (parameter == "room_scale") {
    if (!(value > 0.0)) throw ValidationError("sweep.values", "room_scale must be positive");
    s.room.length = base.room.length * value;
    s.room.width = base.room.width * value;
    auto scale_xy = [&](Point3 p) {
      return Point3{p.x * value, p.y * value, p.z};
    };
    s.thz_sensing_ap_pos = scale_xy(base.thz_sensing_ap_pos);
    s.thz_comm_ap_pos = scale_xy(base.thz_comm_ap_pos);
    for (std::size_t l = 0; l < s.vlc_aps.size(); ++l)
      s.vlc_aps[l].position = scale_xy(base.vlc_aps[l].position);
  } else {
    throw ValidationError("sweep.param",
                          "unknown sweep parameter '" + parameter + "'");
  }
  validate_scenario(s);
  return s;
}

int cmd_validate(const CliOptions& opt) {
  Scenario s;
  if (int rc = load_or_fail(opt, s); rc != kExitOk) return rc;
  std::cout << "ok fingerprint=" << scenario_fingerprint(s) << "\n";
  return kExitOk;
}

int cmd_run(const CliOptions& opt) {
  Scenario s;
  if (int rc = load_or_fail(opt, s); rc != kExitOk) return rc;

  const TrialResult reporting = run_trial(s, derive_seed(opt.seed, 0));
  if (!reporting.split.sensing_ok && !s.thz.rho1_override) {
    std::cerr << "infeasible power split: sensing requires fraction "
              << format_float(reporting.split.required_fraction) << " > 1\n";
    return kExitInfeasibleSplit;
  }

  const AggregateResult agg = run_monte_carlo(s, opt.trials, opt.seed, opt.threads);
  const std::filesystem::path out(opt.out_dir);
  write_file((out / "summary.json").string(), summary_json(s, agg, opt.seed));
  write_file((out / "per_user.csv").string(), per_user_csv(s, reporting, opt.seed));
  std::cout << (out / "summary.json").string() << "\n"
            << (out / "per_user.csv").string() << "\n";
  return kExitOk;
}

int cmd_sweep(const SweepOptions& opt) {
  Scenario base;
  if (int rc = load_or_fail(opt.base, base); rc != kExitOk) return rc;
  if (opt.values.empty()) {
    std::cerr << "config error: sweep.values: must be nonempty\n";
    return kExitConfigError;
  }

  std::vector<bool> blockage_states;
  if (opt.blockage == BlockageSel::kOn) blockage_states = {true};
  else if (opt.blockage == BlockageSel::kOff) blockage_states = {false};
  else blockage_states = {false, true};

  CsvBuilder csv;
  csv.comment("isacsim sweep: " + opt.parameter);
  csv.comment("fingerprint: " + scenario_fingerprint(base));
  csv.comment("trials: " + std::to_string(opt.base.trials) +
              " seed: " + std::to_string(opt.base.seed));
  csv.header(sweep_columns());

  try {
    for (double value : opt.values) {
      for (Mode mode : opt.modes) {
        for (bool blocked : blockage_states) {
          Scenario s = apply_sweep_value(base, opt.parameter, value);
          s.mode = mode;
          s.blockage_enabled = blocked;
          validate_scenario(s);
          const AggregateResult agg =
              run_monte_carlo(s, opt.base.trials, opt.base.seed, opt.base.threads);
          append_aggregate_row(csv, format_float(value), mode_name(mode),
                               blockage_name(blocked), agg);
        }
      }
    }
  } catch (const ValidationError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  }

  const std::filesystem::path out(opt.base.out_dir);
  const std::string path = (out / ("sweep_" + opt.parameter + ".csv")).string();
  write_file(path, csv.str());
  std::cout << path << "\n";
  return kExitOk;
}

namespace {

// One figure recipe: a fixed grid of scenario variations whose aggregates
// land in a single CSV. Trials and base seed come from the command line.
struct FigureContext {
  const Scenario& base;
  const CliOptions& opt;
  std::string fingerprint;
};

using RowFn = std::function<void(CsvBuilder&)>;

void write_figure(const FigureContext& ctx, const std::string& filename,
                  const std::string& description,
                  const std::vector<std::string>& columns, const RowFn& rows) {
  CsvBuilder csv;
  csv.comment("isacsim figure data: " + description);
  csv.comment("fingerprint: " + ctx.fingerprint);
  csv.comment("trials: " + std::to_string(ctx.opt.trials) +
              " seed: " + std::to_string(ctx.opt.seed));
  csv.header(columns);
  rows(csv);
  write_file((std::filesystem::path(ctx.opt.out_dir) / filename).string(), csv.str());
}

AggregateResult aggregate_point(const FigureContext& ctx, const Scenario& s) {
  return run_monte_carlo(s, ctx.opt.trials, ctx.opt.seed, ctx.opt.threads);
}

constexpr std::size_t kRho1 = 0, kMeanPd = 2, kScp = 3, kAvgSe = 4, kAvgEe = 5,
                      kSensRate = 6, kCommRate = 7, kTotalPower = 8, kThzCount = 9,
                      kVlcCount = 10, kUnservedCount = 11;

}  // namespace

int cmd_figures(const CliOptions& opt) {
  Scenario base;
  if (int rc = load_or_fail(opt, base); rc != kExitOk) return rc;
  FigureContext ctx{base, opt, scenario_fingerprint(base)};

  const std::vector<double> fa_grid = {1e-5, 1e-4, 1e-3, 1e-2, 1e-1, 0.9999};
  const std::vector<double> lambda_grid = {2, 4, 6, 8};

  // Power split vs user count for three THz budgets, blockage off.
  write_figure(ctx, "fig5_rho1.csv", "sensing power fraction vs user count",
               {"n_users", "p_w_w", "mean_rho1", "std_rho1"}, [&](CsvBuilder& csv) {
                 for (int n = 1; n <= 10; ++n) {
                   for (double pw : {2.0, 4.0, 6.0}) {
                     Scenario s = apply_sweep_value(base, "user_count", n);
                     s.thz.total_power = pw;
                     s.blockage_enabled = false;
                     s.mode = Mode::kProposed;
                     const AggregateResult agg = aggregate_point(ctx, s);
                     csv.row({static_cast<double>(n), pw, agg.mean[kRho1],
                              agg.stddev[kRho1]});
                   }
                 }
               });

  // Detection probability vs false alarm for three sensing thresholds.
  write_figure(ctx, "fig6_pd_vs_fap.csv", "detection probability vs false alarm",
               {"fa_p", "gamma_sens_db", "blockage", "mean_p_d", "std_p_d"},
               [&](CsvBuilder& csv) {
                 for (double fa : fa_grid) {
                   for (double gdb : {-10.0, -5.0, 0.0}) {
                     for (bool blocked : {false, true}) {
                       Scenario s = apply_sweep_value(base, "fa_p", fa);
                       s.thresholds.sensing_snr = db_to_linear(gdb);
                       s.blockage_enabled = blocked;
                       const AggregateResult agg = aggregate_point(ctx, s);
                       csv.text_row({format_float(fa), format_float(gdb),
                                     blockage_name(blocked), format_float(agg.mean[kMeanPd]),
                                     format_float(agg.stddev[kMeanPd])});
                     }
                   }
                 }
               });

  // Association split vs false alarm.
  write_figure(ctx, "fig7_assoc_vs_fap.csv", "user association vs false alarm",
               {"fa_p", "blockage", "mean_thz_users", "mean_vlc_users",
                "mean_unserved"},
               [&](CsvBuilder& csv) {
                 for (double fa : fa_grid) {
                   for (bool blocked : {false, true}) {
                     Scenario s = apply_sweep_value(base, "fa_p", fa);
                     s.blockage_enabled = blocked;
                     const AggregateResult agg = aggregate_point(ctx, s);
                     csv.text_row({format_float(fa), blockage_name(blocked),
                                   format_float(agg.mean[kThzCount]),
                                   format_float(agg.mean[kVlcCount]),
                                   format_float(agg.mean[kUnservedCount])});
                   }
                 }
               });

  // Detection and sensing coverage vs user count.
  write_figure(ctx, "fig8_pd_scp_vs_n.csv", "detection and coverage vs user count",
               {"n_users", "blockage", "mean_p_d", "mean_sc_p"}, [&](CsvBuilder& csv) {
                 for (int n = 1; n <= 10; ++n) {
                   for (bool blocked : {false, true}) {
                     Scenario s = apply_sweep_value(base, "user_count", n);
                     s.blockage_enabled = blocked;
                     const AggregateResult agg = aggregate_point(ctx, s);
                     csv.text_row({std::to_string(n), blockage_name(blocked),
                                   format_float(agg.mean[kMeanPd]),
                                   format_float(agg.mean[kScp])});
                   }
                 }
               });

  // Total consumed power vs user count, optimized vs all-on baseline.
  write_figure(ctx, "fig9_power_vs_n.csv", "total power vs user count",
               {"n_users", "mode", "mean_total_power_w", "std_total_power_w"},
               [&](CsvBuilder& csv) {
                 for (int n = 1; n <= 10; ++n) {
                   for (Mode mode : {Mode::kProposed, Mode::kNonOptimized}) {
                     Scenario s = apply_sweep_value(base, "user_count", n);
                     s.mode = mode;
                     const AggregateResult agg = aggregate_point(ctx, s);
                     csv.text_row({std::to_string(n), mode_name(mode),
                                   format_float(agg.mean[kTotalPower]),
                                   format_float(agg.stddev[kTotalPower])});
                   }
                 }
               });

  // Detection and coverage vs blockage density.
  write_figure(ctx, "fig10_pd_scp_vs_lambda.csv",
               "detection and coverage vs blockage density",
               {"lambda_b", "mean_p_d", "mean_sc_p"}, [&](CsvBuilder& csv) {
                 for (double lam : lambda_grid) {
                   Scenario s = apply_sweep_value(base, "lambda_B", lam);
                   s.blockage_enabled = true;
                   const AggregateResult agg = aggregate_point(ctx, s);
                   csv.row({lam, agg.mean[kMeanPd], agg.mean[kScp]});
                 }
               });

  // Association split vs blockage density.
  write_figure(ctx, "fig11_assoc_vs_lambda.csv", "user association vs blockage density",
               {"lambda_b", "mean_thz_users", "mean_vlc_users", "mean_unserved"},
               [&](CsvBuilder& csv) {
                 for (double lam : lambda_grid) {
                   Scenario s = apply_sweep_value(base, "lambda_B", lam);
                   s.blockage_enabled = true;
                   const AggregateResult agg = aggregate_point(ctx, s);
                   csv.row({lam, agg.mean[kThzCount], agg.mean[kVlcCount],
                            agg.mean[kUnservedCount]});
                 }
               });

  // Average spectral efficiency vs user count, proposed vs standalone.
  write_figure(ctx, "fig12_se_vs_n.csv", "average spectral efficiency vs user count",
               {"n_users", "mode", "blockage", "mean_avg_se", "std_avg_se"},
               [&](CsvBuilder& csv) {
                 for (int n = 2; n <= 10; ++n) {
                   for (Mode mode : {Mode::kProposed, Mode::kStandaloneThz}) {
                     for (bool blocked : {false, true}) {
                       Scenario s = apply_sweep_value(base, "user_count", n);
                       s.mode = mode;
                       s.blockage_enabled = blocked;
                       const AggregateResult agg = aggregate_point(ctx, s);
                       csv.text_row({std::to_string(n), mode_name(mode),
                                     blockage_name(blocked),
                                     format_float(agg.mean[kAvgSe]),
                                     format_float(agg.stddev[kAvgSe])});
                     }
                   }
                 }
               });

  // Average energy efficiency vs user count, optimized vs baseline.
  write_figure(ctx, "fig14_ee_vs_n.csv", "average energy efficiency vs user count",
               {"n_users", "mode", "blockage", "mean_avg_ee", "std_avg_ee"},
               [&](CsvBuilder& csv) {
                 for (int n = 1; n <= 10; ++n) {
                   for (Mode mode : {Mode::kProposed, Mode::kNonOptimized}) {
                     for (bool blocked : {false, true}) {
                       Scenario s = apply_sweep_value(base, "user_count", n);
                       s.mode = mode;
                       s.blockage_enabled = blocked;
                       const AggregateResult agg = aggregate_point(ctx, s);
                       csv.text_row({std::to_string(n), mode_name(mode),
                                     blockage_name(blocked),
                                     format_float(agg.mean[kAvgEe]),
                                     format_float(agg.stddev[kAvgEe])});
                     }
                   }
                 }
               });

  // Average energy efficiency vs blockage density.
  write_figure(ctx, "fig15_ee_vs_lambda.csv", "average energy efficiency vs density",
               {"lambda_b", "mode", "mean_avg_ee", "std_avg_ee"}, [&](CsvBuilder& csv) {
                 for (double lam : lambda_grid) {
                   for (Mode mode : {Mode::kProposed, Mode::kNonOptimized}) {
                     Scenario s = apply_sweep_value(base, "lambda_B", lam);
                     s.blockage_enabled = true;
                     s.mode = mode;
                     const AggregateResult agg = aggregate_point(ctx, s);
                     csv.text_row({format_float(lam), mode_name(mode),
                                   format_float(agg.mean[kAvgEe]),
                                   format_float(agg.stddev[kAvgEe])});
                   }
                 }
               });

  // Sensing vs communication rates against user count.
  write_figure(ctx, "fig16_rates_vs_n.csv", "link rates vs user count",
               {"n_users", "mode", "blockage", "mean_sens_rate_bps",
                "mean_comm_rate_bps"},
               [&](CsvBuilder& csv) {
                 for (int n = 2; n <= 10; ++n) {
                   for (Mode mode : {Mode::kProposed, Mode::kStandaloneThz}) {
                     for (bool blocked : {false, true}) {
                       Scenario s = apply_sweep_value(base, "user_count", n);
                       s.mode = mode;
                       s.blockage_enabled = blocked;
                       const AggregateResult agg = aggregate_point(ctx, s);
                       csv.text_row({std::to_string(n), mode_name(mode),
                                     blockage_name(blocked),
                                     format_float(agg.mean[kSensRate]),
                                     format_float(agg.mean[kCommRate])});
                     }
                   }
                 }
               });

  // Sensing vs communication rates against blockage density.
  write_figure(ctx, "fig17_rates_vs_lambda.csv", "link rates vs blockage density",
               {"lambda_b", "mode", "mean_sens_rate_bps", "mean_comm_rate_bps"},
               [&](CsvBuilder& csv) {
                 for (double lam : lambda_grid) {
                   for (Mode mode : {Mode::kProposed, Mode::kStandaloneThz}) {
                     Scenario s = apply_sweep_value(base, "lambda_B", lam);
                     s.blockage_enabled = true;
                     s.mode = mode;
                     const AggregateResult agg = aggregate_point(ctx, s);
                     csv.text_row({format_float(lam), mode_name(mode),
                                   format_float(agg.mean[kSensRate]),
                                   format_float(agg.mean[kCommRate])});
                   }
                 }
               });

  std::cout << opt.out_dir << "\n";
  return kExitOk;
}

}  // namespace isac
