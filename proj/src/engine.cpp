#include "isac/engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "isac/links.hpp"
#include "isac/rng.hpp"

namespace isac {

const std::array<const char*, TrialScalars::kCount>& TrialScalars::names() {
  static const std::array<const char*, kCount> kNames = {
      "rho1",          "sensing_feasible", "mean_p_d",       "sc_p",
      "avg_se",        "avg_ee",           "avg_sens_rate",  "avg_comm_rate",
      "total_power",   "thz_user_count",   "vlc_user_count", "unserved_count",
      "detected_count", "min_illuminance_ok"};
  return kNames;
}

TrialScalars trial_scalars(const TrialResult& trial) {
  TrialScalars row;
  double p_d_sum = 0.0;
  double detected = 0.0;
  for (const DetectionOutcome& d : trial.detections) {
    p_d_sum += d.p_d;
    detected += d.detected ? 1.0 : 0.0;
  }
  const double n = static_cast<double>(trial.detections.size());
  row[0] = trial.split.rho1;
  row[1] = trial.split.sensing_ok ? 1.0 : 0.0;
  row[2] = n > 0.0 ? p_d_sum / n : 0.0;
  row[3] = trial.metrics.sc_p;
  row[4] = trial.metrics.avg_se;
  row[5] = trial.metrics.avg_ee;
  row[6] = trial.metrics.avg_sens_rate;
  row[7] = trial.metrics.avg_comm_rate;
  row[8] = trial.metrics.total_power;
  row[9] = trial.metrics.thz_user_count;
  row[10] = trial.metrics.vlc_user_count;
  row[11] = trial.metrics.unserved_count;
  row[12] = detected;
  row[13] = trial.metrics.min_illuminance_ok ? 1.0 : 0.0;
  return row;
}

TrialResult run_trial(const Scenario& s, std::uint64_t seed) {
  TrialResult trial;
  trial.users = place_users(s, seed);
  const std::size_t n = trial.users.size();

  std::vector<double> sensing_gains(n);
  std::vector<double> comm_gains(n);
  for (std::size_t i = 0; i < n; ++i) {
    sensing_gains[i] = sensing_link_gain(s, trial.users[i]);
    comm_gains[i] = thz_comm_link_gain(s, trial.users[i]);
  }

  trial.split = solve_power_split(s, sensing_gains, comm_gains);
  const double rho1 = trial.split.rho1;

  trial.detections.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    DetectionOutcome& d = trial.detections[i];
    d.snr_sens = sensing_snr_from_gain(s, sensing_gains[i], rho1);
    d.p_d = s.thresholds.alt_pd_form
                ? detection_probability_alt(d.snr_sens, s.thresholds.false_alarm)
                : detection_probability(d.snr_sens, s.thresholds.false_alarm);
    // The split solver pins the worst user exactly onto gamma_sens; a few ulp
    // of slack keep that binding user counted as covered.
    d.covered = d.snr_sens >= s.thresholds.sensing_snr * (1.0 - 1e-9);
    d.detected = d.p_d > s.thresholds.detection;
  }

  std::vector<double> thz_snrs(n);
  std::vector<std::vector<double>> vlc_gains(n);
  std::vector<std::vector<double>> vlc_snr_pmax(n);
  for (std::size_t i = 0; i < n; ++i) {
    thz_snrs[i] = thz_comm_snr_from_gain(s, comm_gains[i], rho1);
    vlc_gains[i].resize(s.vlc_aps.size());
    vlc_snr_pmax[i].resize(s.vlc_aps.size());
    for (std::size_t l = 0; l < s.vlc_aps.size(); ++l) {
      vlc_gains[i][l] = vlc_link_gain(s, s.vlc_aps[l], trial.users[i]);
      vlc_snr_pmax[i][l] =
          vlc_snr_at_power(s, vlc_gains[i][l], s.vlc_aps[l].max_power);
    }
  }

  trial.association = associate_users(trial.detections, thz_snrs, vlc_snr_pmax,
                                      s.thresholds);

  if (s.mode == Mode::kStandaloneThz) {
    // No VLC fallback: everyone below the detection threshold stays unserved.
    for (std::size_t i = 0; i < n; ++i) {
      if (trial.association.decision[i] == Decision::kVlc) {
        trial.association.decision[i] = Decision::kUnserved;
        trial.association.serving_vlc_ap[i] = -1;
        trial.association.achieved_snr[i] = 0.0;
      }
    }
    trial.milp = minimize_network_power({}, static_cast<int>(s.vlc_aps.size()), s);
  } else {
    std::vector<VlcAssignment> assignments;
    for (std::size_t i = 0; i < n; ++i) {
      if (trial.association.decision[i] != Decision::kVlc) continue;
      const int l = trial.association.serving_vlc_ap[i];
      assignments.push_back({static_cast<int>(i), l,
                             vlc_required_power(s, vlc_gains[i][static_cast<std::size_t>(l)])});
    }
    if (s.mode == Mode::kNonOptimized) {
      trial.milp = non_optimized_power(s);
    } else {
      trial.milp = minimize_network_power(assignments, static_cast<int>(s.vlc_aps.size()), s);
      for (int u : trial.milp.unserved) {
        const std::size_t i = static_cast<std::size_t>(u);
        trial.association.decision[i] = Decision::kUnserved;
        trial.association.serving_vlc_ap[i] = -1;
        trial.association.achieved_snr[i] = 0.0;
      }
    }
    // Refine VLC SNRs to the executed per-AP powers.
    for (std::size_t i = 0; i < n; ++i) {
      if (trial.association.decision[i] != Decision::kVlc) continue;
      const std::size_t l = static_cast<std::size_t>(trial.association.serving_vlc_ap[i]);
      trial.association.achieved_snr[i] =
          vlc_snr_at_power(s, vlc_gains[i][l], trial.milp.power[l]);
    }
  }

  trial.metrics = compute_metrics(s, trial.users, trial.detections, trial.association,
                                  trial.milp);
  return trial;
}

std::vector<TrialScalars> run_trials(const Scenario& s, int trials,
                                     std::uint64_t base_seed, unsigned threads) {
  if (trials < 1) throw std::domain_error("run_trials: at least one trial required");
  std::vector<TrialScalars> rows(static_cast<std::size_t>(trials));

  unsigned workers = threads == 0 ? std::thread::hardware_concurrency() : threads;
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(trials)));

  auto work = [&](unsigned worker) {
    for (int t = static_cast<int>(worker); t < trials; t += static_cast<int>(workers)) {
      rows[static_cast<std::size_t>(t)] =
          trial_scalars(run_trial(s, derive_seed(base_seed, static_cast<std::uint64_t>(t))));
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (std::thread& th : pool) th.join();
  }
  return rows;
}

AggregateResult aggregate(const std::vector<TrialScalars>& rows) {
  if (rows.empty()) throw std::domain_error("aggregate: no trials");
  AggregateResult out;
  out.trials = static_cast<int>(rows.size());

  // Kahan-compensated accumulation in trial order keeps the result identical
  // however the trials were scheduled.
  for (std::size_t k = 0; k < TrialScalars::kCount; ++k) {
    double sum = 0.0, comp = 0.0;
    for (const TrialScalars& r : rows) {
      const double y = r[k] - comp;
      const double t = sum + y;
      comp = (t - sum) - y;
      sum = t;
    }
    out.mean[k] = sum / static_cast<double>(rows.size());
  }
  for (std::size_t k = 0; k < TrialScalars::kCount; ++k) {
    if (rows.size() < 2) {
      out.stddev[k] = 0.0;
      continue;
    }
    double sq = 0.0, comp = 0.0;
    for (const TrialScalars& r : rows) {
      const double d = r[k] - out.mean[k];
      const double y = d * d - comp;
      const double t = sq + y;
      comp = (t - sq) - y;
      sq = t;
    }
    out.stddev[k] = std::sqrt(sq / static_cast<double>(rows.size() - 1));
  }
  return out;
}

AggregateResult run_monte_carlo(const Scenario& s, int trials, std::uint64_t base_seed,
                                unsigned threads) {
  return aggregate(run_trials(s, trials, base_seed, threads));
}

}  // namespace isac
