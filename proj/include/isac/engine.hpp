#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "isac/association.hpp"
#include "isac/metrics.hpp"
#include "isac/power.hpp"
#include "isac/scenario.hpp"
#include "isac/sensing.hpp"

namespace isac {

// One Monte Carlo realisation: place users, solve the THz power split, run
// detection, associate, assign VLC powers per the scenario mode, score.
struct TrialResult {
  std::vector<UserRx> users;
  std::vector<DetectionOutcome> detections;
  SplitSolution split;
  Association association;
  MilpSolution milp;
  MetricsSnapshot metrics;
};

// Per-trial scalars aggregated across a Monte Carlo run, in the stable order
// used by every report writer.
struct TrialScalars {
  static constexpr std::size_t kCount = 14;
  std::array<double, kCount> values{};

  static const std::array<const char*, kCount>& names();

  double& operator[](std::size_t i) { return values[i]; }
  double operator[](std::size_t i) const { return values[i]; }
};

TrialScalars trial_scalars(const TrialResult& trial);

struct AggregateResult {
  int trials = 0;
  TrialScalars mean;
  TrialScalars stddev;  // sample standard deviation; zero for a single trial
};

TrialResult run_trial(const Scenario& s, std::uint64_t seed);

/// Aggregates `trials` independent trials whose seeds derive from base_seed.
/// Bit-reproducible for fixed inputs regardless of the worker count.
AggregateResult run_monte_carlo(const Scenario& s, int trials, std::uint64_t base_seed,
                                unsigned threads = 0);

/// Raw per-trial scalar rows in trial order (helper for paired comparisons).
std::vector<TrialScalars> run_trials(const Scenario& s, int trials,
                                     std::uint64_t base_seed, unsigned threads = 0);

AggregateResult aggregate(const std::vector<TrialScalars>& rows);

}  // namespace isac
