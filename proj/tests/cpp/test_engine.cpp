#include <cmath>
#include <vector>

#include "doctest.h"
#include "isac/engine.hpp"
#include "isac/links.hpp"
#include "isac/rng.hpp"

using namespace isac;

TEST_CASE("run_trial is deterministic in scenario and seed") {
  const Scenario s = default_scenario();
  const TrialResult a = run_trial(s, 4242);
  const TrialResult b = run_trial(s, 4242);
  CHECK(a.split.rho1 == b.split.rho1);
  CHECK(a.metrics.avg_se == b.metrics.avg_se);
  CHECK(a.milp.objective == b.milp.objective);
  for (std::size_t i = 0; i < a.users.size(); ++i) {
    CHECK(a.detections[i].p_d == b.detections[i].p_d);
    CHECK(a.association.decision[i] == b.association.decision[i]);
    CHECK(a.association.achieved_snr[i] == b.association.achieved_snr[i]);
  }
}

TEST_CASE("every user lands in exactly one bucket") {
  for (Mode mode : {Mode::kProposed, Mode::kStandaloneThz, Mode::kNonOptimized}) {
    for (bool blocked : {false, true}) {
      Scenario s = default_scenario();
      s.mode = mode;
      s.blockage_enabled = blocked;
      for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const TrialResult t = run_trial(s, seed);
        CHECK(t.metrics.thz_user_count + t.metrics.vlc_user_count +
                  t.metrics.unserved_count ==
              s.user_count);
      }
    }
  }
}

TEST_CASE("enabling blockage never helps any link") {
  Scenario off = default_scenario();
  Scenario on = default_scenario();
  on.blockage_enabled = true;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto users = place_users(off, seed);
    for (const UserRx& u : users) {
      CHECK(sensing_link_gain(on, u) <= sensing_link_gain(off, u));
      CHECK(thz_comm_link_gain(on, u) <= thz_comm_link_gain(off, u));
      for (const VlcAp& ap : on.vlc_aps)
        CHECK(vlc_link_gain(on, ap, u) <= vlc_link_gain(off, ap, u));
    }
    const TrialResult t_on = run_trial(on, seed);
    const TrialResult t_off = run_trial(off, seed);
    for (std::size_t i = 0; i < users.size(); ++i) {
      CHECK(t_on.detections[i].snr_sens <=
            t_off.detections[i].snr_sens * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("standalone mode strands at least as many users as the hybrid") {
  Scenario proposed = default_scenario();
  proposed.blockage_enabled = true;
  Scenario standalone = proposed;
  standalone.mode = Mode::kStandaloneThz;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const TrialResult a = run_trial(standalone, seed);
    const TrialResult b = run_trial(proposed, seed);
    CHECK(a.metrics.unserved_count >= b.metrics.unserved_count);
  }
}

TEST_CASE("vacuous thresholds plus no blockage serve everyone") {
  Scenario s = default_scenario();
  s.blockage_enabled = false;
  s.thresholds.sensing_snr = 1e-12;
  s.thresholds.comm_snr = 1e-12;
  s.thresholds.vlc_snr = 1e-12;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const TrialResult t = run_trial(s, seed);
    CHECK(t.metrics.unserved_count == 0);
  }
}

TEST_CASE("a single trial aggregates to itself with zero deviation") {
  const Scenario s = default_scenario();
  const AggregateResult agg = run_monte_carlo(s, 1, 500);
  const TrialScalars row = trial_scalars(run_trial(s, derive_seed(500, 0)));
  for (std::size_t k = 0; k < TrialScalars::kCount; ++k) {
    CHECK(agg.mean[k] == row[k]);
    CHECK(agg.stddev[k] == 0.0);
  }
}

TEST_CASE("aggregates are identical across worker counts") {
  const Scenario s = default_scenario();
  const AggregateResult a = run_monte_carlo(s, 64, 99, 1);
  const AggregateResult b = run_monte_carlo(s, 64, 99, 4);
  const AggregateResult c = run_monte_carlo(s, 64, 99, 13);
  for (std::size_t k = 0; k < TrialScalars::kCount; ++k) {
    CHECK(a.mean[k] == b.mean[k]);
    CHECK(a.stddev[k] == b.stddev[k]);
    CHECK(a.mean[k] == c.mean[k]);
    CHECK(a.stddev[k] == c.stddev[k]);
  }
}

TEST_CASE("blockage shifts users away from the THz link on average") {
  Scenario off = default_scenario();
  Scenario on = default_scenario();
  on.blockage_enabled = true;
  const AggregateResult a_off = run_monte_carlo(off, 200, 42);
  const AggregateResult a_on = run_monte_carlo(on, 200, 42);
  CHECK(a_off.mean[9] >= a_on.mean[9]);  // thz_user_count
}

TEST_CASE("denser blockage strictly lowers the mean detection probability") {
  double prev = 1.0;
  for (double lam : {2.0, 4.0, 6.0, 8.0}) {
    Scenario s = default_scenario();
    s.blockage_enabled = true;
    s.blockage.density = lam;
    const AggregateResult agg = run_monte_carlo(s, 200, 42);
    CHECK(agg.mean[2] < prev);  // mean_p_d
    prev = agg.mean[2];
  }
}

TEST_CASE("literal obstruction weighting flips the blockage direction") {
  // Comparison switch only: the printed weighting multiplies by the
  // obstruction probability, so denser blockage then raises the weight.
  Scenario s = default_scenario();
  s.blockage_enabled = true;
  s.blockage.literal_pb_weighting = true;
  UserRx u = s.user_template;
  u.position = {3.0, 1.0, 0.85};
  u.rcs = 1.0;
  s.blockage.density = 0.05;
  const double sparse = sensing_link_gain(s, u);
  s.blockage.density = 0.2;
  const double dense = sensing_link_gain(s, u);
  CHECK(dense > sparse);

  // Disabled blockage bypasses the switch entirely.
  s.blockage_enabled = false;
  const double clean = sensing_link_gain(s, u);
  s.blockage.literal_pb_weighting = false;
  CHECK(sensing_link_gain(s, u) == clean);
}

TEST_CASE("alternate detector form is honored by the trial pipeline") {
  Scenario plain = default_scenario();
  Scenario alt = default_scenario();
  alt.thresholds.alt_pd_form = true;
  const TrialResult a = run_trial(plain, 3);
  const TrialResult b = run_trial(alt, 3);
  bool any_differs = false;
  for (std::size_t i = 0; i < a.detections.size(); ++i) {
    CHECK(a.detections[i].snr_sens == b.detections[i].snr_sens);
    CHECK(b.detections[i].p_d >= 0.0);
    CHECK(b.detections[i].p_d <= 1.0);
    if (a.detections[i].p_d != b.detections[i].p_d) any_differs = true;
  }
  CHECK(any_differs);
}

TEST_CASE("forced splits sweep the sensing-communication trade-off") {
  Scenario s = default_scenario();
  s.blockage_enabled = false;
  std::vector<double> se;
  for (double rho : {0.05, 0.5, 0.95}) {
    s.thz.rho1_override = rho;
    const TrialResult t = run_trial(s, 1);
    CHECK(t.split.rho1 == rho);
    se.push_back(t.metrics.avg_se);
    for (std::size_t i = 0; i < t.users.size(); ++i) {
      CHECK(t.detections[i].snr_sens ==
            doctest::Approx(sensing_snr(t.users[i], s, rho)).epsilon(1e-12));
    }
  }
  CHECK(se.size() == 3);
}
