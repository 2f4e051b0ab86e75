#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "isac/links.hpp"
#include "isac/power.hpp"
#include "isac/rng.hpp"
#include "isac/scenario.hpp"
#include "isac/units.hpp"
#include "oracles.hpp"

using namespace isac;

namespace {

// Gains that make each user's required sensing fraction exactly `fracs[i]`.
std::vector<double> gains_for_fractions(const Scenario& s, const std::vector<double>& fracs) {
  std::vector<double> gains;
  const double noise = s.thz.noise_psd * s.thz.bandwidth;
  const double budget = s.thz.total_power + s.thz.circuitry_power;
  for (double f : fracs)
    gains.push_back(s.thresholds.sensing_snr * noise / (budget * f));
  return gains;
}

}  // namespace

TEST_CASE("minimum sensing fraction is the worst-case requirement") {
  const Scenario s = default_scenario();
  SUBCASE("a huge gain needs almost nothing") {
    const std::vector<double> g = {1.0};
    CHECK(min_sensing_fraction(g, s.thz, s.thresholds.sensing_snr) < 1e-6);
  }
  SUBCASE("doubling the threshold doubles the requirement") {
    const std::vector<double> g = gains_for_fractions(s, {0.1, 0.3});
    const double r1 = min_sensing_fraction(g, s.thz, s.thresholds.sensing_snr);
    const double r2 = min_sensing_fraction(g, s.thz, 2.0 * s.thresholds.sensing_snr);
    CHECK(r2 == doctest::Approx(2.0 * r1).epsilon(1e-12));
  }
  SUBCASE("max over the candidate constraints") {
    const std::vector<double> g = gains_for_fractions(s, {0.2, 0.6});
    CHECK(min_sensing_fraction(g, s.thz, s.thresholds.sensing_snr) ==
          doctest::Approx(0.6).epsilon(1e-12));
  }
  SUBCASE("a requirement above one is reported, not hidden") {
    const std::vector<double> g = gains_for_fractions(s, {2.5});
    CHECK(min_sensing_fraction(g, s.thz, s.thresholds.sensing_snr) ==
          doctest::Approx(2.5).epsilon(1e-12));
  }
  CHECK_THROWS_AS(min_sensing_fraction({}, s.thz, 0.3), std::domain_error);
}

TEST_CASE("power split solver") {
  Scenario s = default_scenario();
  s.blockage_enabled = false;

  SUBCASE("a vacuous comm threshold admits every user") {
    s.thresholds.comm_snr = 1e-30;
    const std::vector<double> sensing = gains_for_fractions(s, {0.3, 0.5});
    const std::vector<double> comm = {1e-20, 1e-20};
    const SplitSolution split = solve_power_split(s, sensing, comm);
    CHECK(split.rho1 == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(split.sensing_ok);
    CHECK(split.feasible_for.size() == 2);
  }
  SUBCASE("sensing and comm fractions jointly exceeding one exclude the user") {
    // Sensing pins rho1 = 0.7; the user's comm link needs 0.4 of the budget.
    const std::vector<double> sensing = gains_for_fractions(s, {0.7, 0.1});
    const double noise = s.thz.noise_psd * s.thz.bandwidth;
    const double budget = s.thz.total_power + s.thz.circuitry_power;
    const double g_needing_04 = s.thresholds.comm_snr * noise / (budget * 0.4);
    const std::vector<double> comm = {1e-3, g_needing_04};
    const SplitSolution split = solve_power_split(s, sensing, comm);
    CHECK(split.rho1 == doctest::Approx(0.7).epsilon(1e-12));
    CHECK(std::find(split.feasible_for.begin(), split.feasible_for.end(), 1) ==
          split.feasible_for.end());
  }
  SUBCASE("rho1 is nonincreasing in the total power on the same users") {
    const auto users = place_users(s, 11);
    double prev = 2.0;
    for (double pw : {2.0, 4.0, 6.0}) {
      Scenario sp = s;
      sp.thz.total_power = pw;
      const SplitSolution split = solve_power_split(sp, users);
      CHECK(split.rho1 <= prev);
      if (split.sensing_ok && prev <= 1.0) CHECK(split.rho1 < prev);
      prev = split.rho1;
    }
  }
  SUBCASE("constraints hold with zero slack violation for every feasible user") {
    for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
      const auto users = place_users(s, seed);
      std::vector<double> sensing, comm;
      for (const UserRx& u : users) {
        sensing.push_back(sensing_link_gain(s, u));
        comm.push_back(thz_comm_link_gain(s, u));
      }
      const SplitSolution split = solve_power_split(s, sensing, comm);
      const double noise = s.thz.noise_psd * s.thz.bandwidth;
      const double budget = s.thz.total_power + s.thz.circuitry_power;
      if (split.sensing_ok) {
        for (double g : sensing) {
          CHECK(budget * split.rho1 * g / noise >=
                s.thresholds.sensing_snr * (1.0 - 1e-12));
        }
      }
      for (int idx : split.feasible_for) {
        CHECK(budget * (1.0 - split.rho1) * comm[static_cast<std::size_t>(idx)] / noise >=
              s.thresholds.comm_snr * (1.0 - 1e-12));
      }
    }
  }
  SUBCASE("a forced split is honored and judged") {
    s.thz.rho1_override = 0.4;
    const std::vector<double> comm = {1.0};
    const std::vector<double> sensing = gains_for_fractions(s, {0.3});
    const SplitSolution ok = solve_power_split(s, sensing, comm);
    CHECK(ok.rho1 == 0.4);
    CHECK(ok.sensing_ok);
    const std::vector<double> tight = gains_for_fractions(s, {0.9});
    const SplitSolution bad = solve_power_split(s, tight, comm);
    CHECK(bad.rho1 == 0.4);
    CHECK(!bad.sensing_ok);
  }
}

TEST_CASE("per-link minimum VLC power") {
  Scenario s = default_scenario();
  s.blockage_enabled = false;
  const VlcAp& ap = s.vlc_aps.front();
  UserRx user = s.user_template;
  user.position = {1.25, 1.25, 0.85};  // straight below AP 0

  const double p0 = *vlc_min_power(user, ap, s);

  SUBCASE("doubling the gain halves the power") {
    UserRx bigger = user;
    bigger.pd_area *= 2.0;  // doubles the channel gain
    CHECK(*vlc_min_power(bigger, ap, s) == doctest::Approx(0.5 * p0).epsilon(1e-12));
  }
  SUBCASE("quadrupling the SNR target doubles the power") {
    Scenario s4 = s;
    s4.thresholds.vlc_snr *= 4.0;
    CHECK(*vlc_min_power(user, ap, s4) == doctest::Approx(2.0 * p0).epsilon(1e-12));
  }
  SUBCASE("requirements beyond p_max are infeasible") {
    Scenario hard = s;
    hard.thresholds.vlc_snr *= 1e12;  // pushes the requirement above 5 W
    CHECK(!vlc_min_power(user, ap, hard).has_value());
  }
  SUBCASE("zero gain is infeasible") {
    UserRx outside = user;
    outside.fov = 1e-6;  // sees nothing off-axis
    outside.position = {4.9, 4.9, 0.85};
    CHECK(!vlc_min_power(outside, ap, s).has_value());
  }
}

TEST_CASE("network power minimisation under fixed association") {
  Scenario s = default_scenario();
  const double budget = s.thz.total_power + s.thz.circuitry_power;

  SUBCASE("no VLC users keeps every AP dark") {
    const MilpSolution sol = minimize_network_power({}, 4, s);
    CHECK(sol.objective == doctest::Approx(budget).epsilon(1e-12));
    for (int a : sol.active) CHECK(a == 0);
    for (double p : sol.power) CHECK(p == 0.0);
  }
  SUBCASE("one user lights exactly its serving AP, checked by brute force") {
    const std::vector<VlcAssignment> one = {{0, 2, 0.75}};
    const MilpSolution sol = minimize_network_power(one, 4, s);
    CHECK(sol.active == std::vector<int>{0, 0, 1, 0});
    CHECK(sol.power[2] == doctest::Approx(0.75));
    CHECK(sol.objective ==
          doctest::Approx(oracle::milp_exhaustive_objective(one, 4, s)).epsilon(1e-12));
  }
  SUBCASE("objective is nondecreasing as users are added") {
    Rng rng(555);
    std::vector<VlcAssignment> users;
    double prev = minimize_network_power(users, 4, s).objective;
    for (int i = 0; i < 30; ++i) {
      users.push_back({i, static_cast<int>(rng.uniform(0.0, 4.0)),
                       rng.uniform(1e-4, 6.0)});
      const double obj = minimize_network_power(users, 4, s).objective;
      CHECK(obj >= prev - 1e-12);
      prev = obj;
    }
  }
  SUBCASE("the non-optimized baseline never beats the optimum") {
    Rng rng(777);
    for (int rep = 0; rep < 50; ++rep) {
      std::vector<VlcAssignment> users;
      const int n = 1 + static_cast<int>(rng.uniform(0.0, 10.0));
      for (int i = 0; i < n; ++i)
        users.push_back({i, static_cast<int>(rng.uniform(0.0, 4.0)),
                         rng.uniform(1e-4, 5.0)});
      CHECK(minimize_network_power(users, 4, s).objective <=
            non_optimized_power(s).objective + 1e-12);
    }
  }
}

TEST_CASE("non-optimized baseline arithmetic") {
  Scenario s = default_scenario();
  CHECK(non_optimized_power(s).objective == doctest::Approx(22.0056).epsilon(1e-12));
  s.vlc_aps.clear();
  s.mode = Mode::kStandaloneThz;
  CHECK(non_optimized_power(s).objective == doctest::Approx(2.0056).epsilon(1e-12));
}

TEST_CASE("solver, branch-and-bound and exhaustive enumeration agree") {
  Rng rng(20240811);
  Scenario s = default_scenario();
  for (int instance = 0; instance < 100; ++instance) {
    const int ap_count = 1 + static_cast<int>(rng.uniform(0.0, 8.0));
    const int users = 1 + static_cast<int>(rng.uniform(0.0, 12.0));
    s.vlc_aps.assign(static_cast<std::size_t>(ap_count), default_scenario().vlc_aps[0]);
    for (std::size_t l = 0; l < s.vlc_aps.size(); ++l)
      s.vlc_aps[l].position = {0.5 + static_cast<double>(l), 0.5, 2.8};

    std::vector<VlcAssignment> assignments;
    for (int u = 0; u < users; ++u) {
      // Mix of easy, marginal and impossible requirements.
      const double power = std::pow(10.0, rng.uniform(-4.0, 1.0));
      assignments.push_back({u, static_cast<int>(rng.uniform(0.0, ap_count)), power});
    }

    const MilpSolution fast = minimize_network_power(assignments, ap_count, s);
    const MilpSolution bnb = minimize_network_power_bnb(assignments, ap_count, s);
    const double exhaustive = oracle::milp_exhaustive_objective(assignments, ap_count, s);

    CHECK(std::abs(fast.objective - exhaustive) < 1e-9);
    CHECK(std::abs(bnb.objective - exhaustive) < 1e-9);
    CHECK(fast.active == bnb.active);
    CHECK(fast.unserved == bnb.unserved);

    for (int l = 0; l < ap_count; ++l) {
      const std::size_t idx = static_cast<std::size_t>(l);
      CHECK(fast.power[idx] <= fast.active[idx] * s.vlc_aps[idx].max_power + 1e-12);
      if (fast.active[idx] == 0) CHECK(fast.power[idx] == 0.0);
    }
    for (const VlcAssignment& a : assignments) {
      const bool unserved =
          std::find(fast.unserved.begin(), fast.unserved.end(), a.user) !=
          fast.unserved.end();
      if (!unserved) {
        // The assigned AP transmits at least the user's requirement.
        CHECK(fast.power[static_cast<std::size_t>(a.ap)] >= a.min_power * (1.0 - 1e-12));
      }
    }
  }
}
