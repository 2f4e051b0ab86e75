#include "isac/power.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "isac/links.hpp"

namespace isac {

namespace {

double thz_budget(const Scenario& s) {
  return s.thz.total_power + s.thz.circuitry_power;
}

// Requirements grouped per AP after dropping users above p_max.
struct GroupedRequirements {
  std::vector<double> per_ap;   // max member requirement, 0 when empty
  std::vector<bool> occupied;
  std::vector<int> unserved;
};

GroupedRequirements group_requirements(std::span<const VlcAssignment> assignments,
                                       int ap_count, const Scenario& s) {
  GroupedRequirements g;
  g.per_ap.assign(static_cast<std::size_t>(ap_count), 0.0);
  g.occupied.assign(static_cast<std::size_t>(ap_count), false);
  for (const VlcAssignment& a : assignments) {
    if (a.ap < 0 || a.ap >= ap_count ||
        static_cast<std::size_t>(a.ap) >= s.vlc_aps.size())
      throw std::domain_error("minimize_network_power: AP index out of range");
    const double p_max = s.vlc_aps[static_cast<std::size_t>(a.ap)].max_power;
    if (!(a.min_power > 0.0) || !std::isfinite(a.min_power) || a.min_power > p_max) {
      g.unserved.push_back(a.user);
      continue;
    }
    g.occupied[static_cast<std::size_t>(a.ap)] = true;
    g.per_ap[static_cast<std::size_t>(a.ap)] =
        std::max(g.per_ap[static_cast<std::size_t>(a.ap)], a.min_power);
  }
  return g;
}

}  // namespace

double min_sensing_fraction(std::span<const double> sensing_gains, const ThzPhy& thz,
                            double gamma_sens) {
  if (sensing_gains.empty())
    throw std::domain_error("min_sensing_fraction: empty candidate set");
  const double noise = thz.noise_psd * thz.bandwidth;
  const double budget = thz.total_power + thz.circuitry_power;
  double required = 0.0;
  for (double g : sensing_gains) {
    const double frac = g > 0.0 ? gamma_sens * noise / (budget * g)
                                : std::numeric_limits<double>::infinity();
    required = std::max(required, frac);
  }
  return required;
}

SplitSolution solve_power_split(const Scenario& s, std::span<const double> sensing_gains,
                                std::span<const double> comm_gains) {
  SplitSolution out;
  out.required_fraction =
      min_sensing_fraction(sensing_gains, s.thz, s.thresholds.sensing_snr);
  if (s.thz.rho1_override) {
    out.rho1 = *s.thz.rho1_override;
    out.sensing_ok = out.required_fraction <= out.rho1;
  } else {
    out.rho1 = std::min(out.required_fraction, 1.0);
    out.sensing_ok = out.required_fraction <= 1.0;
  }
  const double noise = s.thz.noise_psd * s.thz.bandwidth;
  for (std::size_t n = 0; n < comm_gains.size(); ++n) {
    const double snr = thz_budget(s) * (1.0 - out.rho1) * comm_gains[n] / noise;
    if (snr >= s.thresholds.comm_snr) out.feasible_for.push_back(static_cast<int>(n));
  }
  return out;
}

SplitSolution solve_power_split(const Scenario& s, const std::vector<UserRx>& users) {
  std::vector<double> sensing(users.size());
  std::vector<double> comm(users.size());
  for (std::size_t n = 0; n < users.size(); ++n) {
    sensing[n] = sensing_link_gain(s, users[n]);
    comm[n] = thz_comm_link_gain(s, users[n]);
  }
  return solve_power_split(s, sensing, comm);
}

std::optional<double> vlc_min_power(const UserRx& user, const VlcAp& ap, const Scenario& s) {
  const double gain = vlc_link_gain(s, ap, user);
  if (!(gain > 0.0)) return std::nullopt;
  const double required = vlc_required_power(s, gain);
  if (required > ap.max_power) return std::nullopt;
  return required;
}

MilpSolution minimize_network_power(std::span<const VlcAssignment> assignments,
                                    int ap_count, const Scenario& s) {
  GroupedRequirements g = group_requirements(assignments, ap_count, s);

  MilpSolution out;
  out.active.assign(static_cast<std::size_t>(ap_count), 0);
  out.power.assign(static_cast<std::size_t>(ap_count), 0.0);
  out.unserved = std::move(g.unserved);
  double vlc_total = 0.0;
  for (int l = 0; l < ap_count; ++l) {
    if (g.occupied[static_cast<std::size_t>(l)]) {
      out.active[static_cast<std::size_t>(l)] = 1;
      out.power[static_cast<std::size_t>(l)] = g.per_ap[static_cast<std::size_t>(l)];
      vlc_total += g.per_ap[static_cast<std::size_t>(l)];
    }
  }
  out.objective = vlc_total + thz_budget(s);
  return out;
}

MilpSolution minimize_network_power_bnb(std::span<const VlcAssignment> assignments,
                                        int ap_count, const Scenario& s) {
  GroupedRequirements g = group_requirements(assignments, ap_count, s);

  // Depth-first search over activation patterns. Turning an occupied AP off
  // is infeasible (its users could not be served), so that branch is pruned;
  // the per-node bound is the cost already committed. The off branch is
  // explored first so ties resolve to the minimal activation set.
  double best = std::numeric_limits<double>::infinity();
  std::vector<int> pattern(static_cast<std::size_t>(ap_count), 0);
  std::vector<int> best_pattern = pattern;

  auto dfs = [&](auto&& self, int l, double cost) -> void {
    if (cost >= best) return;  // bound
    if (l == ap_count) {
      best = cost;
      best_pattern = pattern;
      return;
    }
    const std::size_t idx = static_cast<std::size_t>(l);
    if (!g.occupied[idx]) {
      pattern[idx] = 0;
      self(self, l + 1, cost);
    }
    pattern[idx] = 1;
    self(self, l + 1, cost + g.per_ap[idx]);
    pattern[idx] = 0;
  };
  dfs(dfs, 0, 0.0);

  MilpSolution out;
  out.active = best_pattern;
  out.power.assign(static_cast<std::size_t>(ap_count), 0.0);
  out.unserved = std::move(g.unserved);
  double vlc_total = 0.0;
  for (int l = 0; l < ap_count; ++l) {
    const std::size_t idx = static_cast<std::size_t>(l);
    if (best_pattern[idx] == 1 && g.occupied[idx]) {
      out.power[idx] = g.per_ap[idx];
      vlc_total += g.per_ap[idx];
    }
  }
  out.objective = vlc_total + thz_budget(s);
  return out;
}

MilpSolution non_optimized_power(const Scenario& s) {
  MilpSolution out;
  out.active.assign(s.vlc_aps.size(), 1);
  out.power.resize(s.vlc_aps.size());
  double vlc_total = 0.0;
  for (std::size_t l = 0; l < s.vlc_aps.size(); ++l) {
    out.power[l] = s.vlc_aps[l].max_power;
    vlc_total += s.vlc_aps[l].max_power;
  }
  out.objective = vlc_total + thz_budget(s);
  return out;
}

}  // namespace isac
