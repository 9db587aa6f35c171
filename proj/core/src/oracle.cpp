// Copyright 2026 The linksched Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "linksched/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "detail/index_graph.hpp"
#include "detail/simplex.hpp"
#include "linksched/admission.hpp"
#include "linksched/errors.hpp"
#include "linksched/invariants.hpp"

namespace linksched::oracle {

namespace {

using detail::Bits;
using detail::IndexGraph;

std::vector<std::vector<std::size_t>> maximal_independent_sets(const ConflictGraph& g,
                                                               const EnumLimits& limits) {
  if (g.size() > limits.max_vertices) {
    throw ResourceLimitError("independent-set enumeration: " + std::to_string(g.size()) +
                             " vertices exceed the limit of " +
                             std::to_string(limits.max_vertices));
  }
  const IndexGraph co = IndexGraph::complement_of(g);
  std::vector<std::vector<std::size_t>> sets;
  const bool complete = detail::enumerate_maximal_cliques(
      co, Bits::all(g.size()), limits.max_sets,
      [&sets](const Bits& members) { sets.push_back(members.to_indices()); });
  if (!complete) {
    throw ResourceLimitError("independent-set enumeration: more than " +
                             std::to_string(limits.max_sets) + " sets");
  }
  return sets;
}

// Shared scaffolding of the beta programs: variables are per-vertex demands
// tau followed by per-set durations t (and optionally an auxiliary z);
// constraints couple tau to the coverage provided by t and cap the total
// duration at 1, which is exactly membership in the independent set
// polytope for downward-closed objectives.
struct PolytopeLp {
  std::size_t n = 0;
  std::size_t sets = 0;
  std::size_t vars = 0;
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b;

  PolytopeLp(const ConflictGraph& g, const std::vector<std::vector<std::size_t>>& mis,
             bool with_aux) {
    n = g.size();
    sets = mis.size();
    vars = n + sets + (with_aux ? 1 : 0);
    const std::size_t rows = n + 1;
    A.assign(rows, std::vector<Rational>(vars, Rational(0)));
    b.assign(rows, Rational(0));
    for (std::size_t v = 0; v < n; ++v) A[v][v] = Rational(1);
    for (std::size_t j = 0; j < sets; ++j) {
      for (std::size_t v : mis[j]) A[v][n + j] = Rational(-1);
    }
    // Budget row: total duration at most one unit of time.
    for (std::size_t j = 0; j < sets; ++j) A[n][n + j] = Rational(1);
    b[n] = Rational(1);
  }

  std::size_t aux_index() const { return n + sets; }

  void add_row(std::vector<Rational> row, Rational rhs) {
    A.push_back(std::move(row));
    b.push_back(std::move(rhs));
  }
};

DemandVector witness_from(const ConflictGraph& g, const std::vector<Rational>& primal) {
  DemandVector tau;
  for (std::size_t v = 0; v < g.size(); ++v) tau.set(g.id_of(v), primal[v]);
  return tau;
}

void require_nonempty(const ConflictGraph& g, const char* what) {
  if (g.size() == 0) {
    throw StructuralError(std::string(what) + " is undefined on an empty graph");
  }
}

BetaResult run_per_vertex(const ConflictGraph& g, const EnumLimits& limits,
                          const std::function<detail::LpResult(
                              const std::vector<std::vector<std::size_t>>&, std::size_t)>&
                              solve_vertex) {
  const auto mis = maximal_independent_sets(g, limits);
  BetaResult best;
  bool first = true;
  for (std::size_t v = 0; v < g.size(); ++v) {
    const detail::LpResult lp = solve_vertex(mis, v);
    if (first || lp.objective > best.value) {
      first = false;
      best.value = lp.objective;
      best.witness = witness_from(g, lp.primal);
      best.vertex = g.id_of(v);
    }
  }
  return best;
}

Rational condition_max_lhs(const ConflictGraph& g, ConditionKind condition,
                           const DemandVector& tau, const EnumLimits& limits) {
  const Horizon unit{Rational(1)};
  ConditionReport report;
  switch (condition) {
    case ConditionKind::Row:
      report = admission::check_row(g, tau, unit);
      break;
    case ConditionKind::Row2:
      report = admission::check_row2(g, tau, unit);
      break;
    case ConditionKind::Degree:
      report = admission::check_degree(g, tau, unit);
      break;
    case ConditionKind::Mixed:
      report = admission::check_mixed(g, tau, unit);
      break;
    case ConditionKind::Clique:
      return t_clique(g, tau, limits);
  }
  Rational best(0);
  for (const auto& [key, row] : report.rows) best = max(best, row.lhs);
  return best;
}

}  // namespace

ChiFResult chi_f(const ConflictGraph& g, const DemandVector& weights,
                 const EnumLimits& limits) {
  weights.validate_against(g);
  if (g.size() == 0) {
    return ChiFResult{Rational(0), SetFormSchedule(Horizon{Rational(1)})};
  }

  const auto mis = maximal_independent_sets(g, limits);
  // Solve max x^T y s.t. per-set sums of y at most 1. The duals of the set
  // rows are the optimal covering durations of the primal program.
  std::vector<std::vector<Rational>> A(mis.size(),
                                       std::vector<Rational>(g.size(), Rational(0)));
  std::vector<Rational> b(mis.size(), Rational(1));
  std::vector<Rational> c(g.size(), Rational(0));
  for (std::size_t j = 0; j < mis.size(); ++j) {
    for (std::size_t v : mis[j]) A[j][v] = Rational(1);
  }
  for (std::size_t v = 0; v < g.size(); ++v) c[v] = weights.get(g.id_of(v));

  const detail::LpResult lp = detail::simplex_max(A, b, c);

  ChiFResult result{lp.objective,
                    SetFormSchedule(Horizon{lp.objective.sign() > 0 ? lp.objective
                                                                    : Rational(1)})};
  for (std::size_t j = 0; j < mis.size(); ++j) {
    if (lp.dual[j].sign() > 0) {
      std::vector<std::string> members;
      members.reserve(mis[j].size());
      for (std::size_t v : mis[j]) members.push_back(g.id_of(v));
      result.schedule.add(std::move(members), lp.dual[j]);
    }
  }
  return result;
}

bool feasible(const ConflictGraph& g, const DemandVector& tau, const Horizon& T,
              const EnumLimits& limits) {
  return chi_f(g, tau, limits).value <= T.T;
}

Rational t_clique(const ConflictGraph& g, const DemandVector& tau,
                  const EnumLimits& limits) {
  tau.validate_against(g);
  Rational best(0);
  for (const auto& clique : invariants::maximal_cliques(g, limits)) {
    Rational sum;
    for (const auto& id : clique) sum += tau.get(id);
    best = max(best, sum);
  }
  return best;
}

BetaResult beta_row(const ConflictGraph& g, const EnumLimits& limits) {
  require_nonempty(g, "beta_row");
  return run_per_vertex(g, limits, [&](const auto& mis, std::size_t v) {
    PolytopeLp lp(g, mis, false);
    std::vector<Rational> c(lp.vars, Rational(0));
    c[v] = Rational(1);
    for (std::size_t w : g.neighbors(v)) c[w] = Rational(1);
    return detail::simplex_max(lp.A, lp.b, c);
  });
}

BetaResult beta_degree(const ConflictGraph& g, const EnumLimits& limits) {
  require_nonempty(g, "beta_degree");
  return run_per_vertex(g, limits, [&](const auto& mis, std::size_t v) {
    PolytopeLp lp(g, mis, false);
    std::vector<Rational> c(lp.vars, Rational(0));
    c[v] = Rational(static_cast<long>(g.degree(v)) + 1);
    return detail::simplex_max(lp.A, lp.b, c);
  });
}

BetaResult beta_mixed(const ConflictGraph& g, const EnumLimits& limits) {
  require_nonempty(g, "beta_mixed");
  return run_per_vertex(g, limits, [&](const auto& mis, std::size_t v) {
    PolytopeLp lp(g, mis, true);
    const std::size_t z = lp.aux_index();

    // z below the row lhs and below the degree lhs at v.
    std::vector<Rational> row_cut(lp.vars, Rational(0));
    row_cut[z] = Rational(1);
    row_cut[v] = Rational(-1);
    for (std::size_t w : g.neighbors(v)) row_cut[w] = Rational(-1);
    lp.add_row(std::move(row_cut), Rational(0));

    std::vector<Rational> degree_cut(lp.vars, Rational(0));
    degree_cut[z] = Rational(1);
    degree_cut[v] = Rational(-(static_cast<long>(g.degree(v)) + 1));
    lp.add_row(std::move(degree_cut), Rational(0));

    std::vector<Rational> c(lp.vars, Rational(0));
    c[z] = Rational(1);
    return detail::simplex_max(lp.A, lp.b, c);
  });
}

BetaResult beta_row2(const ConflictGraph& g, const EnumLimits& limits) {
  require_nonempty(g, "beta_row2");
  if (!is_connected(g)) {
    throw NotApplicableError("beta_row2: graph must be connected");
  }
  if (is_complete(g)) throw NotApplicableError("beta_row2: graph is complete");
  if (is_odd_cycle(g)) throw NotApplicableError("beta_row2: graph is an odd cycle");

  const auto mis = maximal_independent_sets(g, limits);
  BetaResult best;
  bool first = true;
  for (std::size_t v = 0; v < g.size(); ++v) {
    for (std::size_t discounted : g.neighbors(v)) {
      PolytopeLp lp(g, mis, false);
      std::vector<Rational> c(lp.vars, Rational(0));
      c[v] = Rational(1);
      for (std::size_t w : g.neighbors(v)) c[w] += Rational(1);
      c[discounted] -= Rational(1);
      const detail::LpResult result = detail::simplex_max(lp.A, lp.b, c);
      if (first || result.objective > best.value) {
        first = false;
        best.value = result.objective;
        best.witness = witness_from(g, result.primal);
        best.vertex = g.id_of(v);
      }
    }
  }
  return best;
}

DemandVector random_feasible_demands(const ConflictGraph& g, SplitMix64& rng) {
  DemandVector tau;
  if (g.size() == 0) return tau;

  const std::size_t set_count = 1 + rng.below(4);
  std::vector<Rational> weights;
  std::vector<std::vector<std::size_t>> sets;
  Rational weight_total(0);
  for (std::size_t k = 0; k < set_count; ++k) {
    // Random greedy maximal independent set.
    std::vector<std::size_t> order(g.size());
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = order.size(); i-- > 1;) {
      std::swap(order[i], order[rng.below(i + 1)]);
    }
    std::vector<std::size_t> chosen;
    for (std::size_t v : order) {
      if (std::none_of(chosen.begin(), chosen.end(),
                       [&](std::size_t w) { return g.adjacent(v, w); })) {
        chosen.push_back(v);
      }
    }
    sets.push_back(std::move(chosen));
    weights.emplace_back(static_cast<long>(1 + rng.below(8)));
    weight_total += weights.back();
  }

  // Durations scale the weights into a random total budget <= 1.
  const Rational budget(static_cast<long>(rng.below(17)), 16);
  std::map<std::string, Rational> coverage;
  for (std::size_t k = 0; k < sets.size(); ++k) {
    const Rational duration = weights[k] / weight_total * budget;
    for (std::size_t v : sets[k]) coverage[g.id_of(v)] += duration;
  }
  for (auto& [id, value] : coverage) tau.set(id, value);
  return tau;
}

ImpEstimate imp_estimate(const ConflictGraph& g, int samples, std::uint64_t seed,
                         std::size_t subset_cap, const EnumLimits& limits) {
  require_nonempty(g, "imp_estimate");

  ImpEstimate best{Rational(0), DemandVector{}};
  const auto consider = [&](const DemandVector& tau) {
    const Rational clique_time = t_clique(g, tau, limits);
    if (clique_time.sign() <= 0) return;
    const Rational ratio = chi_f(g, tau, limits).value / clique_time;
    if (ratio > best.ratio) {
      best.ratio = ratio;
      best.witness = tau;
    }
  };

  // The all-ones vector, then 0/1 indicators of small vertex subsets.
  {
    DemandVector ones;
    for (const auto& id : g.vertices()) ones.set(id, Rational(1));
    consider(ones);
  }
  const std::size_t n = g.size();
  std::vector<std::size_t> subset;
  const std::function<void(std::size_t)> recurse = [&](std::size_t from) {
    if (!subset.empty()) {
      DemandVector tau;
      for (std::size_t v : subset) tau.set(g.id_of(v), Rational(1));
      consider(tau);
    }
    if (subset.size() == subset_cap) return;
    for (std::size_t v = from; v < n; ++v) {
      subset.push_back(v);
      recurse(v + 1);
      subset.pop_back();
    }
  };
  recurse(0);

  SplitMix64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    DemandVector tau;
    for (const auto& id : g.vertices()) {
      const long numerator = static_cast<long>(rng.below(17));
      if (numerator > 0) tau.set(id, Rational(numerator, 16));
    }
    consider(tau);
  }
  return best;
}

bool scaling_check(const ConflictGraph& g, ConditionKind condition, const Rational& beta,
                   int samples, std::uint64_t seed,
                   const std::optional<Rational>& sufficiency_scale,
                   const EnumLimits& limits) {
  SplitMix64 rng(seed);
  const Horizon unit{Rational(1)};

  for (int s = 0; s < samples; ++s) {
    const DemandVector tau = random_feasible_demands(g, rng);
    if (condition_max_lhs(g, condition, tau, limits) > beta) return false;
  }

  if (sufficiency_scale) {
    for (int s = 0; s < samples; ++s) {
      DemandVector tau;
      for (const auto& id : g.vertices()) {
        const long numerator = static_cast<long>(rng.below(17));
        if (numerator > 0) tau.set(id, Rational(numerator, 16));
      }
      const Rational lhs = condition_max_lhs(g, condition, tau, limits);
      if (lhs.sign() <= 0) continue;
      // Scale so the condition passes exactly at the given scale.
      const Rational factor = *sufficiency_scale / lhs;
      DemandVector scaled;
      for (const auto& [id, value] : tau.entries()) scaled.set(id, value * factor);
      if (!feasible(g, scaled, unit, limits)) return false;
    }
  }
  return true;
}

}  // namespace linksched::oracle
