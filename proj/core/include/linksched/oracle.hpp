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

#ifndef LINKSCHED_ORACLE_HPP
#define LINKSCHED_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "linksched/conflict_graph.hpp"
#include "linksched/demand.hpp"
#include "linksched/limits.hpp"
#include "linksched/prng.hpp"
#include "linksched/rational.hpp"
#include "linksched/schedule.hpp"

namespace linksched::oracle {

// Exact centralized ground truth. Every program here is a linear program
// over explicitly enumerated maximal-independent-set columns, solved with
// exact rational arithmetic, so theorem checks are equalities rather than
// tolerance comparisons.

struct ChiFResult {
  Rational value;
  SetFormSchedule schedule;  // optimal durations; total equals value
};

/// Fractional chromatic number of the weighted graph: minimum total
/// duration of independent-set slices covering the weights. The returned
/// schedule certifies the optimum (its horizon is the value, or 1 when the
/// value is 0).
ChiFResult chi_f(const ConflictGraph& g, const DemandVector& weights,
                 const EnumLimits& limits = {});

/// Whether tau can be scheduled within [0, T): chi_f(g, tau) <= T.
bool feasible(const ConflictGraph& g, const DemandVector& tau, const Horizon& T,
              const EnumLimits& limits = {});

/// Largest clique demand sum; a lower bound on chi_f.
Rational t_clique(const ConflictGraph& g, const DemandVector& tau,
                  const EnumLimits& limits = {});

/// Exact worst-case ratio of a condition: the largest left-hand-side value
/// over the independent set polytope, with a demand vector attaining it.
struct BetaResult {
  Rational value;
  DemandVector witness;  // a point of the polytope attaining the value
  std::string vertex;    // the arg-max vertex
};

/// Worst case of the row constraints; equals the induced star number.
BetaResult beta_row(const ConflictGraph& g, const EnumLimits& limits = {});

/// Worst case of the degree condition; equals max degree + 1.
BetaResult beta_degree(const ConflictGraph& g, const EnumLimits& limits = {});

/// Worst case of the mixed condition, via the auxiliary-variable program
/// max z with z below both the row and the degree left-hand sides.
BetaResult beta_mixed(const ConflictGraph& g, const EnumLimits& limits = {});

/// Worst case of the neighbor-discounted row condition, maximized per
/// (vertex, discounted neighbor) pair. Eligible graphs only (connected,
/// not complete, not an odd cycle); otherwise NotApplicableError.
BetaResult beta_row2(const ConflictGraph& g, const EnumLimits& limits = {});

struct ImpEstimate {
  Rational ratio;        // largest sampled chi_f / t_clique; lower bound on imp
  DemandVector witness;  // sample attaining the ratio
};

/// Sampled lower bound on the imperfection ratio: the maximum of
/// chi_f/t_clique over `samples` random demand vectors plus the all-ones
/// vector and all 0/1 indicators of vertex subsets up to `subset_cap`.
/// Never an exact value, only a certified lower bound.
ImpEstimate imp_estimate(const ConflictGraph& g, int samples, std::uint64_t seed,
                         std::size_t subset_cap = 3, const EnumLimits& limits = {});

enum class ConditionKind { Row, Row2, Degree, Mixed, Clique };

/// Empirical sandwich check. Always verifies the scaled-necessity
/// direction: for sampled points of the independent set polytope the
/// condition's largest left-hand side stays within beta. When
/// `sufficiency_scale` is given, also verifies that sampled demand vectors
/// scaled to pass the condition at that scale are feasible in unit time.
bool scaling_check(const ConflictGraph& g, ConditionKind condition, const Rational& beta,
                   int samples, std::uint64_t seed,
                   const std::optional<Rational>& sufficiency_scale = std::nullopt,
                   const EnumLimits& limits = {});

/// A uniformly seeded point of the independent set polytope: random greedy
/// maximal independent sets with random rational durations totaling at
/// most 1. Used by the sampling checks and handy in tests.
DemandVector random_feasible_demands(const ConflictGraph& g, SplitMix64& rng);

}  // namespace linksched::oracle

#endif  // LINKSCHED_ORACLE_HPP
