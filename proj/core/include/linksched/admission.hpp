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

#ifndef LINKSCHED_ADMISSION_HPP
#define LINKSCHED_ADMISSION_HPP

#include <string>

#include "linksched/conflict_graph.hpp"
#include "linksched/demand.hpp"
#include "linksched/limits.hpp"
#include "linksched/network_graph.hpp"
#include "linksched/report.hpp"

namespace linksched::admission {

// Scale presets for the clique constraints. 10/21 is the exact form of the
// rounded 0.46 used for unit-disk conflict graphs (1/2.1); 4/5 applies to
// line graphs; 2/3 mirrors the classical edge-coloring bound.
inline Rational scale_necessary() { return Rational(1); }
inline Rational scale_line_graph() { return Rational(4, 5); }
inline Rational scale_unit_disk() { return Rational(10, 21); }
inline Rational scale_shannon() { return Rational(2, 3); }

/// Row constraints: tau(l) + tau(Gamma(l)) <= T per link. Sufficient.
ConditionReport check_row(const ConflictGraph& g, const DemandVector& tau,
                          const Horizon& T);

/// Row constraints with one designated link; every other link discounts its
/// cheapest neighbor. Sufficient.
ConditionReport check_row2_designated(const ConflictGraph& g, const DemandVector& tau,
                                      const Horizon& T, const std::string& designated);

/// Neighbor-discounted row constraints on every link. Sufficient for
/// components that are neither complete (beyond a single vertex) nor odd
/// cycles; otherwise NotApplicableError naming the exclusion.
ConditionReport check_row2(const ConflictGraph& g, const DemandVector& tau,
                           const Horizon& T);

/// Degree condition: tau(l) * (d(l)+1) <= T per link. Sufficient.
ConditionReport check_degree(const ConflictGraph& g, const DemandVector& tau,
                             const Horizon& T);

/// Mixed condition: min of the row and degree left-hand sides. Sufficient,
/// and weaker than either.
ConditionReport check_mixed(const ConflictGraph& g, const DemandVector& tau,
                            const Horizon& T);

/// Clique constraints: tau(K) <= scale * T for every maximal clique K.
/// Necessary at scale 1; sufficient at scale 1/imp for graph classes whose
/// imperfection ratio is known (see the presets above).
ConditionReport check_clique(const ConflictGraph& g, const DemandVector& tau,
                             const Horizon& T, const Rational& scale = Rational(1),
                             const EnumLimits& limits = {});

/// Row constraints reformulated on the network graph under primary
/// interference: tau(u) + tau(v) - tau(l) <= T per link l = {u,v}, where
/// tau(u) sums the demands of links incident to u. Demands are keyed by
/// link id. Agrees exactly with check_row on the line graph.
ConditionReport check_row_primary(const NetworkGraph& n, const DemandVector& tau,
                                  const Horizon& T);

/// Scaled clique constraints on the network graph under primary
/// interference: tau(v) <= (4/5) T per node and per-triangle link sums
/// <= (4/5) T. Sufficient.
ConditionReport check_clique_line_scaled(const NetworkGraph& n, const DemandVector& tau,
                                         const Horizon& T);

/// Edge-coloring bound: tau(v) <= (2/3) T per node. Sufficient, and
/// strictly stronger as a requirement than the node part of the 4/5 test.
ConditionReport check_shannon(const NetworkGraph& n, const DemandVector& tau,
                              const Horizon& T);

}  // namespace linksched::admission

#endif  // LINKSCHED_ADMISSION_HPP
