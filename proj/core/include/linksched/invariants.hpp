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

#ifndef LINKSCHED_INVARIANTS_HPP
#define LINKSCHED_INVARIANTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "linksched/conflict_graph.hpp"
#include "linksched/demand.hpp"
#include "linksched/limits.hpp"
#include "linksched/network_graph.hpp"
#include "linksched/rational.hpp"

namespace linksched::invariants {

/// A largest induced star: `leaves` is a maximum independent set inside the
/// neighborhood of `center`, so |leaves| equals the induced star number.
struct StarWitness {
  std::string center;
  std::vector<std::string> leaves;
};

struct SigmaResult {
  std::size_t value = 0;
  StarWitness witness;
};

/// Maximum independent set size of the subgraph induced by `subset`
/// (exact branch and bound).
std::size_t alpha(const ConflictGraph& g, const std::vector<std::string>& subset,
                  const EnumLimits& limits = {});

/// alpha over the whole vertex set.
std::size_t alpha(const ConflictGraph& g, const EnumLimits& limits = {});

/// Induced star number: the largest number of pairwise nonadjacent
/// neighbors of any single vertex. 0 for edgeless graphs; at most 1 exactly
/// when every component is complete.
SigmaResult sigma(const ConflictGraph& g, const EnumLimits& limits = {});

std::size_t max_degree(const ConflictGraph& g);

/// All inclusion-maximal cliques, each sorted, listed in lexicographic order.
std::vector<std::vector<std::string>> maximal_cliques(const ConflictGraph& g,
                                                      const EnumLimits& limits = {});

/// Maximal cliques of the conflict graph under primary interference,
/// computed in polynomial time from the network itself: stars of links at a
/// node (when not inside a link triangle) and triangles of links.
/// Extensionally equal to maximal_cliques(generators::line_graph(n)).
std::vector<std::vector<std::string>> line_graph_cliques(const NetworkGraph& n);

/// max over links {u,v} of mu(u) + mu(v) - mu{u,v}, where mu(u) counts
/// edge-endpoints at u with multiplicity. Upper-bounds the chromatic index
/// of the multigraph.
Rational chromatic_index_bound(const NetworkGraph& n);

/// Exact worst-case ratio of the mixed condition when every vertex
/// neighborhood induces a disjoint union of complete graphs:
/// max over vertices of eta(1+d)/(eta+d). nullopt when some neighborhood
/// does not decompose that way.
std::optional<Rational> beta_mixed_predicted(const ConflictGraph& g);

/// Predicted worst-case ratio of the neighbor-discounted row condition:
/// sigma if some vertex attaining the induced star number has degree
/// greater than sigma, else sigma - 1. Throws NotApplicableError unless g
/// is connected, not complete, and not an odd cycle.
Rational beta_row2_predicted(const ConflictGraph& g, const EnumLimits& limits = {});

/// max over vertices of x(v) + x(Gamma(v)); an upper bound on the
/// fractional chromatic number of the weighted graph.
Rational b_bound(const ConflictGraph& g, const DemandVector& x);

}  // namespace linksched::invariants

#endif  // LINKSCHED_INVARIANTS_HPP
