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

#include "linksched/invariants.hpp"

#include <algorithm>
#include <set>

#include "detail/index_graph.hpp"
#include "linksched/errors.hpp"

namespace linksched::invariants {

namespace detail_ = linksched::detail;

namespace {

void check_vertex_limit(std::size_t count, const EnumLimits& limits, const char* what) {
  if (count > limits.max_vertices) {
    throw ResourceLimitError(std::string(what) + ": " + std::to_string(count) +
                             " vertices exceed the enumeration limit of " +
                             std::to_string(limits.max_vertices));
  }
}

std::vector<std::string> ids_of(const ConflictGraph& g, const detail_::Bits& bits) {
  std::vector<std::string> out;
  out.reserve(bits.count());
  bits.for_each([&](std::size_t i) { out.push_back(g.id_of(i)); });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::size_t alpha(const ConflictGraph& g, const std::vector<std::string>& subset,
                  const EnumLimits& limits) {
  check_vertex_limit(subset.size(), limits, "alpha");
  detail_::Bits mask(g.size());
  for (const auto& id : subset) mask.set(g.index_of(id));
  const auto ig = detail_::IndexGraph::from(g);
  return detail_::maximum_independent_set(ig, mask).count();
}

std::size_t alpha(const ConflictGraph& g, const EnumLimits& limits) {
  return alpha(g, g.vertices(), limits);
}

std::size_t max_degree(const ConflictGraph& g) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < g.size(); ++i) best = std::max(best, g.degree(i));
  return best;
}

SigmaResult sigma(const ConflictGraph& g, const EnumLimits& limits) {
  SigmaResult result;
  if (g.size() == 0) return result;

  check_vertex_limit(max_degree(g), limits, "sigma");
  const auto ig = detail_::IndexGraph::from(g);

  result.witness.center = g.id_of(0);
  for (std::size_t v = 0; v < g.size(); ++v) {
    const detail_::Bits best = detail_::maximum_independent_set(ig, ig.adj[v]);
    const std::size_t size = best.count();
    if (size > result.value) {
      result.value = size;
      result.witness.center = g.id_of(v);
      result.witness.leaves = ids_of(g, best);
    }
  }
  return result;
}

std::vector<std::vector<std::string>> maximal_cliques(const ConflictGraph& g,
                                                      const EnumLimits& limits) {
  check_vertex_limit(g.size(), limits, "maximal_cliques");
  const auto ig = detail_::IndexGraph::from(g);
  std::vector<std::vector<std::string>> cliques;
  const bool complete = detail_::enumerate_maximal_cliques(
      ig, detail_::Bits::all(g.size()), limits.max_sets,
      [&](const detail_::Bits& clique) { cliques.push_back(ids_of(g, clique)); });
  if (!complete) {
    throw ResourceLimitError("maximal_cliques: more than " +
                             std::to_string(limits.max_sets) + " cliques");
  }
  std::sort(cliques.begin(), cliques.end());
  return cliques;
}

std::vector<std::vector<std::string>> line_graph_cliques(const NetworkGraph& n) {
  std::vector<std::vector<std::string>> cliques;

  // Stars: all links meeting at a node. A two-link star is swallowed by a
  // triangle clique when the third side exists; larger stars are always
  // maximal. A link isolated from all others forms a singleton clique.
  for (std::size_t v = 0; v < n.node_count(); ++v) {
    const auto& inc = n.incident(v);
    if (inc.size() < 2) continue;
    if (inc.size() == 2) {
      const auto& a = n.links()[inc[0]];
      const auto& b = n.links()[inc[1]];
      const std::string& node = n.nodes()[v];
      const std::string other_a = a.u == node ? a.v : a.u;
      const std::string other_b = b.u == node ? b.v : b.u;
      if (n.find_link(other_a, other_b) != NetworkGraph::npos) continue;
    }
    std::vector<std::string> clique;
    clique.reserve(inc.size());
    for (std::size_t k : inc) clique.push_back(n.link_id(k));
    std::sort(clique.begin(), clique.end());
    cliques.push_back(std::move(clique));
  }

  // Triangles of links.
  const auto& nodes = n.nodes();
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    for (std::size_t b = a + 1; b < nodes.size(); ++b) {
      if (n.find_link(nodes[a], nodes[b]) == NetworkGraph::npos) continue;
      for (std::size_t c = b + 1; c < nodes.size(); ++c) {
        if (n.find_link(nodes[a], nodes[c]) == NetworkGraph::npos) continue;
        if (n.find_link(nodes[b], nodes[c]) == NetworkGraph::npos) continue;
        std::vector<std::string> clique = {NetworkGraph::link_id(nodes[a], nodes[b]),
                                           NetworkGraph::link_id(nodes[a], nodes[c]),
                                           NetworkGraph::link_id(nodes[b], nodes[c])};
        std::sort(clique.begin(), clique.end());
        cliques.push_back(std::move(clique));
      }
    }
  }

  // Isolated links.
  for (std::size_t k = 0; k < n.link_count(); ++k) {
    const auto& link = n.links()[k];
    if (n.incident(n.node_index(link.u)).size() == 1 &&
        n.incident(n.node_index(link.v)).size() == 1) {
      cliques.push_back({n.link_id(k)});
    }
  }

  std::sort(cliques.begin(), cliques.end());
  return cliques;
}

Rational chromatic_index_bound(const NetworkGraph& n) {
  std::vector<unsigned long> endpoint_count(n.node_count(), 0);
  for (const auto& link : n.links()) {
    endpoint_count[n.node_index(link.u)] += link.mult;
    endpoint_count[n.node_index(link.v)] += link.mult;
  }
  Rational best(0);
  for (const auto& link : n.links()) {
    const unsigned long mu_u = endpoint_count[n.node_index(link.u)];
    const unsigned long mu_v = endpoint_count[n.node_index(link.v)];
    const Rational value(static_cast<long>(mu_u + mu_v - link.mult));
    best = max(best, value);
  }
  return best;
}

std::optional<Rational> beta_mixed_predicted(const ConflictGraph& g) {
  if (g.size() == 0) throw StructuralError("beta on an empty graph");

  Rational best(0);
  for (std::size_t v = 0; v < g.size(); ++v) {
    const auto& nbrs = g.neighbors(v);
    if (nbrs.empty()) {
      best = max(best, Rational(1));
      continue;
    }
    const auto components = components_of_subset(g, nbrs);
    for (const auto& component : components) {
      for (std::size_t x = 0; x < component.size(); ++x) {
        for (std::size_t y = x + 1; y < component.size(); ++y) {
          if (!g.adjacent(component[x], component[y])) return std::nullopt;
        }
      }
    }
    const long eta = static_cast<long>(components.size());
    const long d = static_cast<long>(nbrs.size());
    best = max(best, Rational(eta * (1 + d), eta + d));
  }
  return best;
}

Rational beta_row2_predicted(const ConflictGraph& g, const EnumLimits& limits) {
  if (!is_connected(g) || g.size() == 0) {
    throw NotApplicableError("beta_row2_predicted: graph must be connected");
  }
  if (is_complete(g)) {
    throw NotApplicableError("beta_row2_predicted: graph is complete");
  }
  if (is_odd_cycle(g)) {
    throw NotApplicableError("beta_row2_predicted: graph is an odd cycle");
  }

  check_vertex_limit(max_degree(g), limits, "beta_row2_predicted");
  const auto ig = detail_::IndexGraph::from(g);
  const std::size_t star = sigma(g, limits).value;

  for (std::size_t v = 0; v < g.size(); ++v) {
    if (detail_::maximum_independent_set(ig, ig.adj[v]).count() == star &&
        g.degree(v) > star) {
      return Rational(static_cast<long>(star));
    }
  }
  return Rational(static_cast<long>(star) - 1);
}

Rational b_bound(const ConflictGraph& g, const DemandVector& x) {
  x.validate_against(g);
  Rational best(0);
  for (std::size_t v = 0; v < g.size(); ++v) {
    Rational lhs = x.get(g.id_of(v));
    for (std::size_t w : g.neighbors(v)) lhs += x.get(g.id_of(w));
    best = max(best, lhs);
  }
  return best;
}

}  // namespace linksched::invariants
