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

#include "linksched/admission.hpp"

#include <algorithm>
#include <set>

#include "linksched/errors.hpp"
#include "linksched/invariants.hpp"

namespace linksched::admission {

namespace {

Rational row_lhs(const ConflictGraph& g, const DemandVector& tau, std::size_t v) {
  Rational lhs = tau.get(g.id_of(v));
  for (std::size_t w : g.neighbors(v)) lhs += tau.get(g.id_of(w));
  return lhs;
}

// Row left-hand side with the cheapest neighbor discounted. The minimum
// over an empty neighbor set is 0, so isolated links keep lhs = tau(l).
Rational row2_lhs(const ConflictGraph& g, const DemandVector& tau, std::size_t v) {
  Rational lhs = tau.get(g.id_of(v));
  const auto& nbrs = g.neighbors(v);
  if (nbrs.empty()) return lhs;
  Rational cheapest = tau.get(g.id_of(nbrs.front()));
  for (std::size_t w : nbrs) {
    const Rational t = tau.get(g.id_of(w));
    lhs += t;
    cheapest = min(cheapest, t);
  }
  return lhs - cheapest;
}

Rational degree_lhs(const ConflictGraph& g, const DemandVector& tau, std::size_t v) {
  return tau.get(g.id_of(v)) * Rational(static_cast<long>(g.degree(v)) + 1);
}

std::string join_plus(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += "+";
    out += p;
  }
  return out;
}

void validate_link_demands(const NetworkGraph& n, const DemandVector& tau) {
  std::set<std::string> ids;
  for (std::size_t k = 0; k < n.link_count(); ++k) ids.insert(n.link_id(k));
  for (const auto& [id, value] : tau.entries()) {
    if (!ids.count(id)) {
      throw StructuralError("demand names unknown link id '" + id + "'");
    }
  }
}

// tau(v): demand of all links incident to the node, per node index.
std::vector<Rational> node_sums(const NetworkGraph& n, const DemandVector& tau) {
  std::vector<Rational> sums(n.node_count());
  for (std::size_t v = 0; v < n.node_count(); ++v) {
    for (std::size_t k : n.incident(v)) sums[v] += tau.get(n.link_id(k));
  }
  return sums;
}

}  // namespace

ConditionReport check_row(const ConflictGraph& g, const DemandVector& tau,
                          const Horizon& T) {
  tau.validate_against(g);
  ConditionReport report;
  report.condition_name = "row";
  report.semantics = "sufficient";
  for (std::size_t v = 0; v < g.size(); ++v) {
    Rational lhs = row_lhs(g, tau, v);
    report.add_row(g.id_of(v), lhs, lhs <= T.T);
  }
  return report;
}

ConditionReport check_row2_designated(const ConflictGraph& g, const DemandVector& tau,
                                      const Horizon& T, const std::string& designated) {
  tau.validate_against(g);
  const std::size_t root = g.index_of(designated);
  ConditionReport report;
  report.condition_name = "row2-designated";
  report.semantics = "sufficient";
  for (std::size_t v = 0; v < g.size(); ++v) {
    Rational lhs = v == root ? row_lhs(g, tau, v) : row2_lhs(g, tau, v);
    report.add_row(g.id_of(v), lhs, lhs <= T.T);
  }
  return report;
}

ConditionReport check_row2(const ConflictGraph& g, const DemandVector& tau,
                           const Horizon& T) {
  tau.validate_against(g);
  // Eligibility is per connected component: a complete component (beyond a
  // lone vertex) or an odd cycle makes the discounted condition unsound
  // there, so the whole check is refused naming the exclusion.
  for (const auto& component : connected_components(g)) {
    std::size_t internal_edges = 0;
    for (std::size_t v : component) internal_edges += g.degree(v);
    internal_edges /= 2;
    const std::size_t k = component.size();
    if (k >= 2 && internal_edges == k * (k - 1) / 2) {
      throw NotApplicableError("check_row2: component containing '" +
                               g.id_of(component.front()) + "' is a complete graph");
    }
    if (k >= 3 && k % 2 == 1 &&
        std::all_of(component.begin(), component.end(),
                    [&g](std::size_t v) { return g.degree(v) == 2; }) &&
        internal_edges == k) {
      throw NotApplicableError("check_row2: component containing '" +
                               g.id_of(component.front()) + "' is an odd cycle");
    }
  }

  ConditionReport report;
  report.condition_name = "row2";
  report.semantics = "sufficient";
  for (std::size_t v = 0; v < g.size(); ++v) {
    Rational lhs = row2_lhs(g, tau, v);
    report.add_row(g.id_of(v), lhs, lhs <= T.T);
  }
  return report;
}

ConditionReport check_degree(const ConflictGraph& g, const DemandVector& tau,
                             const Horizon& T) {
  tau.validate_against(g);
  ConditionReport report;
  report.condition_name = "degree";
  report.semantics = "sufficient";
  for (std::size_t v = 0; v < g.size(); ++v) {
    Rational lhs = degree_lhs(g, tau, v);
    report.add_row(g.id_of(v), lhs, lhs <= T.T);
  }
  return report;
}

ConditionReport check_mixed(const ConflictGraph& g, const DemandVector& tau,
                            const Horizon& T) {
  tau.validate_against(g);
  ConditionReport report;
  report.condition_name = "mixed";
  report.semantics = "sufficient";
  for (std::size_t v = 0; v < g.size(); ++v) {
    Rational lhs = min(row_lhs(g, tau, v), degree_lhs(g, tau, v));
    report.add_row(g.id_of(v), lhs, lhs <= T.T);
  }
  return report;
}

ConditionReport check_clique(const ConflictGraph& g, const DemandVector& tau,
                             const Horizon& T, const Rational& scale,
                             const EnumLimits& limits) {
  tau.validate_against(g);
  if (scale.sign() <= 0) throw StructuralError("clique scale must be positive");

  ConditionReport report;
  report.condition_name = "clique";
  if (scale == Rational(1)) {
    report.semantics = "necessary";
  } else if (scale < Rational(1)) {
    report.semantics = "sufficient for graphs with imperfection ratio <= " +
                       (Rational(1) / scale).str();
  }

  const Rational bound = scale * T.T;
  for (const auto& clique : invariants::maximal_cliques(g, limits)) {
    Rational lhs;
    for (const auto& id : clique) lhs += tau.get(id);
    report.add_row(join_plus(clique), lhs, lhs <= bound);
  }
  return report;
}

ConditionReport check_row_primary(const NetworkGraph& n, const DemandVector& tau,
                                  const Horizon& T) {
  validate_link_demands(n, tau);
  const auto sums = node_sums(n, tau);

  ConditionReport report;
  report.condition_name = "row-primary";
  report.semantics = "sufficient";
  for (std::size_t k = 0; k < n.link_count(); ++k) {
    const auto& link = n.links()[k];
    const std::string id = n.link_id(k);
    const Rational lhs =
        sums[n.node_index(link.u)] + sums[n.node_index(link.v)] - tau.get(id);
    report.add_row(id, lhs, lhs <= T.T);
  }
  return report;
}

ConditionReport check_clique_line_scaled(const NetworkGraph& n, const DemandVector& tau,
                                         const Horizon& T) {
  validate_link_demands(n, tau);
  const auto sums = node_sums(n, tau);
  const Rational bound = scale_line_graph() * T.T;

  ConditionReport report;
  report.condition_name = "clique-line-scaled";
  report.semantics = "sufficient";
  for (std::size_t v = 0; v < n.node_count(); ++v) {
    report.add_row(n.nodes()[v], sums[v], sums[v] <= bound);
  }

  const auto& nodes = n.nodes();
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    for (std::size_t b = a + 1; b < nodes.size(); ++b) {
      if (n.find_link(nodes[a], nodes[b]) == NetworkGraph::npos) continue;
      for (std::size_t c = b + 1; c < nodes.size(); ++c) {
        if (n.find_link(nodes[a], nodes[c]) == NetworkGraph::npos) continue;
        if (n.find_link(nodes[b], nodes[c]) == NetworkGraph::npos) continue;
        const Rational lhs = tau.get(NetworkGraph::link_id(nodes[a], nodes[b])) +
                             tau.get(NetworkGraph::link_id(nodes[a], nodes[c])) +
                             tau.get(NetworkGraph::link_id(nodes[b], nodes[c]));
        report.add_row(join_plus({nodes[a], nodes[b], nodes[c]}), lhs, lhs <= bound);
      }
    }
  }
  return report;
}

ConditionReport check_shannon(const NetworkGraph& n, const DemandVector& tau,
                              const Horizon& T) {
  validate_link_demands(n, tau);
  const auto sums = node_sums(n, tau);
  const Rational bound = scale_shannon() * T.T;

  ConditionReport report;
  report.condition_name = "shannon";
  report.semantics = "sufficient";
  for (std::size_t v = 0; v < n.node_count(); ++v) {
    report.add_row(n.nodes()[v], sums[v], sums[v] <= bound);
  }
  return report;
}

}  // namespace linksched::admission
