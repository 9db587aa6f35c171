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

#include "linksched/conflict_graph.hpp"

#include <algorithm>
#include <queue>

#include "linksched/errors.hpp"

namespace linksched {

ConflictGraph::ConflictGraph(
    std::vector<std::string> vertices,
    const std::vector<std::pair<std::string, std::string>>& edges)
    : ids_(std::move(vertices)) {
  index_.reserve(ids_.size());
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (!index_.emplace(ids_[i], i).second) {
      throw StructuralError("duplicate vertex id '" + ids_[i] + "'");
    }
  }
  matrix_.assign(ids_.size(), std::vector<bool>(ids_.size(), false));
  adj_.assign(ids_.size(), {});
  for (const auto& [a, b] : edges) {
    const std::size_t i = index_of(a);
    const std::size_t j = index_of(b);
    if (i == j) throw StructuralError("self-loop on vertex '" + a + "'");
    if (matrix_[i][j]) continue;
    matrix_[i][j] = matrix_[j][i] = true;
    adj_[i].push_back(j);
    adj_[j].push_back(i);
    ++edges_;
  }
  for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

std::size_t ConflictGraph::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) {
    throw StructuralError("unknown vertex id '" + id + "'");
  }
  return it->second;
}

std::vector<std::pair<std::string, std::string>> ConflictGraph::edges() const {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(edges_);
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j : adj_[i]) {
      if (i < j) out.emplace_back(ids_[i], ids_[j]);
    }
  }
  return out;
}

std::vector<std::vector<std::size_t>> components_of_subset(
    const ConflictGraph& g, const std::vector<std::size_t>& subset) {
  std::vector<bool> in_subset(g.size(), false);
  for (std::size_t v : subset) in_subset[v] = true;
  std::vector<bool> seen(g.size(), false);
  std::vector<std::vector<std::size_t>> components;

  for (std::size_t start : subset) {
    if (seen[start]) continue;
    std::vector<std::size_t> component;
    std::queue<std::size_t> frontier;
    frontier.push(start);
    seen[start] = true;
    while (!frontier.empty()) {
      const std::size_t v = frontier.front();
      frontier.pop();
      component.push_back(v);
      for (std::size_t w : g.neighbors(v)) {
        if (in_subset[w] && !seen[w]) {
          seen[w] = true;
          frontier.push(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  std::sort(components.begin(), components.end());
  return components;
}

std::vector<std::vector<std::size_t>> connected_components(const ConflictGraph& g) {
  std::vector<std::size_t> all(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) all[i] = i;
  return components_of_subset(g, all);
}

bool is_connected(const ConflictGraph& g) {
  return connected_components(g).size() <= 1;
}

bool is_complete(const ConflictGraph& g) {
  const std::size_t n = g.size();
  return g.edge_count() == n * (n - 1) / 2;
}

bool is_odd_cycle(const ConflictGraph& g) {
  const std::size_t n = g.size();
  if (n < 3 || n % 2 == 0) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (g.degree(i) != 2) return false;
  }
  return is_connected(g);
}

}  // namespace linksched
