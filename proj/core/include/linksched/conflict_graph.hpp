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

#ifndef LINKSCHED_CONFLICT_GRAPH_HPP
#define LINKSCHED_CONFLICT_GRAPH_HPP

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace linksched {

/// Undirected simple graph whose vertices are communication links and whose
/// edges mark pairs that interfere. Vertex ids are strings; vertex order is
/// the construction order and is preserved (schedulers depend on it).
/// Immutable after construction.
class ConflictGraph {
public:
  ConflictGraph() = default;
  ConflictGraph(std::vector<std::string> vertices,
                const std::vector<std::pair<std::string, std::string>>& edges);

  std::size_t size() const { return ids_.size(); }
  std::size_t edge_count() const { return edges_; }
  const std::vector<std::string>& vertices() const { return ids_; }

  bool has_vertex(const std::string& id) const { return index_.count(id) > 0; }
  /// Throws StructuralError if the id is unknown.
  std::size_t index_of(const std::string& id) const;
  const std::string& id_of(std::size_t i) const { return ids_[i]; }

  bool adjacent(std::size_t a, std::size_t b) const { return matrix_[a][b]; }
  bool adjacent(const std::string& a, const std::string& b) const {
    return matrix_[index_of(a)][index_of(b)];
  }

  /// Neighbor indices, sorted ascending.
  const std::vector<std::size_t>& neighbors(std::size_t i) const { return adj_[i]; }
  std::size_t degree(std::size_t i) const { return adj_[i].size(); }

  /// Edge list in a deterministic order (a < b by index).
  std::vector<std::pair<std::string, std::string>> edges() const;

private:
  std::vector<std::string> ids_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::vector<bool>> matrix_;
  std::size_t edges_ = 0;
};

/// Connected components as sorted index lists, ordered by smallest member.
std::vector<std::vector<std::size_t>> connected_components(const ConflictGraph& g);

/// Components of the subgraph induced by `subset` (indices into g).
std::vector<std::vector<std::size_t>> components_of_subset(
    const ConflictGraph& g, const std::vector<std::size_t>& subset);

bool is_connected(const ConflictGraph& g);
bool is_complete(const ConflictGraph& g);
bool is_odd_cycle(const ConflictGraph& g);

}  // namespace linksched

#endif  // LINKSCHED_CONFLICT_GRAPH_HPP
