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

#ifndef LINKSCHED_NETWORK_GRAPH_HPP
#define LINKSCHED_NETWORK_GRAPH_HPP

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

namespace linksched {

/// A network link between two distinct nodes. `mult` counts parallel edges
/// (multigraph support); parallel links are represented by one entry.
struct NetworkLink {
  std::string u;
  std::string v;
  unsigned long mult = 1;
};

/// Node/link view of the network. The conflict graph is derived from this
/// under a chosen interference model (see generators::line_graph for
/// primary interference).
class NetworkGraph {
public:
  NetworkGraph() = default;
  NetworkGraph(std::vector<std::string> nodes, std::vector<NetworkLink> links);

  const std::vector<std::string>& nodes() const { return nodes_; }
  const std::vector<NetworkLink>& links() const { return links_; }

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t link_count() const { return links_.size(); }

  std::size_t node_index(const std::string& id) const;
  bool has_node(const std::string& id) const { return node_index_.count(id) > 0; }

  /// Indices of the links incident to node i, ascending.
  const std::vector<std::size_t>& incident(std::size_t node) const {
    return incidence_[node];
  }

  /// Link index for the unordered pair, or npos when absent.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t find_link(const std::string& u, const std::string& v) const;

  /// Canonical conflict-vertex id for a link: endpoints sorted, joined by '-'.
  static std::string link_id(const std::string& u, const std::string& v);
  std::string link_id(std::size_t link) const {
    return link_id(links_[link].u, links_[link].v);
  }

private:
  std::vector<std::string> nodes_;
  std::vector<NetworkLink> links_;
  std::unordered_map<std::string, std::size_t> node_index_;
  std::vector<std::vector<std::size_t>> incidence_;
};

}  // namespace linksched

#endif  // LINKSCHED_NETWORK_GRAPH_HPP
