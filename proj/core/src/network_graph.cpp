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

#include "linksched/network_graph.hpp"

#include <set>
#include <utility>

#include "linksched/errors.hpp"

namespace linksched {

NetworkGraph::NetworkGraph(std::vector<std::string> nodes,
                           std::vector<NetworkLink> links)
    : nodes_(std::move(nodes)), links_(std::move(links)) {
  node_index_.reserve(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!node_index_.emplace(nodes_[i], i).second) {
      throw StructuralError("duplicate node id '" + nodes_[i] + "'");
    }
  }
  incidence_.assign(nodes_.size(), {});
  std::set<std::pair<std::string, std::string>> seen;
  for (std::size_t k = 0; k < links_.size(); ++k) {
    auto& link = links_[k];
    if (link.u == link.v) {
      throw StructuralError("link endpoints must be distinct: '" + link.u + "'");
    }
    if (link.mult < 1) {
      throw StructuralError("link multiplicity must be at least 1");
    }
    const std::size_t iu = node_index(link.u);
    const std::size_t iv = node_index(link.v);
    if (link.v < link.u) std::swap(link.u, link.v);
    if (!seen.emplace(link.u, link.v).second) {
      throw StructuralError("duplicate link " + link_id(link.u, link.v) +
                            " (use mult for parallel edges)");
    }
    incidence_[iu].push_back(k);
    incidence_[iv].push_back(k);
  }
}

std::size_t NetworkGraph::node_index(const std::string& id) const {
  auto it = node_index_.find(id);
  if (it == node_index_.end()) {
    throw StructuralError("unknown node id '" + id + "'");
  }
  return it->second;
}

std::size_t NetworkGraph::find_link(const std::string& u, const std::string& v) const {
  for (std::size_t k = 0; k < links_.size(); ++k) {
    if ((links_[k].u == u && links_[k].v == v) ||
        (links_[k].u == v && links_[k].v == u)) {
      return k;
    }
  }
  return npos;
}

std::string NetworkGraph::link_id(const std::string& u, const std::string& v) {
  return u <= v ? u + "-" + v : v + "-" + u;
}

}  // namespace linksched
