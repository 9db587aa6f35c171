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

#ifndef LINKSCHED_DEMAND_HPP
#define LINKSCHED_DEMAND_HPP

#include <map>
#include <string>

#include "linksched/conflict_graph.hpp"
#include "linksched/errors.hpp"
#include "linksched/rational.hpp"

namespace linksched {

/// Per-link required active time. Vertices absent from the map have
/// demand zero. Demands are nonnegative by construction.
class DemandVector {
public:
  DemandVector() = default;

  void set(const std::string& id, Rational value) {
    if (value.is_negative()) {
      throw StructuralError("negative demand for '" + id + "'");
    }
    if (value.is_zero()) {
      entries_.erase(id);
    } else {
      entries_[id] = std::move(value);
    }
  }

  Rational get(const std::string& id) const {
    auto it = entries_.find(id);
    return it == entries_.end() ? Rational(0) : it->second;
  }

  const std::map<std::string, Rational>& entries() const { return entries_; }

  /// Every key must name a vertex of g.
  void validate_against(const ConflictGraph& g) const {
    for (const auto& [id, value] : entries_) {
      if (!g.has_vertex(id)) {
        throw StructuralError("demand names unknown vertex id '" + id + "'");
      }
    }
  }

  Rational total() const {
    Rational sum;
    for (const auto& [id, value] : entries_) sum += value;
    return sum;
  }

private:
  std::map<std::string, Rational> entries_;
};

/// Scheduling horizon [0, T), T > 0.
struct Horizon {
  Rational T;

  explicit Horizon(Rational t) : T(std::move(t)) {
    if (T.sign() <= 0) throw StructuralError("horizon must be positive");
  }
};

}  // namespace linksched

#endif  // LINKSCHED_DEMAND_HPP
