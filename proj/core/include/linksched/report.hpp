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

#ifndef LINKSCHED_REPORT_HPP
#define LINKSCHED_REPORT_HPP

#include <map>
#include <string>
#include <vector>

#include "linksched/rational.hpp"

namespace linksched {

/// Outcome of one admission-control condition. Rows are keyed by vertex id,
/// or by a clique label ("a+b+c") for the clique constraints. `overall` is
/// the conjunction of the per-row verdicts.
struct ConditionReport {
  struct Row {
    Rational lhs;
    bool passes = true;
  };

  std::string condition_name;
  std::map<std::string, Row> rows;
  bool overall = true;
  /// Which direction the condition certifies: "sufficient" (pass implies
  /// feasible), "necessary" (fail implies infeasible), or both.
  std::string semantics;

  void add_row(const std::string& key, Rational lhs, bool passes) {
    overall = overall && passes;
    rows[key] = Row{std::move(lhs), passes};
  }

  std::vector<std::string> failing() const {
    std::vector<std::string> out;
    for (const auto& [key, row] : rows) {
      if (!row.passes) out.push_back(key);
    }
    return out;
  }
};

}  // namespace linksched

#endif  // LINKSCHED_REPORT_HPP
