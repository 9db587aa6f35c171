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

#ifndef LINKSCHED_DETAIL_SIMPLEX_HPP
#define LINKSCHED_DETAIL_SIMPLEX_HPP

#include <vector>

#include "linksched/rational.hpp"

namespace linksched::detail {

struct LpResult {
  Rational objective;
  std::vector<Rational> primal;  // one value per original variable
  std::vector<Rational> dual;    // one value per constraint row
};

/// Maximizes c^T x subject to A x <= b, x >= 0, where b >= 0 so the
/// all-slack basis is feasible. Exact rational arithmetic throughout;
/// Bland's rule on both the entering and the leaving choice, so the
/// method cannot cycle and the result is deterministic. The duals are
/// read off the slack reduced costs; for our covering LPs they are the
/// optimal set durations. Throws on an unbounded program (none of the
/// programs built by the oracle are unbounded).
LpResult simplex_max(const std::vector<std::vector<Rational>>& A,
                     const std::vector<Rational>& b, const std::vector<Rational>& c);

}  // namespace linksched::detail

#endif  // LINKSCHED_DETAIL_SIMPLEX_HPP
