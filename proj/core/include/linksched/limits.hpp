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

#ifndef LINKSCHED_LIMITS_HPP
#define LINKSCHED_LIMITS_HPP

#include <cstddef>

namespace linksched {

/// Caps on the exponential enumerations (independent sets, cliques).
/// Exceeding either cap raises ResourceLimitError instead of hanging.
struct EnumLimits {
  std::size_t max_vertices = 30;
  std::size_t max_sets = 10000;
};

}  // namespace linksched

#endif  // LINKSCHED_LIMITS_HPP
