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

#ifndef LINKSCHED_SCHEDULER_HPP
#define LINKSCHED_SCHEDULER_HPP

#include <string>
#include <vector>

#include "linksched/conflict_graph.hpp"
#include "linksched/demand.hpp"
#include "linksched/schedule.hpp"

namespace linksched::scheduler {

// Every scheduler first verifies its admission condition and refuses with
// ConditionFailedError (naming the failing vertex) when it does not hold.
// Interval choice is always leftmost-feasible-gaps-first and every
// tie-break is lexicographic by vertex id, so identical inputs produce
// identical schedules.

/// Greedy scheduler behind the row constraints: processes vertices in the
/// given order (input order by default) and gives each one the leftmost
/// gaps not used by its neighbors. Requires check_row to pass.
Schedule schedule_row(const ConflictGraph& g, const DemandVector& tau, const Horizon& T,
                      const std::vector<std::string>& order = {});

/// Scheduler behind the degree and mixed conditions: like schedule_row but
/// processes vertices by nondecreasing demand. Requires check_mixed to pass
/// (which row-passing and degree-passing demands always do). The sort makes
/// this scheduler centralized even though the admission test is local.
Schedule schedule_degree_or_mixed(const ConflictGraph& g, const DemandVector& tau,
                                  const Horizon& T);

/// Scheduler behind the designated-link condition: builds a connected
/// expansion order starting at the designated link and assigns intervals in
/// reverse order, the designated link last. Requires a connected graph and
/// check_row2_designated to pass.
Schedule schedule_row2_designated(const ConflictGraph& g, const DemandVector& tau,
                                  const Horizon& T, const std::string& designated);

/// Scheduler behind the neighbor-discounted row condition, by case analysis
/// on the vertex connectivity of each component. Requires check_row2 to
/// pass (which also enforces eligibility of every component).
Schedule schedule_row2(const ConflictGraph& g, const DemandVector& tau, const Horizon& T);

}  // namespace linksched::scheduler

#endif  // LINKSCHED_SCHEDULER_HPP
