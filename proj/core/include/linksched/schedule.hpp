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

#ifndef LINKSCHED_SCHEDULE_HPP
#define LINKSCHED_SCHEDULE_HPP

#include <map>
#include <string>
#include <vector>

#include "linksched/conflict_graph.hpp"
#include "linksched/demand.hpp"
#include "linksched/interval_set.hpp"
#include "linksched/rational.hpp"

namespace linksched {

/// Interval-form schedule: each link owns a union of disjoint subintervals
/// of [0, T). Links absent from the map are never active.
struct Schedule {
  Horizon horizon;
  std::map<std::string, IntervalSet> assignment;

  explicit Schedule(Horizon h) : horizon(std::move(h)) {}

  IntervalSet of(const std::string& id) const {
    auto it = assignment.find(id);
    return it == assignment.end() ? IntervalSet{} : it->second;
  }
};

/// Set-form schedule: a duration for each independent set. Keys are sorted
/// vertex-id lists; adding the same set twice accumulates.
struct SetFormSchedule {
  Horizon horizon;
  std::map<std::vector<std::string>, Rational> durations;

  explicit SetFormSchedule(Horizon h) : horizon(std::move(h)) {}

  void add(std::vector<std::string> members, const Rational& duration);
  Rational total_duration() const;
};

/// Frame form: the horizon cut into K equal slots, each independent set
/// active on a run of consecutive slots.
struct FrameSchedule {
  unsigned long slot_count = 0;  // K

  struct Run {
    std::vector<std::string> members;
    unsigned long first_slot = 0;
    unsigned long slots = 0;  // M_j
  };
  std::vector<Run> runs;

  /// Active independent set in the given slot; empty when idle.
  std::vector<std::string> active_set(unsigned long slot) const;
};

struct Violation {
  enum class Kind { Deficit, Overlap, OutOfHorizon };
  Kind kind;
  std::string a;       // vertex, or first vertex of an overlapping pair
  std::string b;       // second vertex of an overlapping pair, else empty
  std::string detail;  // human-readable specifics (amounts, ranges)
};

struct ValidationVerdict {
  bool ok = true;
  std::vector<Violation> violations;
};

/// Checks that s satisfies τ on g within [0, T): per-link measure covers the
/// demand, adjacent links overlap only in measure zero, and every interval
/// lies inside the horizon. Unknown vertex ids raise StructuralError.
ValidationVerdict validate_schedule(const ConflictGraph& g, const DemandVector& tau,
                                    const Horizon& T, const Schedule& s);

/// Lays the independent sets of `set_form` consecutively on [0, T) and
/// returns the induced interval-form schedule. Every key must be an
/// independent set of g and the durations must fit in the horizon.
Schedule set_form_to_intervals(const ConflictGraph& g, const SetFormSchedule& set_form);

/// Splits the horizon into K equal slots, K the least common multiple of the
/// denominators of the normalized durations t_j / T; set j occupies
/// M_j = K * t_j / T consecutive slots.
FrameSchedule discretize_schedule(const SetFormSchedule& set_form);

}  // namespace linksched

#endif  // LINKSCHED_SCHEDULE_HPP
