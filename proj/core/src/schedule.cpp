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

#include "linksched/schedule.hpp"

#include <algorithm>
#include <climits>

#include "linksched/errors.hpp"

namespace linksched {

void SetFormSchedule::add(std::vector<std::string> members, const Rational& duration) {
  if (duration.is_negative()) throw StructuralError("negative set duration");
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
    throw StructuralError("repeated vertex in independent set key");
  }
  durations[std::move(members)] += duration;
}

Rational SetFormSchedule::total_duration() const {
  Rational sum;
  for (const auto& [members, t] : durations) sum += t;
  return sum;
}

std::vector<std::string> FrameSchedule::active_set(unsigned long slot) const {
  for (const auto& run : runs) {
    if (slot >= run.first_slot && slot < run.first_slot + run.slots) {
      return run.members;
    }
  }
  return {};
}

ValidationVerdict validate_schedule(const ConflictGraph& g, const DemandVector& tau,
                                    const Horizon& T, const Schedule& s) {
  tau.validate_against(g);
  for (const auto& [id, intervals] : s.assignment) {
    if (!g.has_vertex(id)) {
      throw StructuralError("schedule names unknown vertex id '" + id + "'");
    }
  }

  ValidationVerdict verdict;
  const auto flag = [&verdict](Violation v) {
    verdict.ok = false;
    verdict.violations.push_back(std::move(v));
  };

  const Rational zero(0);
  for (const auto& [id, intervals] : s.assignment) {
    for (const auto& piece : intervals.intervals()) {
      if (piece.lo < zero || piece.hi > T.T) {
        flag({Violation::Kind::OutOfHorizon, id, "",
              "[" + piece.lo.str() + "," + piece.hi.str() + ") outside [0," +
                  T.T.str() + ")"});
      }
    }
  }

  for (const auto& id : g.vertices()) {
    const Rational need = tau.get(id);
    const Rational have = s.of(id).measure();
    if (have < need) {
      flag({Violation::Kind::Deficit, id, "",
            "measure " + have.str() + " < demand " + need.str()});
    }
  }

  for (std::size_t i = 0; i < g.size(); ++i) {
    const IntervalSet a = s.of(g.id_of(i));
    if (a.empty()) continue;
    for (std::size_t j : g.neighbors(i)) {
      if (j <= i) continue;
      const Rational overlap = IntervalSet::intersection_measure(a, s.of(g.id_of(j)));
      if (overlap.sign() > 0) {
        flag({Violation::Kind::Overlap, g.id_of(i), g.id_of(j),
              "adjacent links overlap in measure " + overlap.str()});
      }
    }
  }
  return verdict;
}

Schedule set_form_to_intervals(const ConflictGraph& g, const SetFormSchedule& set_form) {
  if (set_form.total_duration() > set_form.horizon.T) {
    throw StructuralError("set durations exceed the horizon");
  }

  Schedule out(set_form.horizon);
  Rational cursor(0);
  for (const auto& [members, duration] : set_form.durations) {
    std::vector<std::size_t> indices;
    indices.reserve(members.size());
    for (const auto& id : members) indices.push_back(g.index_of(id));
    for (std::size_t x = 0; x < indices.size(); ++x) {
      for (std::size_t y = x + 1; y < indices.size(); ++y) {
        if (g.adjacent(indices[x], indices[y])) {
          throw StructuralError("set {" + members[x] + "," + members[y] +
                                ",...} is not independent");
        }
      }
    }
    if (duration.is_zero()) continue;
    const Rational next = cursor + duration;
    for (const auto& id : members) {
      out.assignment[id] =
          IntervalSet::set_union(out.assignment[id], IntervalSet::single(cursor, next));
    }
    cursor = next;
  }
  return out;
}

FrameSchedule discretize_schedule(const SetFormSchedule& set_form) {
  if (set_form.total_duration() > set_form.horizon.T) {
    throw StructuralError("set durations exceed the horizon");
  }

  mpz_class k(1);
  std::vector<Rational> normalized;
  normalized.reserve(set_form.durations.size());
  for (const auto& [members, duration] : set_form.durations) {
    const Rational u = duration / set_form.horizon.T;
    normalized.push_back(u);
    mpz_lcm(k.get_mpz_t(), k.get_mpz_t(), u.denominator().get_mpz_t());
  }
  if (!k.fits_ulong_p()) {
    throw ResourceLimitError("frame slot count does not fit a machine word");
  }

  FrameSchedule frame;
  frame.slot_count = k.get_ui();
  unsigned long cursor = 0;
  std::size_t index = 0;
  for (const auto& [members, duration] : set_form.durations) {
    mpq_class scaled = normalized[index++].raw() * k;
    scaled.canonicalize();  // denominator divides k, so this is an integer
    const unsigned long slots = scaled.get_num().get_ui();
    if (slots == 0) continue;
    frame.runs.push_back({members, cursor, slots});
    cursor += slots;
  }
  return frame;
}

}  // namespace linksched
