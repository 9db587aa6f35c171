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

#include <gtest/gtest.h>

#include "linksched/errors.hpp"
#include "linksched/generators.hpp"
#include "linksched/oracle.hpp"
#include "linksched/prng.hpp"
#include "test_util.hpp"

namespace linksched {
namespace {

using testutil::R;
using testutil::demands;
using testutil::make_graph;

TEST(ValidateSchedule, TwoDisjointHalvesOnAnEdge) {
  const ConflictGraph g = make_graph({"a", "b"}, {{"a", "b"}});
  const DemandVector tau = demands({{"a", "1/2"}, {"b", "1/2"}});
  Schedule s{Horizon{R("1")}};
  s.assignment["a"] = IntervalSet::single(R("0"), R("1/2"));
  s.assignment["b"] = IntervalSet::single(R("1/2"), R("1"));
  EXPECT_TRUE(validate_schedule(g, tau, Horizon{R("1")}, s).ok);
}

TEST(ValidateSchedule, FlagsOverlapBetweenNeighbors) {
  const ConflictGraph g = make_graph({"a", "b"}, {{"a", "b"}});
  const DemandVector tau = demands({{"a", "1/2"}, {"b", "1/2"}});
  Schedule s{Horizon{R("1")}};
  s.assignment["a"] = IntervalSet::single(R("0"), R("1/2"));
  s.assignment["b"] = IntervalSet::single(R("1/4"), R("3/4"));
  const auto verdict = validate_schedule(g, tau, Horizon{R("1")}, s);
  ASSERT_FALSE(verdict.ok);
  ASSERT_EQ(verdict.violations.size(), 1u);
  EXPECT_EQ(verdict.violations[0].kind, Violation::Kind::Overlap);
  EXPECT_EQ(verdict.violations[0].a, "a");
  EXPECT_EQ(verdict.violations[0].b, "b");
}

TEST(ValidateSchedule, FlagsDeficitAndHorizonViolations) {
  const ConflictGraph g = make_graph({"a"}, {});
  Schedule s{Horizon{R("1")}};
  s.assignment["a"] = IntervalSet::single(R("3/4"), R("5/4"));
  const auto verdict =
      validate_schedule(g, demands({{"a", "1"}}), Horizon{R("1")}, s);
  ASSERT_FALSE(verdict.ok);
  EXPECT_EQ(verdict.violations.size(), 2u);  // out of horizon + deficit
}

TEST(ValidateSchedule, UnknownVertexIsStructural) {
  const ConflictGraph g = make_graph({"a"}, {});
  Schedule s{Horizon{R("1")}};
  s.assignment["zz"] = IntervalSet::single(R("0"), R("1"));
  EXPECT_THROW(validate_schedule(g, DemandVector{}, Horizon{R("1")}, s),
               StructuralError);

  DemandVector bad;
  bad.set("zz", R("1"));
  EXPECT_THROW(validate_schedule(g, bad, Horizon{R("1")}, Schedule{Horizon{R("1")}}),
               StructuralError);
}

// An optimal C5 schedule (five pairs at 1/2 on horizon 5/2) scaled to
// demands 1/2 wraps around the cycle and stays valid on horizon 5/4.
TEST(ValidateSchedule, CycleFiveWrapAround) {
  const ConflictGraph g = generators::cycle(5);
  SetFormSchedule sets{Horizon{R("5/4")}};
  for (int i = 0; i < 5; ++i) {
    sets.add({"v" + std::to_string(i), "v" + std::to_string((i + 2) % 5)}, R("1/4"));
  }
  const Schedule s = set_form_to_intervals(g, sets);
  DemandVector tau;
  for (const auto& id : g.vertices()) tau.set(id, R("1/2"));
  EXPECT_TRUE(validate_schedule(g, tau, Horizon{R("5/4")}, s).ok);
}

TEST(SetFormToIntervals, LaysSetsConsecutively) {
  const ConflictGraph g = make_graph({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}});
  SetFormSchedule sets{Horizon{R("1")}};
  sets.add({"a"}, R("1/2"));
  sets.add({"b", "c"}, R("1/2"));
  const Schedule s = set_form_to_intervals(g, sets);
  EXPECT_EQ(s.of("a"), IntervalSet::single(R("0"), R("1/2")));
  EXPECT_EQ(s.of("b"), IntervalSet::single(R("1/2"), R("1")));
  EXPECT_EQ(s.of("c"), IntervalSet::single(R("1/2"), R("1")));
}

TEST(SetFormToIntervals, EmptyMapGivesEmptySchedule) {
  const ConflictGraph g = make_graph({"a"}, {});
  const Schedule s = set_form_to_intervals(g, SetFormSchedule{Horizon{R("1")}});
  EXPECT_TRUE(s.assignment.empty());
  EXPECT_EQ(s.of("a").measure(), R("0"));
}

TEST(SetFormToIntervals, CycleFiveCoverUnit) {
  const ConflictGraph g = generators::cycle(5);
  SetFormSchedule sets{Horizon{R("5/2")}};
  for (int i = 0; i < 5; ++i) {
    sets.add({"v" + std::to_string(i), "v" + std::to_string((i + 2) % 5)}, R("1/2"));
  }
  const Schedule s = set_form_to_intervals(g, sets);
  DemandVector tau;
  for (const auto& id : g.vertices()) {
    EXPECT_EQ(s.of(id).measure(), R("1"));
    tau.set(id, R("1"));
  }
  EXPECT_TRUE(validate_schedule(g, tau, Horizon{R("5/2")}, s).ok);
}

TEST(SetFormToIntervals, RejectsDependentSets) {
  const ConflictGraph g = make_graph({"a", "b"}, {{"a", "b"}});
  SetFormSchedule sets{Horizon{R("1")}};
  sets.add({"a", "b"}, R("1/2"));
  EXPECT_THROW(set_form_to_intervals(g, sets), StructuralError);
}

TEST(SetFormToIntervals, RejectsOverfullSchedules) {
  const ConflictGraph g = make_graph({"a"}, {});
  SetFormSchedule sets{Horizon{R("1")}};
  sets.add({"a"}, R("2"));
  EXPECT_THROW(set_form_to_intervals(g, sets), StructuralError);
}

TEST(Discretize, LcmOfNormalizedDurations) {
  SetFormSchedule sets{Horizon{R("1")}};
  sets.add({"a"}, R("1/2"));
  sets.add({"b"}, R("1/3"));
  const FrameSchedule frame = discretize_schedule(sets);
  EXPECT_EQ(frame.slot_count, 6u);
  ASSERT_EQ(frame.runs.size(), 2u);
  EXPECT_EQ(frame.runs[0].slots, 3u);  // {a} first in key order
  EXPECT_EQ(frame.runs[1].slots, 2u);
  EXPECT_EQ(frame.active_set(0), std::vector<std::string>{"a"});
  EXPECT_EQ(frame.active_set(3), std::vector<std::string>{"b"});
  EXPECT_TRUE(frame.active_set(5).empty());  // idle tail slot
}

TEST(Discretize, SingleFullSlot) {
  SetFormSchedule sets{Horizon{R("1")}};
  sets.add({"a"}, R("1"));
  const FrameSchedule frame = discretize_schedule(sets);
  EXPECT_EQ(frame.slot_count, 1u);
  ASSERT_EQ(frame.runs.size(), 1u);
  EXPECT_EQ(frame.runs[0].slots, 1u);
}

TEST(Discretize, NormalizesByTheHorizon) {
  SetFormSchedule sets{Horizon{R("5/2")}};
  for (int i = 0; i < 5; ++i) {
    sets.add({"s" + std::to_string(i)}, R("1/2"));
  }
  const FrameSchedule frame = discretize_schedule(sets);
  EXPECT_EQ(frame.slot_count, 5u);
  for (const auto& run : frame.runs) EXPECT_EQ(run.slots, 1u);
}

// Any legal set-form schedule converts to a valid interval schedule for
// the demands it covers.
TEST(SetFormToIntervals, RandomLegalSchedulesValidate) {
  SplitMix64 rng(2026);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 3 + rng.below(6);
    const ConflictGraph g =
        generators::random_graph(n, Rational(1, 2), rng.next());

    SetFormSchedule sets{Horizon{R("1")}};
    DemandVector covered;
    const int set_count = 1 + static_cast<int>(rng.below(4));
    Rational budget_left(1);
    for (int k = 0; k < set_count; ++k) {
      // Random greedy independent set.
      std::vector<std::string> members;
      for (const auto& id : g.vertices()) {
        if (rng.below(2) == 0) continue;
        const std::size_t v = g.index_of(id);
        const bool clash = std::any_of(
            members.begin(), members.end(),
            [&](const std::string& w) { return g.adjacent(v, g.index_of(w)); });
        if (!clash) members.push_back(id);
      }
      if (members.empty()) continue;
      const Rational duration = budget_left * Rational(1, 1 + rng.below(4) + k);
      if (duration.is_zero()) continue;
      budget_left -= duration;
      sets.add(members, duration);
      for (const auto& id : members) covered.set(id, covered.get(id) + duration);
    }

    const Schedule s = set_form_to_intervals(g, sets);
    const auto verdict = validate_schedule(g, covered, Horizon{R("1")}, s);
    EXPECT_TRUE(verdict.ok) << "trial " << trial;
  }
}

}  // namespace
}  // namespace linksched
