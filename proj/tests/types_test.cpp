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

#include <gtest/gtest.h>

#include "linksched/conflict_graph.hpp"
#include "linksched/demand.hpp"
#include "linksched/errors.hpp"
#include "linksched/network_graph.hpp"
#include "linksched/schedule.hpp"
#include "test_util.hpp"

namespace linksched {
namespace {

using testutil::R;

TEST(ConflictGraphType, StructuralInvariants) {
  EXPECT_THROW(ConflictGraph({"a", "a"}, {}), StructuralError);
  EXPECT_THROW(ConflictGraph({"a"}, {{"a", "a"}}), StructuralError);
  EXPECT_THROW(ConflictGraph({"a"}, {{"a", "b"}}), StructuralError);

  // Repeated edges collapse; adjacency is symmetric.
  const ConflictGraph g({"a", "b"}, {{"a", "b"}, {"b", "a"}});
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_TRUE(g.adjacent("a", "b"));
  EXPECT_TRUE(g.adjacent("b", "a"));
  EXPECT_THROW(g.index_of("zz"), StructuralError);
}

TEST(ConflictGraphType, ComponentsAndClassPredicates) {
  const ConflictGraph g({"a", "b", "c", "d", "e"},
                        {{"a", "b"}, {"b", "c"}, {"d", "e"}});
  const auto components = connected_components(g);
  ASSERT_EQ(components.size(), 2u);
  EXPECT_EQ(components[0].size(), 3u);
  EXPECT_FALSE(is_connected(g));
  EXPECT_TRUE(is_connected(ConflictGraph({}, {})));
  EXPECT_FALSE(is_complete(g));
  EXPECT_TRUE(is_complete(ConflictGraph({"a"}, {})));
}

TEST(NetworkGraphType, StructuralInvariants) {
  EXPECT_THROW(NetworkGraph({"u"}, {{"u", "u", 1}}), StructuralError);
  EXPECT_THROW(NetworkGraph({"u", "v"}, {{"u", "w", 1}}), StructuralError);
  EXPECT_THROW(NetworkGraph({"u", "v"}, {{"u", "v", 0}}), StructuralError);
  EXPECT_THROW(NetworkGraph({"u", "v"}, {{"u", "v", 1}, {"v", "u", 1}}),
               StructuralError);

  const NetworkGraph n({"u", "v", "w"}, {{"v", "u", 3}, {"v", "w", 1}});
  EXPECT_EQ(n.link_id(0), "u-v");  // endpoints are stored sorted
  EXPECT_EQ(n.incident(n.node_index("v")).size(), 2u);
  EXPECT_EQ(n.find_link("w", "v"), 1u);
  EXPECT_EQ(n.find_link("u", "w"), NetworkGraph::npos);
}

TEST(DemandVectorType, NonNegativeAndSparse) {
  DemandVector tau;
  EXPECT_THROW(tau.set("a", R("-1/2")), StructuralError);
  tau.set("a", R("1/2"));
  tau.set("a", R("0"));  // zero entries are dropped
  EXPECT_TRUE(tau.entries().empty());
  EXPECT_EQ(tau.get("a"), R("0"));

  tau.set("b", R("1/3"));
  tau.set("c", R("1/6"));
  EXPECT_EQ(tau.total(), R("1/2"));
}

TEST(HorizonType, MustBePositive) {
  EXPECT_THROW(Horizon{R("0")}, StructuralError);
  EXPECT_THROW(Horizon{R("-1")}, StructuralError);
  EXPECT_EQ(Horizon{R("5/4")}.T, R("5/4"));
}

TEST(SetFormScheduleType, AccumulatesAndValidatesKeys) {
  SetFormSchedule s{Horizon{R("1")}};
  s.add({"b", "a"}, R("1/4"));
  s.add({"a", "b"}, R("1/4"));  // same set, key order normalized
  ASSERT_EQ(s.durations.size(), 1u);
  EXPECT_EQ(s.durations.begin()->second, R("1/2"));
  EXPECT_THROW(s.add({"a", "a"}, R("1/4")), StructuralError);
  EXPECT_THROW(s.add({"a"}, R("-1")), StructuralError);
}

TEST(DiscretizeType, RejectsOverfullSchedules) {
  SetFormSchedule s{Horizon{R("1")}};
  s.add({"a"}, R("2/3"));
  s.add({"b"}, R("2/3"));
  EXPECT_THROW(discretize_schedule(s), StructuralError);
}

}  // namespace
}  // namespace linksched
