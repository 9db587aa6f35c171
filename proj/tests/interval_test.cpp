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

#include "linksched/interval_set.hpp"

#include <gtest/gtest.h>

#include "linksched/errors.hpp"
#include "linksched/prng.hpp"

namespace linksched {
namespace {

TEST(IntervalSet, MergesAbuttingPieces) {
  const IntervalSet s = IntervalSet::from_intervals(
      {{Rational(0), Rational(1, 2)}, {Rational(1, 2), Rational(1)}});
  ASSERT_EQ(s.intervals().size(), 1u);
  EXPECT_EQ(s.measure(), Rational(1));
}

TEST(IntervalSet, RejectsOverlapAndEmptyPieces) {
  EXPECT_THROW(IntervalSet::from_intervals(
                   {{Rational(0), Rational(3, 4)}, {Rational(1, 2), Rational(1)}}),
               StructuralError);
  EXPECT_THROW(IntervalSet::single(Rational(1), Rational(1)), StructuralError);
}

TEST(IntervalSet, IntersectionMeasure) {
  const IntervalSet a = IntervalSet::single(Rational(0), Rational(1, 2));
  const IntervalSet b = IntervalSet::single(Rational(1, 4), Rational(3, 4));
  EXPECT_EQ(IntervalSet::intersection_measure(a, b), Rational(1, 4));

  // Shared endpoints only: measure zero.
  const IntervalSet c = IntervalSet::single(Rational(1, 2), Rational(1));
  EXPECT_EQ(IntervalSet::intersection_measure(a, c), Rational(0));
}

TEST(IntervalSet, ComplementAndPrefix) {
  const IntervalSet s = IntervalSet::from_intervals(
      {{Rational(1, 4), Rational(1, 2)}, {Rational(3, 4), Rational(1)}});
  const IntervalSet gaps = s.complement_within(Rational(0), Rational(1));
  EXPECT_EQ(gaps.measure(), Rational(1, 2));
  ASSERT_EQ(gaps.intervals().size(), 2u);
  EXPECT_EQ(gaps.intervals()[0].lo, Rational(0));
  EXPECT_EQ(gaps.intervals()[0].hi, Rational(1, 4));

  const IntervalSet prefix = gaps.take_prefix(Rational(3, 8));
  EXPECT_EQ(prefix.measure(), Rational(3, 8));
  EXPECT_EQ(prefix.intervals().back().hi, Rational(5, 8));
  EXPECT_THROW(gaps.take_prefix(Rational(2)), StructuralError);
}

// Measure is additive under disjoint union, and the complement within
// [0, T) has measure T minus the measure of the set.
TEST(IntervalSet, MeasureAdditivityProperty) {
  SplitMix64 rng(7);
  const Rational T(4);
  for (int trial = 0; trial < 200; ++trial) {
    // Random disjoint pieces on a 1/8 grid in [0, 4).
    IntervalSet s;
    Rational cursor(0);
    Rational total(0);
    while (true) {
      const Rational skip(static_cast<long>(rng.below(4)), 8);
      const Rational len(static_cast<long>(1 + rng.below(4)), 8);
      if (cursor + skip + len > T) break;
      s = IntervalSet::set_union(
          s, IntervalSet::single(cursor + skip, cursor + skip + len));
      total += len;
      cursor += skip + len;
    }
    EXPECT_EQ(s.measure(), total);
    EXPECT_EQ(s.complement_within(Rational(0), T).measure(), T - total);
  }
}

TEST(IntervalSet, UnionIsIdempotentAndCommutative) {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto random_set = [&rng]() {
      IntervalSet s;
      const int pieces = 1 + static_cast<int>(rng.below(3));
      for (int i = 0; i < pieces; ++i) {
        const Rational lo(static_cast<long>(rng.below(16)), 4);
        const Rational len(static_cast<long>(1 + rng.below(6)), 4);
        s = IntervalSet::set_union(s, IntervalSet::single(lo, lo + len));
      }
      return s;
    };
    const IntervalSet a = random_set();
    const IntervalSet b = random_set();
    EXPECT_EQ(IntervalSet::set_union(a, b), IntervalSet::set_union(b, a));
    EXPECT_EQ(IntervalSet::set_union(a, a), a);
  }
}

}  // namespace
}  // namespace linksched
