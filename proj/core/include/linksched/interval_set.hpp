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

#ifndef LINKSCHED_INTERVAL_SET_HPP
#define LINKSCHED_INTERVAL_SET_HPP

#include <vector>

#include "linksched/rational.hpp"

namespace linksched {

/// Half-open interval [lo, hi) with exact rational endpoints.
struct Interval {
  Rational lo;
  Rational hi;
};

/// A finite union of disjoint half-open intervals, kept sorted and merged
/// (abutting pieces are coalesced). Half-open intervals make "share an
/// endpoint" non-overlapping by construction; the conflict test between
/// adjacent links is intersection of positive measure.
class IntervalSet {
public:
  IntervalSet() = default;

  /// Single interval [lo, hi); lo < hi required.
  static IntervalSet single(const Rational& lo, const Rational& hi);

  /// Builds from a list of intervals; validates lo < hi per piece, sorts,
  /// and merges abutting pieces. Throws StructuralError on overlap.
  static IntervalSet from_intervals(std::vector<Interval> pieces);

  const std::vector<Interval>& intervals() const { return pieces_; }
  bool empty() const { return pieces_.empty(); }

  Rational measure() const;

  /// Smallest left endpoint / largest right endpoint; set must be nonempty.
  const Rational& lower() const { return pieces_.front().lo; }
  const Rational& upper() const { return pieces_.back().hi; }

  /// Length of the overlap between the two sets.
  static Rational intersection_measure(const IntervalSet& a, const IntervalSet& b);

  /// Merged union (inputs may overlap).
  static IntervalSet set_union(const IntervalSet& a, const IntervalSet& b);

  /// Gaps of this set inside [lo, hi).
  IntervalSet complement_within(const Rational& lo, const Rational& hi) const;

  /// Leftmost portion of total length `amount` (splitting the last piece).
  /// Requires amount <= measure().
  IntervalSet take_prefix(const Rational& amount) const;

  friend bool operator==(const IntervalSet& a, const IntervalSet& b);

private:
  std::vector<Interval> pieces_;
};

}  // namespace linksched

#endif  // LINKSCHED_INTERVAL_SET_HPP
