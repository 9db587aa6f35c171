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

#include <algorithm>

#include "linksched/errors.hpp"

namespace linksched {

IntervalSet IntervalSet::single(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw StructuralError("empty or reversed interval");
  IntervalSet s;
  s.pieces_.push_back({lo, hi});
  return s;
}

IntervalSet IntervalSet::from_intervals(std::vector<Interval> pieces) {
  for (const auto& p : pieces) {
    if (!(p.lo < p.hi)) throw StructuralError("empty or reversed interval");
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  IntervalSet s;
  for (auto& p : pieces) {
    if (!s.pieces_.empty()) {
      Interval& last = s.pieces_.back();
      if (p.lo < last.hi) throw StructuralError("overlapping intervals in interval set");
      if (p.lo == last.hi) {
        last.hi = p.hi;
        continue;
      }
    }
    s.pieces_.push_back(std::move(p));
  }
  return s;
}

Rational IntervalSet::measure() const {
  Rational total;
  for (const auto& p : pieces_) total += p.hi - p.lo;
  return total;
}

Rational IntervalSet::intersection_measure(const IntervalSet& a, const IntervalSet& b) {
  Rational total;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.pieces_.size() && j < b.pieces_.size()) {
    const Interval& x = a.pieces_[i];
    const Interval& y = b.pieces_[j];
    const Rational lo = max(x.lo, y.lo);
    const Rational hi = min(x.hi, y.hi);
    if (lo < hi) total += hi - lo;
    if (x.hi <= y.hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return total;
}

IntervalSet IntervalSet::set_union(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> merged;
  merged.reserve(a.pieces_.size() + b.pieces_.size());
  std::merge(a.pieces_.begin(), a.pieces_.end(), b.pieces_.begin(), b.pieces_.end(),
             std::back_inserter(merged),
             [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
  IntervalSet s;
  for (auto& p : merged) {
    if (!s.pieces_.empty() && p.lo <= s.pieces_.back().hi) {
      if (s.pieces_.back().hi < p.hi) s.pieces_.back().hi = p.hi;
    } else {
      s.pieces_.push_back(std::move(p));
    }
  }
  return s;
}

IntervalSet IntervalSet::complement_within(const Rational& lo, const Rational& hi) const {
  IntervalSet gaps;
  Rational cursor = lo;
  for (const auto& p : pieces_) {
    if (p.hi <= lo) continue;
    if (p.lo >= hi) break;
    const Rational start = max(p.lo, lo);
    if (cursor < start) gaps.pieces_.push_back({cursor, start});
    cursor = max(cursor, min(p.hi, hi));
  }
  if (cursor < hi) gaps.pieces_.push_back({cursor, hi});
  return gaps;
}

IntervalSet IntervalSet::take_prefix(const Rational& amount) const {
  IntervalSet out;
  if (amount.sign() <= 0) return out;
  Rational remaining = amount;
  for (const auto& p : pieces_) {
    const Rational len = p.hi - p.lo;
    if (len < remaining) {
      out.pieces_.push_back(p);
      remaining -= len;
    } else {
      out.pieces_.push_back({p.lo, p.lo + remaining});
      return out;
    }
  }
  throw StructuralError("interval set too small for requested prefix");
}

bool operator==(const IntervalSet& a, const IntervalSet& b) {
  if (a.pieces_.size() != b.pieces_.size()) return false;
  for (std::size_t i = 0; i < a.pieces_.size(); ++i) {
    if (a.pieces_[i].lo != b.pieces_[i].lo || a.pieces_[i].hi != b.pieces_[i].hi) {
      return false;
    }
  }
  return true;
}

}  // namespace linksched
