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

// Index-based bitset graph used internally by the enumeration routines.
// Not installed; everything here is an implementation detail.

#ifndef LINKSCHED_DETAIL_INDEX_GRAPH_HPP
#define LINKSCHED_DETAIL_INDEX_GRAPH_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "linksched/conflict_graph.hpp"

namespace linksched::detail {

/// Fixed-size bitset over vertex indices.
class Bits {
public:
  Bits() = default;
  explicit Bits(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  static Bits all(std::size_t n) {
    Bits b(n);
    for (std::size_t i = 0; i < b.words_.size(); ++i) b.words_[i] = ~0ull;
    b.trim();
    return b;
  }

  std::size_t universe() const { return n_; }

  void set(std::size_t i) { words_[i >> 6] |= 1ull << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(1ull << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  bool any() const {
    for (auto w : words_) {
      if (w) return true;
    }
    return false;
  }
  bool none() const { return !any(); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t first() const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
    }
    return npos;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        const std::size_t bit = static_cast<std::size_t>(std::countr_zero(w));
        f(i * 64 + bit);
        w &= w - 1;
      }
    }
  }

  Bits operator&(const Bits& o) const {
    Bits r(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
    return r;
  }
  Bits operator|(const Bits& o) const {
    Bits r(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | o.words_[i];
    return r;
  }
  Bits and_not(const Bits& o) const {
    Bits r(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & ~o.words_[i];
    return r;
  }
  bool intersects(const Bits& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & o.words_[i]) return true;
    }
    return false;
  }

  std::vector<std::size_t> to_indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&out](std::size_t i) { out.push_back(i); });
    return out;
  }

private:
  void trim() {
    if (n_ % 64 != 0 && !words_.empty()) {
      words_.back() &= (1ull << (n_ % 64)) - 1;
    }
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Adjacency rows of a conflict graph (or of its complement) as bitsets.
struct IndexGraph {
  std::size_t n = 0;
  std::vector<Bits> adj;

  static IndexGraph from(const ConflictGraph& g) {
    IndexGraph ig;
    ig.n = g.size();
    ig.adj.assign(ig.n, Bits(ig.n));
    for (std::size_t i = 0; i < ig.n; ++i) {
      for (std::size_t j : g.neighbors(i)) ig.adj[i].set(j);
    }
    return ig;
  }

  static IndexGraph complement_of(const ConflictGraph& g) {
    IndexGraph ig;
    ig.n = g.size();
    ig.adj.assign(ig.n, Bits(ig.n));
    for (std::size_t i = 0; i < ig.n; ++i) {
      ig.adj[i] = Bits::all(ig.n);
      ig.adj[i].reset(i);
      for (std::size_t j : g.neighbors(i)) ig.adj[i].reset(j);
    }
    return ig;
  }
};

/// Enumerates the maximal cliques of `g` restricted to `mask`, invoking
/// `emit` once per clique. Bron–Kerbosch with degeneracy-ordered outer
/// loop and greedy pivoting. Returns false once `max_sets` would be
/// exceeded (enumeration stops).
bool enumerate_maximal_cliques(const IndexGraph& g, const Bits& mask,
                               std::size_t max_sets,
                               const std::function<void(const Bits&)>& emit);

/// A maximum independent set of `g` restricted to `mask`, by branch and
/// bound. Deterministic.
Bits maximum_independent_set(const IndexGraph& g, const Bits& mask);

}  // namespace linksched::detail

#endif  // LINKSCHED_DETAIL_INDEX_GRAPH_HPP
