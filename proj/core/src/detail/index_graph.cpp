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

#include "detail/index_graph.hpp"

#include <algorithm>

namespace linksched::detail {

namespace {

std::vector<std::size_t> degeneracy_order(const IndexGraph& g, const Bits& mask) {
  std::vector<std::size_t> order;
  order.reserve(mask.count());
  Bits remaining = mask;
  while (remaining.any()) {
    std::size_t best = Bits::npos;
    std::size_t best_degree = 0;
    remaining.for_each([&](std::size_t v) {
      const std::size_t d = (g.adj[v] & remaining).count();
      if (best == Bits::npos || d < best_degree) {
        best = v;
        best_degree = d;
      }
    });
    order.push_back(best);
    remaining.reset(best);
  }
  return order;
}

struct CliqueSearch {
  const IndexGraph& g;
  std::size_t cap;
  std::size_t emitted = 0;
  const std::function<void(const Bits&)>& emit;

  bool expand(Bits& r, Bits p, Bits x) {
    if (p.none() && x.none()) {
      if (emitted == cap) return false;
      ++emitted;
      emit(r);
      return true;
    }
    // Pivot on the vertex of P ∪ X covering most of P.
    std::size_t pivot = Bits::npos;
    std::size_t best_cover = 0;
    (p | x).for_each([&](std::size_t u) {
      const std::size_t cover = (p & g.adj[u]).count();
      if (pivot == Bits::npos || cover > best_cover) {
        pivot = u;
        best_cover = cover;
      }
    });
    const Bits candidates = p.and_not(g.adj[pivot]);
    bool ok = true;
    candidates.for_each([&](std::size_t v) {
      if (!ok) return;
      r.set(v);
      ok = expand(r, p & g.adj[v], x & g.adj[v]);
      r.reset(v);
      p.reset(v);
      x.set(v);
    });
    return ok;
  }
};

struct IndependentSearch {
  const IndexGraph& g;
  Bits best;
  std::size_t best_size = 0;

  void search(const Bits& candidates, Bits& chosen, std::size_t chosen_size) {
    if (chosen_size + candidates.count() <= best_size) return;
    if (candidates.none()) {
      best = chosen;
      best_size = chosen_size;
      return;
    }
    // Branch on the candidate with the most candidate-neighbors.
    std::size_t v = Bits::npos;
    std::size_t best_degree = 0;
    candidates.for_each([&](std::size_t u) {
      const std::size_t d = (g.adj[u] & candidates).count();
      if (v == Bits::npos || d > best_degree) {
        v = u;
        best_degree = d;
      }
    });

    Bits include = candidates.and_not(g.adj[v]);
    include.reset(v);
    chosen.set(v);
    search(include, chosen, chosen_size + 1);
    chosen.reset(v);

    Bits exclude = candidates;
    exclude.reset(v);
    search(exclude, chosen, chosen_size);
  }
};

}  // namespace

bool enumerate_maximal_cliques(const IndexGraph& g, const Bits& mask,
                               std::size_t max_sets,
                               const std::function<void(const Bits&)>& emit) {
  if (mask.none()) return true;
  CliqueSearch search{g, max_sets, 0, emit};
  Bits p = mask;
  Bits x(g.n);
  Bits r(g.n);
  for (std::size_t v : degeneracy_order(g, mask)) {
    r.set(v);
    if (!search.expand(r, p & g.adj[v], x & g.adj[v])) return false;
    r.reset(v);
    p.reset(v);
    x.set(v);
  }
  return true;
}

Bits maximum_independent_set(const IndexGraph& g, const Bits& mask) {
  IndependentSearch search{g, Bits(g.n), 0};
  Bits chosen(g.n);
  search.search(mask, chosen, 0);
  return search.best;
}

}  // namespace linksched::detail
