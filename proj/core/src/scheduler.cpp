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

#include "linksched/scheduler.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "linksched/admission.hpp"
#include "linksched/errors.hpp"

namespace linksched::scheduler {

namespace {

// Raised when a vertex does not fit; the public schedulers translate it
// into an honest refusal (or a loud internal error if the condition holds,
// since then the constructive argument itself would be broken).
struct PlacementStuck {
  std::string vertex;
};

/// Verification is lazy: the greedy run itself is attempted regardless of
/// the condition report (it can succeed on failing demands), and only a
/// placement failure triggers the diagnosis.
template <typename Body, typename CheckFn>
Schedule run_diagnosed(const Horizon& T, const Body& body, const CheckFn& check) {
  try {
    Schedule s(T);
    body(s);
    return s;
  } catch (const PlacementStuck& stuck) {
    const ConditionReport report = check();
    if (!report.overall) {
      const auto failing = report.failing();
      throw ConditionFailedError("condition '" + report.condition_name +
                                     "' fails at '" + failing.front() +
                                     "'; refusing to schedule",
                                 failing.front());
    }
    throw Error("internal error: no room for '" + stuck.vertex + "' although '" +
                report.condition_name + "' passes");
  }
}

/// Leftmost gaps of [0, T) avoiding the intervals already held by the
/// neighbors of v.
void greedy_assign(Schedule& s, const ConflictGraph& g, std::size_t v,
                   const Rational& amount, const Horizon& T) {
  if (amount.is_zero()) return;
  IntervalSet forbidden;
  for (std::size_t w : g.neighbors(v)) {
    forbidden = IntervalSet::set_union(forbidden, s.of(g.id_of(w)));
  }
  const IntervalSet gaps = forbidden.complement_within(Rational(0), T.T);
  if (gaps.measure() < amount) throw PlacementStuck{g.id_of(v)};
  s.assignment[g.id_of(v)] = gaps.take_prefix(amount);
}

/// Expansion order: starts at root and repeatedly appends the
/// lexicographically smallest unvisited vertex (outside `excluded`)
/// adjacent to the vertices so far. Covers a connected subgraph.
std::vector<std::size_t> expansion_order(const ConflictGraph& g, std::size_t root,
                                         const std::vector<bool>& excluded) {
  std::vector<bool> placed(g.size(), false);
  std::vector<std::size_t> order = {root};
  placed[root] = true;

  std::size_t wanted = 0;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (!excluded[v]) ++wanted;
  }
  while (order.size() < wanted) {
    std::size_t best = g.size();
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (placed[v] || excluded[v]) continue;
      bool touches = false;
      for (std::size_t w : g.neighbors(v)) {
        if (placed[w]) {
          touches = true;
          break;
        }
      }
      if (touches && (best == g.size() || g.id_of(v) < g.id_of(best))) best = v;
    }
    if (best == g.size()) {
      throw Error("internal error: expansion order stuck (graph not connected)");
    }
    placed[best] = true;
    order.push_back(best);
  }
  return order;
}

/// Schedules every vertex of the expansion order except the root, in
/// reverse order, greedily. The root is left to the caller.
void reverse_schedule(Schedule& s, const ConflictGraph& g, const DemandVector& tau,
                      const Horizon& T, const std::vector<std::size_t>& order) {
  for (std::size_t i = order.size(); i-- > 1;) {
    greedy_assign(s, g, order[i], tau.get(g.id_of(order[i])), T);
  }
}

bool connected_without(const ConflictGraph& g, const std::vector<bool>& removed) {
  std::size_t start = g.size();
  std::size_t wanted = 0;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (!removed[v]) {
      if (start == g.size()) start = v;
      ++wanted;
    }
  }
  if (wanted <= 1) return true;
  std::vector<bool> seen(g.size(), false);
  std::vector<std::size_t> stack = {start};
  seen[start] = true;
  std::size_t reached = 0;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    ++reached;
    for (std::size_t w : g.neighbors(v)) {
      if (!removed[w] && !seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return reached == wanted;
}

/// Reorders the sub-schedule of `members` so that all time where `target`
/// is active comes first, compacted to start at 0. Slot-wise reordering
/// keeps every instantaneous active set intact, so validity within the
/// member set is preserved and the target ends up owning [0, tau(target)).
void permute_to_front(Schedule& s, const ConflictGraph& g,
                      const std::vector<std::size_t>& members, std::size_t target) {
  std::vector<Rational> boundaries;
  for (std::size_t v : members) {
    const IntervalSet held = s.of(g.id_of(v));
    for (const auto& piece : held.intervals()) {
      boundaries.push_back(piece.lo);
      boundaries.push_back(piece.hi);
    }
  }
  if (boundaries.empty()) return;
  std::sort(boundaries.begin(), boundaries.end());
  boundaries.erase(std::unique(boundaries.begin(), boundaries.end()), boundaries.end());

  struct Slice {
    Rational lo, hi;
    std::vector<std::size_t> active;
  };
  std::vector<Slice> slices;
  for (std::size_t i = 0; i + 1 < boundaries.size(); ++i) {
    Slice slice{boundaries[i], boundaries[i + 1], {}};
    const IntervalSet window = IntervalSet::single(slice.lo, slice.hi);
    for (std::size_t v : members) {
      if (IntervalSet::intersection_measure(window, s.of(g.id_of(v))).sign() > 0) {
        slice.active.push_back(v);
      }
    }
    if (!slice.active.empty()) slices.push_back(std::move(slice));
  }

  std::stable_partition(slices.begin(), slices.end(), [&](const Slice& slice) {
    return std::find(slice.active.begin(), slice.active.end(), target) !=
           slice.active.end();
  });

  std::map<std::size_t, std::vector<Interval>> rebuilt;
  Rational cursor(0);
  for (const auto& slice : slices) {
    const Rational next = cursor + (slice.hi - slice.lo);
    for (std::size_t v : slice.active) rebuilt[v].push_back({cursor, next});
    cursor = next;
  }
  for (std::size_t v : members) {
    auto it = rebuilt.find(v);
    if (it == rebuilt.end()) {
      s.assignment.erase(g.id_of(v));
    } else {
      s.assignment[g.id_of(v)] = IntervalSet::from_intervals(std::move(it->second));
    }
  }
}

ConflictGraph induced_subgraph(const ConflictGraph& g,
                               const std::vector<std::size_t>& keep) {
  std::vector<std::size_t> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::string> ids;
  ids.reserve(sorted.size());
  for (std::size_t v : sorted) ids.push_back(g.id_of(v));
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t a = 0; a < sorted.size(); ++a) {
    for (std::size_t b = a + 1; b < sorted.size(); ++b) {
      if (g.adjacent(sorted[a], sorted[b])) {
        edges.emplace_back(g.id_of(sorted[a]), g.id_of(sorted[b]));
      }
    }
  }
  return ConflictGraph(std::move(ids), edges);
}

std::size_t smallest_by_id(const ConflictGraph& g, const std::vector<std::size_t>& vs) {
  std::size_t best = vs.front();
  for (std::size_t v : vs) {
    if (g.id_of(v) < g.id_of(best)) best = v;
  }
  return best;
}

/// Designated-link mechanism with optional pre-assigned vertices: schedules
/// everything reachable from `root` (excluding `excluded`) in reverse
/// expansion order, then the root itself last.
void designated_schedule(Schedule& s, const ConflictGraph& g, const DemandVector& tau,
                         const Horizon& T, std::size_t root,
                         const std::vector<bool>& excluded) {
  const auto order = expansion_order(g, root, excluded);
  reverse_schedule(s, g, tau, T, order);
  greedy_assign(s, g, root, tau.get(g.id_of(root)), T);
}

/// The even-cycle schedule: odd positions start at 0, even positions end at T.
void schedule_even_cycle(Schedule& s, const ConflictGraph& g, const DemandVector& tau,
                         const Horizon& T, const std::vector<std::size_t>& component) {
  const std::size_t start = smallest_by_id(g, component);
  std::vector<std::size_t> ring = {start};
  std::vector<bool> used(g.size(), false);
  used[start] = true;
  // Walk toward the smaller-id neighbor first for determinism.
  {
    const auto& nbrs = g.neighbors(start);
    std::size_t next = nbrs[0];
    for (std::size_t w : nbrs) {
      if (g.id_of(w) < g.id_of(next)) next = w;
    }
    ring.push_back(next);
    used[next] = true;
  }
  while (ring.size() < component.size()) {
    const std::size_t tail = ring.back();
    std::size_t next = g.size();
    for (std::size_t w : g.neighbors(tail)) {
      if (!used[w]) next = w;
    }
    if (next == g.size()) throw Error("internal error: broken cycle traversal");
    used[next] = true;
    ring.push_back(next);
  }
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const Rational t = tau.get(g.id_of(ring[i]));
    if (t.is_zero()) continue;
    s.assignment[g.id_of(ring[i])] = (i % 2 == 0)
                                         ? IntervalSet::single(Rational(0), t)
                                         : IntervalSet::single(T.T - t, T.T);
  }
}

void schedule_row2_component(Schedule& s, const ConflictGraph& g,
                             const DemandVector& tau, const Horizon& T);

/// Case r = 1: schedule everything but the cut vertex with the designated
/// mechanism, make two of its neighbors in different split components start
/// at time 0, then place the cut vertex in the remaining gaps.
void schedule_row2_cut_vertex(Schedule& s, const ConflictGraph& g,
                              const DemandVector& tau, const Horizon& T,
                              std::size_t cut) {
  std::vector<bool> none(g.size(), false);
  const auto order = expansion_order(g, cut, none);
  reverse_schedule(s, g, tau, T, order);

  std::vector<std::size_t> rest;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (v != cut) rest.push_back(v);
  }
  const auto split = components_of_subset(g, rest);
  for (std::size_t c = 0; c < 2; ++c) {
    std::vector<std::size_t> candidates;
    for (std::size_t v : split[c]) {
      if (g.adjacent(v, cut)) candidates.push_back(v);
    }
    permute_to_front(s, g, split[c], smallest_by_id(g, candidates));
  }
  greedy_assign(s, g, cut, tau.get(g.id_of(cut)), T);
}

/// Shared tail of the r >= 3 and the r = 2, max degree >= 3 cases: two
/// nonadjacent neighbors of the pivot are pinned to start at 0 so their
/// intervals nest, the rest is scheduled with the pivot designated, and the
/// pivot goes last.
void schedule_with_pinned_pair(Schedule& s, const ConflictGraph& g,
                               const DemandVector& tau, const Horizon& T,
                               std::size_t pivot, std::size_t pin_a, std::size_t pin_b) {
  for (std::size_t pin : {pin_a, pin_b}) {
    const Rational t = tau.get(g.id_of(pin));
    if (!t.is_zero()) {
      s.assignment[g.id_of(pin)] = IntervalSet::single(Rational(0), t);
    }
  }
  std::vector<bool> excluded(g.size(), false);
  excluded[pin_a] = excluded[pin_b] = true;
  designated_schedule(s, g, tau, T, pivot, excluded);
}

void schedule_row2_component(Schedule& s, const ConflictGraph& g,
                             const DemandVector& tau, const Horizon& T) {
  const std::size_t n = g.size();
  if (n == 1) {
    greedy_assign(s, g, 0, tau.get(g.id_of(0)), T);
    return;
  }

  // Vertex connectivity class: 1, 2, or >= 3. Only the class matters.
  std::vector<bool> removed(n, false);
  std::size_t cut_vertex = n;
  for (std::size_t v = 0; v < n && cut_vertex == n; ++v) {
    removed.assign(n, false);
    removed[v] = true;
    if (!connected_without(g, removed)) cut_vertex = v;
  }
  if (cut_vertex != n) {
    schedule_row2_cut_vertex(s, g, tau, T, cut_vertex);
    return;
  }

  bool has_two_cut = false;
  for (std::size_t a = 0; a < n && !has_two_cut; ++a) {
    for (std::size_t b = a + 1; b < n && !has_two_cut; ++b) {
      removed.assign(n, false);
      removed[a] = removed[b] = true;
      if (!connected_without(g, removed)) has_two_cut = true;
    }
  }

  std::size_t degree_max = 0;
  for (std::size_t v = 0; v < n; ++v) degree_max = std::max(degree_max, g.degree(v));

  if (has_two_cut && degree_max <= 2) {
    // 2-connected with all degrees <= 2: a cycle, and even by eligibility.
    std::vector<std::size_t> all(n);
    for (std::size_t v = 0; v < n; ++v) all[v] = v;
    schedule_even_cycle(s, g, tau, T, all);
    return;
  }

  if (!has_two_cut) {
    // r >= 3: any vertex with two nonadjacent neighbors works, and the
    // graph stays connected after removing that pair.
    for (std::size_t v = 0; v < n; ++v) {
      const auto& nbrs = g.neighbors(v);
      for (std::size_t x = 0; x < nbrs.size(); ++x) {
        for (std::size_t y = x + 1; y < nbrs.size(); ++y) {
          if (!g.adjacent(nbrs[x], nbrs[y])) {
            schedule_with_pinned_pair(s, g, tau, T, v, nbrs[x], nbrs[y]);
            return;
          }
        }
      }
    }
    throw Error("internal error: no open pair in a non-complete graph");
  }

  // r = 2 and max degree >= 3: find l1 that is a cut vertex of g - l2, and
  // two of its neighbors in different parts whose removal keeps the graph
  // connected. Failure to find such a configuration would contradict the
  // case analysis, so it is reported loudly.
  for (std::size_t l2 = 0; l2 < n; ++l2) {
    for (std::size_t l1 = 0; l1 < n; ++l1) {
      if (l1 == l2) continue;
      removed.assign(n, false);
      removed[l1] = removed[l2] = true;
      if (connected_without(g, removed)) continue;

      std::vector<std::size_t> rest;
      for (std::size_t v = 0; v < n; ++v) {
        if (v != l1 && v != l2) rest.push_back(v);
      }
      const auto split = components_of_subset(g, rest);
      for (std::size_t ca = 0; ca < split.size(); ++ca) {
        for (std::size_t cb = ca + 1; cb < split.size(); ++cb) {
          for (std::size_t la : split[ca]) {
            if (!g.adjacent(la, l1)) continue;
            for (std::size_t lb : split[cb]) {
              if (!g.adjacent(lb, l1)) continue;
              removed.assign(n, false);
              removed[la] = removed[lb] = true;
              if (!connected_without(g, removed)) continue;
              schedule_with_pinned_pair(s, g, tau, T, l1, la, lb);
              return;
            }
          }
        }
      }
    }
  }
  throw Error(
      "internal error: case analysis found no schedulable configuration; "
      "this instance contradicts the construction");
}

}  // namespace

Schedule schedule_row(const ConflictGraph& g, const DemandVector& tau, const Horizon& T,
                      const std::vector<std::string>& order) {
  tau.validate_against(g);
  std::vector<std::size_t> sequence;
  if (order.empty()) {
    sequence.resize(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) sequence[v] = v;
  } else {
    std::vector<bool> seen(g.size(), false);
    for (const auto& id : order) {
      const std::size_t v = g.index_of(id);
      if (seen[v]) throw StructuralError("order repeats vertex '" + id + "'");
      seen[v] = true;
      sequence.push_back(v);
    }
    if (sequence.size() != g.size()) {
      throw StructuralError("order must list every vertex exactly once");
    }
  }

  return run_diagnosed(
      T,
      [&](Schedule& s) {
        for (std::size_t v : sequence) greedy_assign(s, g, v, tau.get(g.id_of(v)), T);
      },
      [&] { return admission::check_row(g, tau, T); });
}

Schedule schedule_degree_or_mixed(const ConflictGraph& g, const DemandVector& tau,
                                  const Horizon& T) {
  tau.validate_against(g);
  std::vector<std::size_t> sequence(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) sequence[v] = v;
  std::sort(sequence.begin(), sequence.end(), [&](std::size_t a, std::size_t b) {
    const Rational ta = tau.get(g.id_of(a));
    const Rational tb = tau.get(g.id_of(b));
    if (ta != tb) return ta < tb;
    return g.id_of(a) < g.id_of(b);
  });

  return run_diagnosed(
      T,
      [&](Schedule& s) {
        for (std::size_t v : sequence) greedy_assign(s, g, v, tau.get(g.id_of(v)), T);
      },
      [&] { return admission::check_mixed(g, tau, T); });
}

Schedule schedule_row2_designated(const ConflictGraph& g, const DemandVector& tau,
                                  const Horizon& T, const std::string& designated) {
  if (!is_connected(g)) {
    throw StructuralError("schedule_row2_designated requires a connected graph");
  }
  tau.validate_against(g);
  const std::size_t root = g.index_of(designated);

  return run_diagnosed(
      T,
      [&](Schedule& s) {
        std::vector<bool> none(g.size(), false);
        designated_schedule(s, g, tau, T, root, none);
      },
      [&] { return admission::check_row2_designated(g, tau, T, designated); });
}

Schedule schedule_row2(const ConflictGraph& g, const DemandVector& tau, const Horizon& T) {
  // Evaluating the condition up front enforces the per-component
  // eligibility (complete components and odd cycles raise NotApplicable).
  const ConditionReport report = admission::check_row2(g, tau, T);

  return run_diagnosed(
      T,
      [&](Schedule& s) {
        for (const auto& component : connected_components(g)) {
          const ConflictGraph sub = induced_subgraph(g, component);
          Schedule piece(T);
          schedule_row2_component(piece, sub, tau, T);
          for (auto& [id, intervals] : piece.assignment) {
            s.assignment[id] = std::move(intervals);
          }
        }
      },
      [&] { return report; });
}

}  // namespace linksched::scheduler
