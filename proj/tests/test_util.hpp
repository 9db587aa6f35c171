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

// Shared helpers for the test suites: terse builders plus brute-force
// reference implementations that stay independent of the library code
// they are used to check.

#ifndef LINKSCHED_TESTS_TEST_UTIL_HPP
#define LINKSCHED_TESTS_TEST_UTIL_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "linksched/conflict_graph.hpp"
#include "linksched/demand.hpp"
#include "linksched/network_graph.hpp"
#include "linksched/prng.hpp"
#include "linksched/rational.hpp"

namespace linksched::testutil {

inline Rational R(const std::string& text) { return Rational::parse(text); }

inline ConflictGraph make_graph(
    std::vector<std::string> vertices,
    std::vector<std::pair<std::string, std::string>> edges) {
  return ConflictGraph(std::move(vertices), edges);
}

inline DemandVector demands(
    const std::vector<std::pair<std::string, std::string>>& entries) {
  DemandVector tau;
  for (const auto& [id, value] : entries) tau.set(id, R(value));
  return tau;
}

inline ConflictGraph path3() {
  // a - b - c with b in the middle.
  return make_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
}

inline ConflictGraph petersen() {
  std::vector<std::string> ids;
  for (int i = 0; i < 10; ++i) ids.push_back("u" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back("u" + std::to_string(i), "u" + std::to_string((i + 1) % 5));
    edges.emplace_back("u" + std::to_string(i), "u" + std::to_string(i + 5));
    edges.emplace_back("u" + std::to_string(i + 5), "u" + std::to_string(5 + (i + 2) % 5));
  }
  return make_graph(std::move(ids), std::move(edges));
}

// ------------------------------------------------------- brute force ----

/// Maximum independent set size by enumerating all vertex subsets.
inline std::size_t brute_alpha(const ConflictGraph& g) {
  const std::size_t n = g.size();
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    bool independent = true;
    for (std::size_t i = 0; i < n && independent; ++i) {
      if (!(mask >> i & 1)) continue;
      for (std::size_t j = i + 1; j < n && independent; ++j) {
        if ((mask >> j & 1) && g.adjacent(i, j)) independent = false;
      }
    }
    if (independent) {
      best = std::max<std::size_t>(best, __builtin_popcountll(mask));
    }
  }
  return best;
}

/// All inclusion-maximal cliques by subset enumeration, sorted.
inline std::vector<std::vector<std::string>> brute_maximal_cliques(
    const ConflictGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::uint64_t> clique_masks;
  for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
    bool clique = true;
    for (std::size_t i = 0; i < n && clique; ++i) {
      if (!(mask >> i & 1)) continue;
      for (std::size_t j = i + 1; j < n && clique; ++j) {
        if ((mask >> j & 1) && !g.adjacent(i, j)) clique = false;
      }
    }
    if (clique) clique_masks.push_back(mask);
  }
  std::vector<std::vector<std::string>> result;
  for (std::uint64_t mask : clique_masks) {
    const bool maximal = std::none_of(
        clique_masks.begin(), clique_masks.end(), [mask](std::uint64_t other) {
          return other != mask && (other & mask) == mask;
        });
    if (!maximal) continue;
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) ids.push_back(g.id_of(i));
    }
    std::sort(ids.begin(), ids.end());
    result.push_back(std::move(ids));
  }
  std::sort(result.begin(), result.end());
  return result;
}

/// Every set slice covers at most alpha vertices, so any covering schedule
/// of total weight W needs duration at least W / alpha. Together with a
/// validated schedule of matching length this pins chi_f without touching
/// the LP code path.
inline Rational weight_over_alpha_bound(const ConflictGraph& g, const DemandVector& x) {
  Rational total;
  for (const auto& [id, value] : x.entries()) total += value;
  const std::size_t a = brute_alpha(g);
  return a == 0 ? Rational(0) : total / Rational(static_cast<long>(a));
}

// ---------------------------------------------------- random instances --

/// Random network on n nodes; each pair is linked with probability
/// num/den, multiplicities in 1..max_mult.
inline NetworkGraph random_network(std::size_t n, std::uint64_t num, std::uint64_t den,
                                   SplitMix64& rng, unsigned long max_mult = 1) {
  std::vector<std::string> nodes;
  for (std::size_t i = 0; i < n; ++i) nodes.push_back("n" + std::to_string(i));
  std::vector<NetworkLink> links;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng.below(den) < num) {
        links.push_back({nodes[i], nodes[j], 1 + rng.below(max_mult)});
      }
    }
  }
  return NetworkGraph(std::move(nodes), std::move(links));
}

/// Random demands with entries k/16, k in 0..16.
inline DemandVector random_demands(const ConflictGraph& g, SplitMix64& rng) {
  DemandVector tau;
  for (const auto& id : g.vertices()) {
    const long k = static_cast<long>(rng.below(17));
    if (k > 0) tau.set(id, Rational(k, 16));
  }
  return tau;
}

/// Scales tau so the given max-lhs evaluator comes out exactly at T,
/// producing a tight passing instance; zero vectors pass unchanged.
template <typename MaxLhsFn>
DemandVector scaled_to_pass(const DemandVector& tau, const Rational& T,
                            const MaxLhsFn& max_lhs) {
  const Rational lhs = max_lhs(tau);
  if (lhs.sign() <= 0) return tau;
  DemandVector scaled;
  for (const auto& [id, value] : tau.entries()) scaled.set(id, value * T / lhs);
  return scaled;
}

}  // namespace linksched::testutil

#endif  // LINKSCHED_TESTS_TEST_UTIL_HPP
