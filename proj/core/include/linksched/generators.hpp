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

#ifndef LINKSCHED_GENERATORS_HPP
#define LINKSCHED_GENERATORS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "linksched/conflict_graph.hpp"
#include "linksched/network_graph.hpp"
#include "linksched/rational.hpp"

namespace linksched::generators {

// Deterministic constructions of the graph families the library reasons
// about. All randomness is SplitMix64-seeded, so fixed seeds reproduce
// byte-identical graphs everywhere.

/// Star K_{1,d}: center "v0" adjacent to leaves "v1".."vd". d = 0 gives a
/// single vertex.
ConflictGraph star(std::size_t d);

/// Cycle on n >= 3 vertices "v0".."v{n-1}".
ConflictGraph cycle(std::size_t n);

/// Complete graph on n vertices (n = 0 gives the empty graph).
ConflictGraph complete(std::size_t n);

/// K4 minus one edge: vertices a, b, c, d with the edge c-d removed.
ConflictGraph k4_minus_e();

/// Center "x" adjacent to every other vertex; the rest split into disjoint
/// cliques of the given sizes ("k1_1", "k1_2", ..., "k2_1", ...) with no
/// cross edges. Sizes must be positive.
ConflictGraph theorem3_family(const std::vector<std::size_t>& clique_sizes);

/// Conflict graph under primary interference: one vertex per network link,
/// adjacent iff the links share an endpoint. Vertex ids are the canonical
/// link ids; multiplicities are ignored here (weight the vertices instead).
ConflictGraph line_graph(const NetworkGraph& n);

struct Point {
  std::string id;
  Rational x;
  Rational y;
};

/// Intersection graph of equal-radius disks centered at the points:
/// adjacent iff the squared center distance is at most (2*radius)^2,
/// computed exactly. The closed threshold makes the boundary case adjacent.
ConflictGraph unit_disk(const std::vector<Point>& points, const Rational& radius);

/// G(n, p) with vertices "v0".."v{n-1}"; each edge present iff the next
/// 53-bit draw, as a rational over 2^53, is below edge_probability.
ConflictGraph random_graph(std::size_t n, const Rational& edge_probability,
                           std::uint64_t seed);

/// n points "p0".."p{n-1}" with coordinates on a 2^-20 grid inside
/// [0, box]^2.
std::vector<Point> random_points(std::size_t n, const Rational& box, std::uint64_t seed);

}  // namespace linksched::generators

#endif  // LINKSCHED_GENERATORS_HPP
