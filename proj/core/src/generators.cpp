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

#include "linksched/generators.hpp"

#include "linksched/errors.hpp"
#include "linksched/prng.hpp"

namespace linksched::generators {

namespace {

std::vector<std::string> numbered(const std::string& prefix, std::size_t n) {
  std::vector<std::string> ids;
  ids.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ids.push_back(prefix + std::to_string(i));
  return ids;
}

}  // namespace

ConflictGraph star(std::size_t d) {
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 1; i <= d; ++i) edges.emplace_back("v0", "v" + std::to_string(i));
  return ConflictGraph(numbered("v", d + 1), edges);
}

ConflictGraph cycle(std::size_t n) {
  if (n < 3) throw StructuralError("cycle needs at least 3 vertices");
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.emplace_back("v" + std::to_string(i), "v" + std::to_string((i + 1) % n));
  }
  return ConflictGraph(numbered("v", n), edges);
}

ConflictGraph complete(std::size_t n) {
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      edges.emplace_back("v" + std::to_string(i), "v" + std::to_string(j));
    }
  }
  return ConflictGraph(numbered("v", n), edges);
}

ConflictGraph k4_minus_e() {
  return ConflictGraph({"a", "b", "c", "d"},
                       {{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
}

ConflictGraph theorem3_family(const std::vector<std::size_t>& clique_sizes) {
  std::vector<std::string> ids = {"x"};
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < clique_sizes.size(); ++i) {
    if (clique_sizes[i] == 0) throw StructuralError("clique sizes must be positive");
    std::vector<std::string> members;
    for (std::size_t j = 0; j < clique_sizes[i]; ++j) {
      members.push_back("k" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
    }
    for (std::size_t a = 0; a < members.size(); ++a) {
      edges.emplace_back("x", members[a]);
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        edges.emplace_back(members[a], members[b]);
      }
    }
    ids.insert(ids.end(), members.begin(), members.end());
  }
  return ConflictGraph(std::move(ids), edges);
}

ConflictGraph line_graph(const NetworkGraph& n) {
  std::vector<std::string> ids;
  ids.reserve(n.link_count());
  for (std::size_t k = 0; k < n.link_count(); ++k) ids.push_back(n.link_id(k));

  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t a = 0; a < n.link_count(); ++a) {
    const auto& la = n.links()[a];
    for (std::size_t b = a + 1; b < n.link_count(); ++b) {
      const auto& lb = n.links()[b];
      if (la.u == lb.u || la.u == lb.v || la.v == lb.u || la.v == lb.v) {
        edges.emplace_back(ids[a], ids[b]);
      }
    }
  }
  return ConflictGraph(std::move(ids), edges);
}

ConflictGraph unit_disk(const std::vector<Point>& points, const Rational& radius) {
  if (radius.sign() <= 0) throw StructuralError("disk radius must be positive");
  const Rational diameter = radius * Rational(2);
  const Rational threshold = diameter * diameter;

  std::vector<std::string> ids;
  ids.reserve(points.size());
  for (const auto& p : points) ids.push_back(p.id);

  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const Rational dx = points[i].x - points[j].x;
      const Rational dy = points[i].y - points[j].y;
      if (dx * dx + dy * dy <= threshold) edges.emplace_back(ids[i], ids[j]);
    }
  }
  return ConflictGraph(std::move(ids), edges);
}

ConflictGraph random_graph(std::size_t n, const Rational& edge_probability,
                           std::uint64_t seed) {
  if (edge_probability.is_negative() || edge_probability > Rational(1)) {
    throw StructuralError("edge probability must lie in [0, 1]");
  }
  SplitMix64 rng(seed);
  const Rational scale(9007199254740992L);  // 2^53
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rational draw(static_cast<long>(rng.next() >> 11));
      if (draw / scale < edge_probability) {
        edges.emplace_back("v" + std::to_string(i), "v" + std::to_string(j));
      }
    }
  }
  return ConflictGraph(numbered("v", n), edges);
}

std::vector<Point> random_points(std::size_t n, const Rational& box, std::uint64_t seed) {
  if (box.sign() <= 0) throw StructuralError("box size must be positive");
  SplitMix64 rng(seed);
  const long grid = 1L << 20;
  std::vector<Point> points;
  points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Rational x =
        Rational(static_cast<long>(rng.below(grid + 1)), grid) * box;
    const Rational y =
        Rational(static_cast<long>(rng.below(grid + 1)), grid) * box;
    points.push_back({"p" + std::to_string(i), x, y});
  }
  return points;
}

}  // namespace linksched::generators
