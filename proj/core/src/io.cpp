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

#include "linksched/io.hpp"

#include <fstream>

#include <json.hpp>

#include "linksched/errors.hpp"

namespace linksched::io {

namespace {

using nlohmann::json;

json load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError(path + ": cannot open file");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw StructuralError(path + ": " + e.what());
  }
  return j;
}

void store(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw StructuralError(path + ": cannot open file for writing");
  out << j.dump(2) << "\n";
}

Rational rational_field(const json& value, const std::string& context) {
  if (value.is_string()) return Rational::parse(value.get<std::string>());
  if (value.is_number_integer()) {
    return Rational(static_cast<long>(value.get<long long>()));
  }
  if (value.is_number_float()) {
    throw StructuralError(context +
                          ": floating-point numbers are not exact; "
                          "write the value as a string");
  }
  throw StructuralError(context + ": expected a rational string");
}

const json& field(const json& j, const char* key, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) throw StructuralError(path + ": missing field '" + key + "'");
  return *it;
}

}  // namespace

ConflictGraph read_graph(const std::string& path) {
  const json j = load(path);
  if (!j.is_object()) throw StructuralError(path + ": expected a JSON object");

  const json& jv = field(j, "vertices", path);
  if (!jv.is_array()) throw StructuralError(path + ": 'vertices' must be an array");
  std::vector<std::string> vertices;
  for (const auto& v : jv) {
    if (!v.is_string()) throw StructuralError(path + ": vertex ids must be strings");
    vertices.push_back(v.get<std::string>());
  }

  std::vector<std::pair<std::string, std::string>> edges;
  const json& je = field(j, "edges", path);
  if (!je.is_array()) throw StructuralError(path + ": 'edges' must be an array");
  for (const auto& e : je) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
      throw StructuralError(path + ": each edge must be a pair of vertex ids");
    }
    edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  try {
    return ConflictGraph(std::move(vertices), edges);
  } catch (const StructuralError& e) {
    throw StructuralError(path + ": " + e.what());
  }
}

void write_graph(const ConflictGraph& g, const std::string& path) {
  json j;
  j["vertices"] = g.vertices();
  json edges = json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back(json::array({a, b}));
  j["edges"] = std::move(edges);
  store(j, path);
}

NetworkGraph read_network(const std::string& path) {
  const json j = load(path);
  if (!j.is_object()) throw StructuralError(path + ": expected a JSON object");

  const json& jn = field(j, "nodes", path);
  if (!jn.is_array()) throw StructuralError(path + ": 'nodes' must be an array");
  std::vector<std::string> nodes;
  for (const auto& v : jn) {
    if (!v.is_string()) throw StructuralError(path + ": node ids must be strings");
    nodes.push_back(v.get<std::string>());
  }

  std::vector<NetworkLink> links;
  const json& jl = field(j, "links", path);
  if (!jl.is_array()) throw StructuralError(path + ": 'links' must be an array");
  for (const auto& e : jl) {
    if (!e.is_object()) throw StructuralError(path + ": each link must be an object");
    NetworkLink link;
    const json& ju = field(e, "u", path);
    const json& jv2 = field(e, "v", path);
    if (!ju.is_string() || !jv2.is_string()) {
      throw StructuralError(path + ": link endpoints must be node id strings");
    }
    link.u = ju.get<std::string>();
    link.v = jv2.get<std::string>();
    if (auto it = e.find("mult"); it != e.end()) {
      if (!it->is_number_integer() || it->get<long long>() < 1) {
        throw StructuralError(path + ": 'mult' must be a positive integer");
      }
      link.mult = static_cast<unsigned long>(it->get<long long>());
    }
    links.push_back(std::move(link));
  }
  try {
    return NetworkGraph(std::move(nodes), std::move(links));
  } catch (const StructuralError& e) {
    throw StructuralError(path + ": " + e.what());
  }
}

void write_network(const NetworkGraph& n, const std::string& path) {
  json j;
  j["nodes"] = n.nodes();
  json links = json::array();
  for (const auto& link : n.links()) {
    json e;
    e["u"] = link.u;
    e["v"] = link.v;
    if (link.mult != 1) e["mult"] = link.mult;
    links.push_back(std::move(e));
  }
  j["links"] = std::move(links);
  store(j, path);
}

DemandVector read_demands(const std::string& path) {
  const json j = load(path);
  if (!j.is_object()) throw StructuralError(path + ": expected a JSON object");
  DemandVector tau;
  for (const auto& [key, value] : j.items()) {
    try {
      tau.set(key, rational_field(value, "'" + key + "'"));
    } catch (const StructuralError& e) {
      throw StructuralError(path + ": " + e.what());
    }
  }
  return tau;
}

void write_demands(const DemandVector& tau, const std::string& path) {
  json j = json::object();
  for (const auto& [id, value] : tau.entries()) j[id] = value.str();
  store(j, path);
}

Schedule read_schedule(const std::string& path) {
  const json j = load(path);
  if (!j.is_object()) throw StructuralError(path + ": expected a JSON object");

  Rational horizon;
  try {
    horizon = rational_field(field(j, "horizon", path), "'horizon'");
  } catch (const StructuralError& e) {
    throw StructuralError(path + ": " + e.what());
  }

  Schedule s{Horizon{horizon}};
  const json& jl = field(j, "links", path);
  if (!jl.is_object()) throw StructuralError(path + ": 'links' must be an object");
  for (const auto& [id, pieces] : jl.items()) {
    if (!pieces.is_array()) {
      throw StructuralError(path + ": intervals for '" + id + "' must be an array");
    }
    std::vector<Interval> intervals;
    for (const auto& piece : pieces) {
      if (!piece.is_array() || piece.size() != 2) {
        throw StructuralError(path + ": each interval must be an [a, b] pair");
      }
      try {
        intervals.push_back({rational_field(piece[0], "'" + id + "' interval start"),
                             rational_field(piece[1], "'" + id + "' interval end")});
      } catch (const StructuralError& e) {
        throw StructuralError(path + ": " + e.what());
      }
    }
    try {
      s.assignment[id] = IntervalSet::from_intervals(std::move(intervals));
    } catch (const StructuralError& e) {
      throw StructuralError(path + ": link '" + id + "': " + e.what());
    }
  }
  return s;
}

void write_schedule(const Schedule& s, const std::string& path) {
  json j;
  j["horizon"] = s.horizon.T.str();
  json links = json::object();
  for (const auto& [id, intervals] : s.assignment) {
    json pieces = json::array();
    for (const auto& piece : intervals.intervals()) {
      pieces.push_back(json::array({piece.lo.str(), piece.hi.str()}));
    }
    links[id] = std::move(pieces);
  }
  j["links"] = std::move(links);
  store(j, path);
}

std::vector<generators::Point> read_points(const std::string& path) {
  const json j = load(path);
  if (!j.is_object()) throw StructuralError(path + ": expected a JSON object");
  const json& jp = field(j, "points", path);
  if (!jp.is_array()) throw StructuralError(path + ": 'points' must be an array");

  std::vector<generators::Point> points;
  std::size_t index = 0;
  for (const auto& p : jp) {
    if (!p.is_object()) throw StructuralError(path + ": each point must be an object");
    generators::Point point;
    point.id = "p" + std::to_string(index);
    if (auto it = p.find("id"); it != p.end()) {
      if (!it->is_string()) throw StructuralError(path + ": point ids must be strings");
      point.id = it->get<std::string>();
    }
    try {
      point.x = rational_field(field(p, "x", path), "point '" + point.id + "' x");
      point.y = rational_field(field(p, "y", path), "point '" + point.id + "' y");
    } catch (const StructuralError& e) {
      throw StructuralError(path + ": " + e.what());
    }
    points.push_back(std::move(point));
    ++index;
  }
  return points;
}

void write_points(const std::vector<generators::Point>& points, const std::string& path) {
  json j;
  json arr = json::array();
  for (const auto& p : points) {
    json e;
    e["id"] = p.id;
    e["x"] = p.x.str();
    e["y"] = p.y.str();
    arr.push_back(std::move(e));
  }
  j["points"] = std::move(arr);
  store(j, path);
}

}  // namespace linksched::io
