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

#ifndef LINKSCHED_IO_HPP
#define LINKSCHED_IO_HPP

#include <string>
#include <vector>

#include "linksched/conflict_graph.hpp"
#include "linksched/demand.hpp"
#include "linksched/generators.hpp"
#include "linksched/network_graph.hpp"
#include "linksched/schedule.hpp"

namespace linksched::io {

// JSON file formats. Rationals are always strings ("p/q", integer, or
// decimal); raw JSON floats are rejected because they lose exactness.
//
//   graph:    {"vertices": ["l1", ...], "edges": [["l1","l2"], ...]}
//   network:  {"nodes": ["u", ...], "links": [{"u":"u","v":"v","mult":2}, ...]}
//   demands:  {"l1": "9/10", ...}
//   schedule: {"horizon": "1", "links": {"l1": [["0","9/10"]], ...}}
//   points:   {"points": [{"id":"p0","x":"0","y":"1/2"}, ...]}
//
// Malformed files raise StructuralError naming the file and the field.

ConflictGraph read_graph(const std::string& path);
void write_graph(const ConflictGraph& g, const std::string& path);

NetworkGraph read_network(const std::string& path);
void write_network(const NetworkGraph& n, const std::string& path);

DemandVector read_demands(const std::string& path);
void write_demands(const DemandVector& tau, const std::string& path);

Schedule read_schedule(const std::string& path);
void write_schedule(const Schedule& s, const std::string& path);

std::vector<generators::Point> read_points(const std::string& path);
void write_points(const std::vector<generators::Point>& points, const std::string& path);

}  // namespace linksched::io

#endif  // LINKSCHED_IO_HPP
