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

// Command-line front end. Exit codes: 0 = pass/ok, 1 = condition failed or
// infeasible, 2 = usage or structural error, 3 = resource limit exceeded.

#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "linksched/admission.hpp"
#include "linksched/errors.hpp"
#include "linksched/generators.hpp"
#include "linksched/invariants.hpp"
#include "linksched/io.hpp"
#include "linksched/oracle.hpp"
#include "linksched/scheduler.hpp"

namespace {

using nlohmann::json;
using namespace linksched;

constexpr int kExitOk = 0;
constexpr int kExitConditionFailed = 1;
constexpr int kExitStructural = 2;
constexpr int kExitResource = 3;

struct GlobalOptions {
  std::string format = "json";
  bool approx = false;
  EnumLimits limits;
  std::string output;  // empty = stdout
};

void emit(const GlobalOptions& opts, const std::string& text) {
  if (opts.output.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
  } else {
    std::ofstream out(opts.output);
    if (!out) throw StructuralError(opts.output + ": cannot open file for writing");
    out << text;
    if (!text.empty() && text.back() != '\n') out << "\n";
  }
}

void emit_json(const GlobalOptions& opts, const json& j) { emit(opts, j.dump(2)); }

json report_to_json(const ConditionReport& report, const Horizon& T,
                    const GlobalOptions& opts) {
  json rows = json::array();
  for (const auto& [key, row] : report.rows) {
    json r;
    r["id"] = key;
    r["lhs"] = row.lhs.str();
    if (opts.approx) r["lhs_approx"] = row.lhs.approx();
    r["pass"] = row.passes;
    rows.push_back(std::move(r));
  }
  json j;
  j["condition"] = report.condition_name;
  if (!report.semantics.empty()) j["semantics"] = report.semantics;
  j["horizon"] = T.T.str();
  j["overall"] = report.overall;
  j["rows"] = std::move(rows);
  j["failing"] = report.failing();
  return j;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string report_to_csv(const ConditionReport& report, const GlobalOptions& opts) {
  std::ostringstream out;
  out << "id,lhs," << (opts.approx ? "lhs_approx," : "") << "pass\n";
  for (const auto& [key, row] : report.rows) {
    out << csv_escape(key) << "," << row.lhs.str() << ",";
    if (opts.approx) out << row.lhs.approx() << ",";
    out << (row.passes ? "true" : "false") << "\n";
  }
  return out.str();
}

json schedule_to_json(const Schedule& s) {
  json links = json::object();
  for (const auto& [id, intervals] : s.assignment) {
    json pieces = json::array();
    for (const auto& piece : intervals.intervals()) {
      pieces.push_back(json::array({piece.lo.str(), piece.hi.str()}));
    }
    links[id] = std::move(pieces);
  }
  json j;
  j["horizon"] = s.horizon.T.str();
  j["links"] = std::move(links);
  return j;
}

json set_schedule_to_json(const SetFormSchedule& s) {
  json sets = json::array();
  for (const auto& [members, duration] : s.durations) {
    json e;
    e["members"] = members;
    e["duration"] = duration.str();
    sets.push_back(std::move(e));
  }
  json j;
  j["horizon"] = s.horizon.T.str();
  j["sets"] = std::move(sets);
  return j;
}

json demands_to_json(const DemandVector& tau) {
  json j = json::object();
  for (const auto& [id, value] : tau.entries()) j[id] = value.str();
  return j;
}

Rational parse_rational_arg(const std::string& text, const std::string& what) {
  try {
    return Rational::parse(text);
  } catch (const StructuralError&) {
    throw StructuralError(what + ": cannot parse rational '" + text + "'");
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

Rational clique_scale_from(const std::string& preset) {
  if (preset == "line") return admission::scale_line_graph();
  if (preset == "udg") return admission::scale_unit_disk();
  if (preset == "shannon") return admission::scale_shannon();
  return parse_rational_arg(preset, "clique scale");
}

// ---------------------------------------------------------------- check --

int run_check(const GlobalOptions& opts, const std::string& condition,
              const std::string& graph_path, const std::string& network_path,
              const std::string& demands_path, const std::string& horizon_text,
              const std::string& designated) {
  const Horizon T{parse_rational_arg(horizon_text, "--horizon")};
  const DemandVector tau =
      demands_path.empty() ? DemandVector{} : io::read_demands(demands_path);

  std::string name = condition;
  std::string scale_text;
  if (auto eq = condition.find('='); eq != std::string::npos) {
    name = condition.substr(0, eq);
    scale_text = condition.substr(eq + 1);
  }

  ConditionReport report;
  if (name == "row-primary" || name == "shannon" ||
      (name == "clique-scaled" && !network_path.empty())) {
    if (network_path.empty()) {
      throw StructuralError("condition '" + name + "' needs --network");
    }
    const NetworkGraph n = io::read_network(network_path);
    if (name == "row-primary") {
      report = admission::check_row_primary(n, tau, T);
    } else if (name == "shannon") {
      report = admission::check_shannon(n, tau, T);
    } else {
      if (!scale_text.empty() && scale_text != "line") {
        throw StructuralError("only the 'line' preset applies to a network file");
      }
      report = admission::check_clique_line_scaled(n, tau, T);
    }
  } else {
    if (graph_path.empty()) {
      throw StructuralError("condition '" + name + "' needs --graph");
    }
    const ConflictGraph g = io::read_graph(graph_path);
    if (name == "row") {
      report = admission::check_row(g, tau, T);
    } else if (name == "row2") {
      report = admission::check_row2(g, tau, T);
    } else if (name == "row2d") {
      if (designated.empty()) throw StructuralError("row2d needs --designated");
      report = admission::check_row2_designated(g, tau, T, designated);
    } else if (name == "degree") {
      report = admission::check_degree(g, tau, T);
    } else if (name == "mixed") {
      report = admission::check_mixed(g, tau, T);
    } else if (name == "clique") {
      report = admission::check_clique(g, tau, T, Rational(1), opts.limits);
    } else if (name == "clique-scaled") {
      if (scale_text.empty()) {
        throw StructuralError("clique-scaled needs a preset, e.g. clique-scaled=udg");
      }
      report =
          admission::check_clique(g, tau, T, clique_scale_from(scale_text), opts.limits);
    } else {
      throw StructuralError("unknown condition '" + name + "'");
    }
  }

  if (opts.format == "csv") {
    emit(opts, report_to_csv(report, opts));
  } else {
    emit_json(opts, report_to_json(report, T, opts));
  }
  return report.overall ? kExitOk : kExitConditionFailed;
}

// ------------------------------------------------------------- schedule --

int run_schedule(const GlobalOptions& opts, const std::string& method,
                 const std::string& graph_path, const std::string& demands_path,
                 const std::string& horizon_text, const std::string& order_text,
                 const std::string& designated) {
  const ConflictGraph g = io::read_graph(graph_path);
  const DemandVector tau =
      demands_path.empty() ? DemandVector{} : io::read_demands(demands_path);
  const Horizon T{parse_rational_arg(horizon_text, "--horizon")};

  Schedule s{T};
  if (method == "row") {
    s = scheduler::schedule_row(g, tau, T, split_list(order_text));
  } else if (method == "degree" || method == "mixed") {
    s = scheduler::schedule_degree_or_mixed(g, tau, T);
  } else if (method == "row2") {
    s = scheduler::schedule_row2(g, tau, T);
  } else if (method == "row2d") {
    if (designated.empty()) throw StructuralError("row2d needs --designated");
    s = scheduler::schedule_row2_designated(g, tau, T, designated);
  } else {
    throw StructuralError("unknown scheduling method '" + method + "'");
  }

  emit_json(opts, schedule_to_json(s));
  return kExitOk;
}

// --------------------------------------------------------------- oracle --

json beta_to_json(const oracle::BetaResult& result, const GlobalOptions& opts) {
  json j;
  j["value"] = result.value.str();
  if (opts.approx) j["value_approx"] = result.value.approx();
  j["vertex"] = result.vertex;
  j["witness"] = demands_to_json(result.witness);
  return j;
}

int run_beta(const GlobalOptions& opts, const std::string& which,
             const std::string& graph_path) {
  const ConflictGraph g = io::read_graph(graph_path);
  oracle::BetaResult result;
  if (which == "row") {
    result = oracle::beta_row(g, opts.limits);
  } else if (which == "degree") {
    result = oracle::beta_degree(g, opts.limits);
  } else if (which == "mixed") {
    result = oracle::beta_mixed(g, opts.limits);
  } else if (which == "row2") {
    result = oracle::beta_row2(g, opts.limits);
  } else {
    throw StructuralError("unknown beta kind '" + which + "'");
  }
  json j = beta_to_json(result, opts);
  j["beta"] = which;
  emit_json(opts, j);
  return kExitOk;
}

int run_imp(const GlobalOptions& opts, const std::string& graph_path, int samples,
            std::uint64_t seed) {
  const ConflictGraph g = io::read_graph(graph_path);
  const oracle::ImpEstimate estimate =
      oracle::imp_estimate(g, samples, seed, 3, opts.limits);
  json j;
  j["imp_lower_bound"] = estimate.ratio.str();
  if (opts.approx) j["imp_lower_bound_approx"] = estimate.ratio.approx();
  j["witness"] = demands_to_json(estimate.witness);
  j["samples"] = samples;
  j["seed"] = seed;
  emit_json(opts, j);
  return kExitOk;
}

// ------------------------------------------------------------ invariant --

int run_invariant(const GlobalOptions& opts, const std::string& which,
                  const std::string& graph_path, const std::string& network_path,
                  const std::string& demands_path, const std::string& subset_text) {
  json j;
  if (which == "line-cliques" || which == "chromatic-index") {
    if (network_path.empty()) {
      throw StructuralError("invariant '" + which + "' needs --network");
    }
    const NetworkGraph n = io::read_network(network_path);
    if (which == "line-cliques") {
      j["cliques"] = invariants::line_graph_cliques(n);
    } else {
      const Rational bound = invariants::chromatic_index_bound(n);
      j["bound"] = bound.str();
      if (opts.approx) j["bound_approx"] = bound.approx();
    }
    emit_json(opts, j);
    return kExitOk;
  }

  if (graph_path.empty()) {
    throw StructuralError("invariant '" + which + "' needs --graph");
  }
  const ConflictGraph g = io::read_graph(graph_path);
  if (which == "sigma") {
    const auto result = invariants::sigma(g, opts.limits);
    j["sigma"] = result.value;
    j["witness"]["center"] = result.witness.center;
    j["witness"]["leaves"] = result.witness.leaves;
  } else if (which == "alpha") {
    j["alpha"] = subset_text.empty()
                     ? invariants::alpha(g, opts.limits)
                     : invariants::alpha(g, split_list(subset_text), opts.limits);
  } else if (which == "max-degree") {
    j["max_degree"] = invariants::max_degree(g);
  } else if (which == "cliques") {
    j["cliques"] = invariants::maximal_cliques(g, opts.limits);
  } else if (which == "beta-mixed-predicted") {
    const auto value = invariants::beta_mixed_predicted(g);
    j["applicable"] = value.has_value();
    if (value) {
      j["value"] = value->str();
      if (opts.approx) j["value_approx"] = value->approx();
    }
  } else if (which == "beta-row2-predicted") {
    const Rational value = invariants::beta_row2_predicted(g, opts.limits);
    j["value"] = value.str();
    if (opts.approx) j["value_approx"] = value.approx();
  } else if (which == "b-bound") {
    if (demands_path.empty()) throw StructuralError("b-bound needs --demands");
    const Rational value = invariants::b_bound(g, io::read_demands(demands_path));
    j["value"] = value.str();
    if (opts.approx) j["value_approx"] = value.approx();
  } else {
    throw StructuralError("unknown invariant '" + which + "'");
  }
  emit_json(opts, j);
  return kExitOk;
}

// ---------------------------------------------------------------- report --

struct ReportRow {
  std::string name;
  std::size_t n = 0;
  std::size_t m = 0;
  std::string sigma;
  std::string delta;
  std::string beta_row;
  std::string beta_degree;
  std::string beta_mixed;
  std::string beta_row2;
  std::string imp_lb;
};

ReportRow evaluate_graph(const std::string& name, const ConflictGraph& g, int samples,
                         std::uint64_t seed, const EnumLimits& limits) {
  ReportRow row;
  row.name = name;
  row.n = g.size();
  row.m = g.edge_count();
  row.sigma = std::to_string(invariants::sigma(g, limits).value);
  row.delta = std::to_string(invariants::max_degree(g));
  row.beta_row = oracle::beta_row(g, limits).value.str();
  row.beta_degree = oracle::beta_degree(g, limits).value.str();
  row.beta_mixed = oracle::beta_mixed(g, limits).value.str();
  try {
    row.beta_row2 = oracle::beta_row2(g, limits).value.str();
  } catch (const NotApplicableError&) {
    row.beta_row2 = "n/a";
  }
  row.imp_lb = oracle::imp_estimate(g, samples, seed, 3, limits).ratio.str();
  return row;
}

int run_report(const GlobalOptions& opts, const std::string& config_path) {
  const json config = [&] {
    std::ifstream in(config_path);
    if (!in) throw StructuralError(config_path + ": cannot open file");
    try {
      json j;
      in >> j;
      return j;
    } catch (const json::parse_error& e) {
      throw StructuralError(config_path + ": " + std::string(e.what()));
    }
  }();

  if (!config.is_object() || !config.contains("graphs") || !config["graphs"].is_array()) {
    throw StructuralError(config_path + ": expected {\"graphs\": [...]}");
  }
  const int samples = config.value("samples", 20);
  const std::uint64_t seed = config.value("seed", 1ull);

  struct Job {
    std::string name;
    ConflictGraph graph;
  };
  std::vector<Job> jobs;
  for (const auto& entry : config["graphs"]) {
    if (!entry.is_object() || !entry.contains("path")) {
      throw StructuralError(config_path + ": each graph entry needs a 'path'");
    }
    const std::string path = entry["path"].get<std::string>();
    jobs.push_back({entry.value("name", path), io::read_graph(path)});
  }

  // Graphs are independent; evaluate in parallel, emit in input order.
  std::vector<std::future<ReportRow>> futures;
  futures.reserve(jobs.size());
  for (const auto& job : jobs) {
    futures.push_back(std::async(std::launch::async, [&job, samples, seed, &opts] {
      return evaluate_graph(job.name, job.graph, samples, seed, opts.limits);
    }));
  }
  std::vector<ReportRow> rows;
  rows.reserve(jobs.size());
  for (auto& f : futures) rows.push_back(f.get());

  if (opts.format == "csv") {
    std::ostringstream out;
    out << "name,n,m,sigma,delta,beta_row,beta_degree,beta_mixed,beta_row2,imp_lb\n";
    for (const auto& row : rows) {
      out << csv_escape(row.name) << "," << row.n << "," << row.m << "," << row.sigma
          << "," << row.delta << "," << row.beta_row << "," << row.beta_degree << ","
          << row.beta_mixed << "," << row.beta_row2 << "," << row.imp_lb << "\n";
    }
    emit(opts, out.str());
  } else {
    json out;
    out["rows"] = json::array();
    for (const auto& row : rows) {
      json r;
      r["name"] = row.name;
      r["n"] = row.n;
      r["m"] = row.m;
      r["sigma"] = row.sigma;
      r["delta"] = row.delta;
      r["beta_row"] = row.beta_row;
      r["beta_degree"] = row.beta_degree;
      r["beta_mixed"] = row.beta_mixed;
      r["beta_row2"] = row.beta_row2;
      r["imp_lb"] = row.imp_lb;
      out["rows"].push_back(std::move(r));
    }
    emit_json(opts, out);
  }
  return kExitOk;
}

// ------------------------------------------------------------------ gen --

int run_gen(const GlobalOptions& opts, const std::string& family, std::size_t n,
            const std::string& sizes_text, const std::string& network_path,
            const std::string& points_path, const std::string& radius_text,
            const std::string& p_text, const std::string& box_text, std::uint64_t seed) {
  const auto write_out = [&](const ConflictGraph& g) {
    json j;
    j["vertices"] = g.vertices();
    json edges = json::array();
    for (const auto& [a, b] : g.edges()) edges.push_back(json::array({a, b}));
    j["edges"] = std::move(edges);
    emit_json(opts, j);
  };

  if (family == "star") {
    write_out(generators::star(n));
  } else if (family == "cycle") {
    write_out(generators::cycle(n));
  } else if (family == "complete") {
    write_out(generators::complete(n));
  } else if (family == "k4e") {
    write_out(generators::k4_minus_e());
  } else if (family == "t3") {
    if (sizes_text.empty()) throw StructuralError("t3 needs --sizes, e.g. --sizes 3,1");
    std::vector<std::size_t> sizes;
    for (const auto& item : split_list(sizes_text)) {
      long value = 0;
      try {
        value = std::stol(item);
      } catch (const std::exception&) {
        throw StructuralError("--sizes: cannot parse '" + item + "'");
      }
      if (value < 1) throw StructuralError("clique sizes must be positive");
      sizes.push_back(static_cast<std::size_t>(value));
    }
    write_out(generators::theorem3_family(sizes));
  } else if (family == "line") {
    if (network_path.empty()) throw StructuralError("gen line needs --network");
    write_out(generators::line_graph(io::read_network(network_path)));
  } else if (family == "udg") {
    if (points_path.empty() || radius_text.empty()) {
      throw StructuralError("gen udg needs --points and --radius");
    }
    write_out(generators::unit_disk(io::read_points(points_path),
                                    parse_rational_arg(radius_text, "--radius")));
  } else if (family == "random") {
    write_out(generators::random_graph(n, parse_rational_arg(p_text, "--p"), seed));
  } else if (family == "random-points") {
    const auto points =
        generators::random_points(n, parse_rational_arg(box_text, "--box"), seed);
    json arr = json::array();
    for (const auto& p : points) {
      json e;
      e["id"] = p.id;
      e["x"] = p.x.str();
      e["y"] = p.y.str();
      arr.push_back(std::move(e));
    }
    json j;
    j["points"] = std::move(arr);
    emit_json(opts, j);
  } else {
    throw StructuralError("unknown generator '" + family + "'");
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Admission control and scheduling checks for interference-constrained "
               "link demands, with an exact fractional-coloring oracle"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand

  GlobalOptions opts;
  app.add_option("--format", opts.format, "Output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--approx", opts.approx,
               "Add decimal approximations (display only, never authoritative)");
  app.add_option("--limit", opts.limits.max_vertices,
                 "Enumeration limit on vertex counts")
      ->envname("LINKSCHED_LIMIT");
  app.add_option("--set-limit", opts.limits.max_sets,
                 "Enumeration limit on independent sets / cliques");
  app.add_option("-o,--output", opts.output, "Write output to this file");

  // check
  std::string condition, graph_path, network_path, demands_path, horizon_text = "1";
  std::string designated, order_text, subset_text;
  auto* check = app.add_subcommand("check", "Evaluate an admission condition");
  check->add_option("--condition", condition,
                    "row|row2|row2d|degree|mixed|clique|clique-scaled=<preset>|"
                    "row-primary|shannon")
      ->required();
  check->add_option("--graph", graph_path, "Conflict graph JSON file");
  check->add_option("--network", network_path, "Network JSON file");
  check->add_option("--demands", demands_path, "Demand JSON file");
  check->add_option("--horizon", horizon_text, "Horizon T (rational)");
  check->add_option("--designated", designated, "Designated link for row2d");

  // schedule
  std::string method;
  auto* schedule = app.add_subcommand("schedule", "Construct a validated schedule");
  schedule->add_option("--method", method, "row|degree|mixed|row2|row2d")->required();
  schedule->add_option("--graph", graph_path, "Conflict graph JSON file")->required();
  schedule->add_option("--demands", demands_path, "Demand JSON file");
  schedule->add_option("--horizon", horizon_text, "Horizon T (rational)");
  schedule->add_option("--order", order_text, "Vertex order for --method row");
  schedule->add_option("--designated", designated, "Designated link for row2d");

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact LP ground truth");
  oracle_cmd->require_subcommand(1);
  auto* chif = oracle_cmd->add_subcommand("chi-f", "Fractional chromatic number");
  chif->add_option("--graph", graph_path, "Conflict graph JSON file")->required();
  chif->add_option("--demands", demands_path, "Weight JSON file");
  auto* feas = oracle_cmd->add_subcommand("feasible", "Exact feasibility test");
  feas->add_option("--graph", graph_path, "Conflict graph JSON file")->required();
  feas->add_option("--demands", demands_path, "Demand JSON file");
  feas->add_option("--horizon", horizon_text, "Horizon T (rational)");
  std::string beta_kind;
  auto* beta_cmd = oracle_cmd->add_subcommand("beta", "Worst-case condition ratios");
  beta_cmd->add_option("kind", beta_kind, "row|degree|mixed|row2")->required();
  beta_cmd->add_option("--graph", graph_path, "Conflict graph JSON file")->required();
  int samples = 20;
  std::uint64_t seed = 1;
  auto* imp_cmd = oracle_cmd->add_subcommand("imp", "Imperfection-ratio lower bound");
  imp_cmd->add_option("--graph", graph_path, "Conflict graph JSON file")->required();
  imp_cmd->add_option("--samples", samples, "Random demand samples");
  imp_cmd->add_option("--seed", seed, "PRNG seed");

  // top-level aliases
  auto* beta_top = app.add_subcommand("beta", "Alias of 'oracle beta'");
  beta_top->add_option("kind", beta_kind, "row|degree|mixed|row2")->required();
  beta_top->add_option("--graph", graph_path, "Conflict graph JSON file")->required();
  auto* imp_top = app.add_subcommand("imp", "Alias of 'oracle imp'");
  imp_top->add_option("--graph", graph_path, "Conflict graph JSON file")->required();
  imp_top->add_option("--samples", samples, "Random demand samples");
  imp_top->add_option("--seed", seed, "PRNG seed");

  // invariant
  std::string invariant_kind;
  auto* invariant = app.add_subcommand("invariant", "Graph invariants and predictions");
  invariant->add_option("kind", invariant_kind,
                        "sigma|alpha|max-degree|cliques|line-cliques|chromatic-index|"
                        "beta-mixed-predicted|beta-row2-predicted|b-bound")
      ->required();
  invariant->add_option("--graph", graph_path, "Conflict graph JSON file");
  invariant->add_option("--network", network_path, "Network JSON file");
  invariant->add_option("--demands", demands_path, "Demand JSON file (b-bound)");
  invariant->add_option("--subset", subset_text, "Vertex subset for alpha");

  // gen
  std::string family, sizes_text, points_path, radius_text, p_text = "1/2",
                                                            box_text = "4";
  std::size_t gen_n = 0;
  auto* gen = app.add_subcommand("gen", "Generate graphs, networks, and point sets");
  gen->add_option("family", family,
                  "star|cycle|complete|k4e|t3|line|udg|random|random-points")
      ->required();
  gen->add_option("--n,--d", gen_n, "Size parameter");
  gen->add_option("--sizes", sizes_text, "Clique sizes for t3, e.g. 3,1");
  gen->add_option("--network", network_path, "Network JSON file (line)");
  gen->add_option("--points", points_path, "Points JSON file (udg)");
  gen->add_option("--radius", radius_text, "Disk radius (udg)");
  gen->add_option("--p", p_text, "Edge probability (random)");
  gen->add_option("--box", box_text, "Box size (random-points)");
  gen->add_option("--seed", seed, "PRNG seed");

  // report
  std::string config_path;
  auto* report = app.add_subcommand("report", "Batch invariant/beta table");
  report->add_option("--config", config_path, "Batch config JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitStructural;
  }

  try {
    if (check->parsed()) {
      return run_check(opts, condition, graph_path, network_path, demands_path,
                       horizon_text, designated);
    }
    if (schedule->parsed()) {
      return run_schedule(opts, method, graph_path, demands_path, horizon_text,
                          order_text, designated);
    }
    if (oracle_cmd->parsed()) {
      if (chif->parsed()) {
        const ConflictGraph g = io::read_graph(graph_path);
        const DemandVector weights =
            demands_path.empty() ? DemandVector{} : io::read_demands(demands_path);
        const auto result = oracle::chi_f(g, weights, opts.limits);
        json j;
        j["value"] = result.value.str();
        if (opts.approx) j["value_approx"] = result.value.approx();
        j["schedule"] = set_schedule_to_json(result.schedule);
        emit_json(opts, j);
        return kExitOk;
      }
      if (feas->parsed()) {
        const ConflictGraph g = io::read_graph(graph_path);
        const DemandVector tau =
            demands_path.empty() ? DemandVector{} : io::read_demands(demands_path);
        const Horizon T{parse_rational_arg(horizon_text, "--horizon")};
        const auto result = oracle::chi_f(g, tau, opts.limits);
        const bool ok = result.value <= T.T;
        json j;
        j["feasible"] = ok;
        j["chi_f"] = result.value.str();
        j["horizon"] = T.T.str();
        emit_json(opts, j);
        return ok ? kExitOk : kExitConditionFailed;
      }
      if (beta_cmd->parsed()) return run_beta(opts, beta_kind, graph_path);
      if (imp_cmd->parsed()) return run_imp(opts, graph_path, samples, seed);
    }
    if (beta_top->parsed()) return run_beta(opts, beta_kind, graph_path);
    if (imp_top->parsed()) return run_imp(opts, graph_path, samples, seed);
    if (invariant->parsed()) {
      return run_invariant(opts, invariant_kind, graph_path, network_path, demands_path,
                           subset_text);
    }
    if (gen->parsed()) {
      return run_gen(opts, family, gen_n, sizes_text, network_path, points_path,
                     radius_text, p_text, box_text, seed);
    }
    if (report->parsed()) return run_report(opts, config_path);
    throw StructuralError("no subcommand given");
  } catch (const ConditionFailedError& e) {
    std::cerr << "condition failed: " << e.what() << "\n";
    return kExitConditionFailed;
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const NotApplicableError& e) {
    std::cerr << "not applicable: " << e.what() << "\n";
    return kExitStructural;
  } catch (const StructuralError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitStructural;
  } catch (const Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitStructural;
  }
  return kExitOk;
}
