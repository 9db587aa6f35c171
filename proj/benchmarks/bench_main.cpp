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

#include <benchmark/benchmark.h>

#include "linksched/admission.hpp"
#include "linksched/generators.hpp"
#include "linksched/invariants.hpp"
#include "linksched/oracle.hpp"
#include "linksched/prng.hpp"
#include "linksched/scheduler.hpp"

namespace {

using namespace linksched;

DemandVector degree_tight_demands(const ConflictGraph& g) {
  const long delta = static_cast<long>(invariants::max_degree(g));
  DemandVector tau;
  for (const auto& id : g.vertices()) tau.set(id, Rational(1, delta + 1));
  return tau;
}

void BM_MaximalCliques(benchmark::State& state) {
  const auto g = generators::random_graph(state.range(0), Rational(1, 2), 7);
  EnumLimits limits;
  limits.max_vertices = 64;
  limits.max_sets = 1'000'000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(invariants::maximal_cliques(g, limits));
  }
}
BENCHMARK(BM_MaximalCliques)->Arg(10)->Arg(16)->Arg(22);

void BM_Sigma(benchmark::State& state) {
  const auto g = generators::random_graph(state.range(0), Rational(1, 2), 11);
  EnumLimits limits;
  limits.max_vertices = 64;
  for (auto _ : state) {
    benchmark::DoNotOptimize(invariants::sigma(g, limits));
  }
}
BENCHMARK(BM_Sigma)->Arg(10)->Arg(16)->Arg(22);

void BM_ChiF(benchmark::State& state) {
  const auto g = generators::random_graph(state.range(0), Rational(1, 2), 13);
  DemandVector ones;
  for (const auto& id : g.vertices()) ones.set(id, Rational(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::chi_f(g, ones));
  }
}
BENCHMARK(BM_ChiF)->Arg(8)->Arg(11)->Arg(14);

void BM_BetaRow(benchmark::State& state) {
  const auto g = generators::random_graph(state.range(0), Rational(1, 2), 17);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::beta_row(g));
  }
}
BENCHMARK(BM_BetaRow)->Arg(6)->Arg(8)->Arg(10);

void BM_ScheduleRow(benchmark::State& state) {
  const auto g = generators::random_graph(state.range(0), Rational(1, 4), 19);
  const Horizon T{Rational(1)};
  const DemandVector tau = degree_tight_demands(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(scheduler::schedule_row(g, tau, T));
  }
}
BENCHMARK(BM_ScheduleRow)->Arg(20)->Arg(40)->Arg(80);

void BM_ScheduleRow2(benchmark::State& state) {
  // Even cycles exercise the cheap branch; random connected graphs the search.
  SplitMix64 rng(23);
  ConflictGraph g = generators::random_graph(state.range(0), Rational(2, 5), 29);
  while (!is_connected(g) || is_complete(g) || is_odd_cycle(g)) {
    g = generators::random_graph(state.range(0), Rational(2, 5), rng.next());
  }
  const Horizon T{Rational(1)};
  const DemandVector tau = degree_tight_demands(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(scheduler::schedule_row2(g, tau, T));
  }
}
BENCHMARK(BM_ScheduleRow2)->Arg(8)->Arg(12)->Arg(16);

void BM_ValidateSchedule(benchmark::State& state) {
  const auto g = generators::random_graph(state.range(0), Rational(1, 4), 31);
  const Horizon T{Rational(1)};
  const DemandVector tau = degree_tight_demands(g);
  const Schedule s = scheduler::schedule_degree_or_mixed(g, tau, T);
  for (auto _ : state) {
    benchmark::DoNotOptimize(validate_schedule(g, tau, T, s));
  }
}
BENCHMARK(BM_ValidateSchedule)->Arg(20)->Arg(40)->Arg(80);

}  // namespace

BENCHMARK_MAIN();
