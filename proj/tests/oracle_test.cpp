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

#include "linksched/oracle.hpp"

#include <gtest/gtest.h>

#include "linksched/admission.hpp"
#include "linksched/errors.hpp"
#include "linksched/generators.hpp"
#include "linksched/invariants.hpp"
#include "test_util.hpp"

namespace linksched {
namespace {

using testutil::R;
using testutil::demands;
using testutil::make_graph;

const Horizon kUnit{Rational(1)};

DemandVector all_ones(const ConflictGraph& g) {
  DemandVector tau;
  for (const auto& id : g.vertices()) tau.set(id, Rational(1));
  return tau;
}

TEST(ChiF, CompleteGraphsNeedFullSerialization) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const ConflictGraph g = generators::complete(n);
    EXPECT_EQ(oracle::chi_f(g, all_ones(g)).value, Rational(static_cast<long>(n)));
  }
}

TEST(ChiF, CycleFiveIsFiveHalves) {
  const ConflictGraph g = generators::cycle(5);
  const auto result = oracle::chi_f(g, all_ones(g));
  EXPECT_EQ(result.value, R("5/2"));
  // Independent squeeze: any slice covers at most alpha = 2 vertices, so
  // total weight 5 needs duration >= 5/2; the returned schedule certifies
  // the other direction below.
  EXPECT_EQ(testutil::weight_over_alpha_bound(g, all_ones(g)), R("5/2"));
}

TEST(ChiF, StarWithTinyCenterFitsInUnitTime) {
  const ConflictGraph g = generators::star(4);
  DemandVector x;
  x.set("v0", R("1/10"));
  for (int i = 1; i <= 4; ++i) x.set("v" + std::to_string(i), R("9/10"));
  EXPECT_EQ(oracle::chi_f(g, x).value, R("1"));
}

TEST(ChiF, EmptyAndZeroWeightCases) {
  EXPECT_EQ(oracle::chi_f(ConflictGraph({}, {}), DemandVector{}).value, R("0"));
  const ConflictGraph g = generators::cycle(4);
  EXPECT_EQ(oracle::chi_f(g, DemandVector{}).value, R("0"));
}

// Strong duality, certified: the reported optimum is achieved by the
// returned schedule (valid, coverage per vertex, total duration equal to
// the value) and is at least the clique lower bound.
TEST(ChiF, OptimumIsCertifiedByTheSchedule) {
  SplitMix64 rng(107);
  for (int trial = 0; trial < 60; ++trial) {
    const ConflictGraph g =
        generators::random_graph(1 + rng.below(8), Rational(1, 2), rng.next());
    const DemandVector x = testutil::random_demands(g, rng);
    const auto result = oracle::chi_f(g, x);

    Rational total(0);
    for (const auto& [members, duration] : result.schedule.durations) {
      total += duration;
    }
    EXPECT_EQ(total, result.value);

    EXPECT_GE(result.value, oracle::t_clique(g, x));
    EXPECT_GE(result.value, testutil::weight_over_alpha_bound(g, x));

    if (result.value.sign() > 0) {
      const Schedule intervals = set_form_to_intervals(g, result.schedule);
      EXPECT_TRUE(
          validate_schedule(g, x, Horizon{result.value}, intervals).ok)
          << "trial " << trial;
    }
  }
}

TEST(Feasible, Examples) {
  const ConflictGraph triangle = generators::complete(3);
  EXPECT_TRUE(oracle::feasible(triangle, DemandVector{}, kUnit));
  EXPECT_FALSE(oracle::feasible(
      triangle, demands({{"v0", "1/2"}, {"v1", "1/3"}, {"v2", "1/4"}}), kUnit));
}

TEST(TClique, Examples) {
  const ConflictGraph triangle = generators::complete(3);
  EXPECT_EQ(oracle::t_clique(triangle, all_ones(triangle)), R("3"));
  const ConflictGraph c5 = generators::cycle(5);
  EXPECT_EQ(oracle::t_clique(c5, all_ones(c5)), R("2"));

  SplitMix64 rng(109);
  for (int trial = 0; trial < 30; ++trial) {
    const ConflictGraph g =
        generators::random_graph(1 + rng.below(7), Rational(1, 2), rng.next());
    const DemandVector tau = testutil::random_demands(g, rng);
    Rational brute(0);
    for (const auto& clique : testutil::brute_maximal_cliques(g)) {
      Rational sum;
      for (const auto& id : clique) sum += tau.get(id);
      brute = max(brute, sum);
    }
    EXPECT_EQ(oracle::t_clique(g, tau), brute);
    EXPECT_LE(brute, oracle::chi_f(g, tau).value);
  }
}

TEST(BetaRow, StarsAttainTheLeafCount) {
  EXPECT_EQ(oracle::beta_row(generators::star(1)).value, R("1"));
  // For two or more leaves the maximizer is unique: nothing at the center,
  // a full unit on every leaf.
  for (long d = 2; d <= 6; ++d) {
    const auto result = oracle::beta_row(generators::star(d));
    EXPECT_EQ(result.value, Rational(d));
    EXPECT_EQ(result.vertex, "v0");
    EXPECT_EQ(result.witness.get("v0"), R("0"));
    for (long i = 1; i <= d; ++i) {
      EXPECT_EQ(result.witness.get("v" + std::to_string(i)), R("1"));
    }
  }
}

TEST(BetaRow, CompleteGraphsAndPetersen) {
  for (std::size_t n = 2; n <= 5; ++n) {
    EXPECT_EQ(oracle::beta_row(generators::complete(n)).value, R("1"));
  }
  const ConflictGraph petersen = testutil::petersen();
  EXPECT_EQ(oracle::beta_row(petersen).value, R("3"));
  EXPECT_EQ(invariants::sigma(petersen).value, 3u);
}

TEST(BetaDegree, MaxDegreePlusOne) {
  EXPECT_EQ(oracle::beta_degree(generators::star(5)).value, R("6"));
  EXPECT_EQ(oracle::beta_degree(make_graph({"a"}, {})).value, R("1"));
  EXPECT_EQ(oracle::beta_degree(generators::cycle(5)).value, R("3"));
}

TEST(BetaMixed, K4MinusEIsEightFifths) {
  EXPECT_EQ(oracle::beta_mixed(generators::k4_minus_e()).value, R("8/5"));
}

TEST(BetaMixed, StarsAttainTheLowerBound) {
  for (long eta = 1; eta <= 6; ++eta) {
    EXPECT_EQ(oracle::beta_mixed(generators::star(eta)).value, Rational(1 + eta, 2));
  }
}

TEST(BetaMixed, CenterPlusCliquesFamilyFormula) {
  const auto expected = [](const std::vector<std::size_t>& sizes) {
    long total = 0;
    for (std::size_t s : sizes) total += static_cast<long>(s);
    const long eta = static_cast<long>(sizes.size());
    return Rational(eta * (1 + total), eta + total);
  };
  for (const auto& sizes : std::vector<std::vector<std::size_t>>{
           {4}, {1, 1, 1}, {3, 1}, {5, 2, 1}}) {
    const ConflictGraph g = generators::theorem3_family(sizes);
    EXPECT_EQ(oracle::beta_mixed(g).value, expected(sizes));
  }
  // (3,1) spelled out: 2*(1+4)/(2+4) = 5/3.
  EXPECT_EQ(oracle::beta_mixed(generators::theorem3_family({3, 1})).value, R("5/3"));
}

TEST(BetaRow2, StarsLoseExactlyOne) {
  for (long d = 2; d <= 6; ++d) {
    EXPECT_EQ(oracle::beta_row2(generators::star(d)).value, Rational(d - 1));
  }
  EXPECT_EQ(oracle::beta_row2(generators::cycle(4)).value, R("1"));
}

TEST(BetaRow2, RejectsExcludedClasses) {
  EXPECT_THROW(oracle::beta_row2(generators::cycle(5)), NotApplicableError);
  EXPECT_THROW(oracle::beta_row2(generators::complete(4)), NotApplicableError);
}

// The witness is a point of the polytope and reproduces the reported value
// when the condition is evaluated at the reported vertex.
TEST(Beta, WitnessesAreFeasibleAndTight) {
  SplitMix64 rng(113);
  for (int trial = 0; trial < 25; ++trial) {
    const ConflictGraph g =
        generators::random_graph(2 + rng.below(5), Rational(1, 2), rng.next());
    if (g.size() == 0) continue;

    const auto row = oracle::beta_row(g);
    EXPECT_TRUE(oracle::feasible(g, row.witness, kUnit));
    EXPECT_EQ(admission::check_row(g, row.witness, kUnit).rows.at(row.vertex).lhs,
              row.value);

    const auto degree = oracle::beta_degree(g);
    EXPECT_TRUE(oracle::feasible(g, degree.witness, kUnit));
    EXPECT_EQ(
        admission::check_degree(g, degree.witness, kUnit).rows.at(degree.vertex).lhs,
        degree.value);

    const auto mixed = oracle::beta_mixed(g);
    EXPECT_TRUE(oracle::feasible(g, mixed.witness, kUnit));
    EXPECT_EQ(
        admission::check_mixed(g, mixed.witness, kUnit).rows.at(mixed.vertex).lhs,
        mixed.value);

    try {
      const auto row2 = oracle::beta_row2(g);
      EXPECT_TRUE(oracle::feasible(g, row2.witness, kUnit));
      EXPECT_EQ(
          admission::check_row2(g, row2.witness, kUnit).rows.at(row2.vertex).lhs,
          row2.value);
    } catch (const NotApplicableError&) {
    }
  }
}

TEST(ImpEstimate, PerfectGraphsStayAtOne) {
  // Bipartite graphs and line graphs of bipartite networks are perfect.
  const ConflictGraph c4 = generators::cycle(4);
  EXPECT_EQ(oracle::imp_estimate(c4, 10, 5).ratio, R("1"));

  const NetworkGraph bip({"a", "b", "x", "y"},
                         {{"a", "x"}, {"a", "y"}, {"b", "x"}, {"b", "y"}});
  EXPECT_EQ(oracle::imp_estimate(generators::line_graph(bip), 10, 5).ratio, R("1"));
}

TEST(ImpEstimate, CycleFiveReachesFiveFourths) {
  const auto estimate = oracle::imp_estimate(generators::cycle(5), 10, 5);
  EXPECT_EQ(estimate.ratio, R("5/4"));
  // The witness reproduces the ratio.
  const ConflictGraph c5 = generators::cycle(5);
  EXPECT_EQ(oracle::chi_f(c5, estimate.witness).value /
                oracle::t_clique(c5, estimate.witness),
            R("5/4"));
}

TEST(ImpEstimate, LineGraphsStayWithinFiveFourths) {
  SplitMix64 rng(127);
  for (int trial = 0; trial < 10; ++trial) {
    const NetworkGraph n = testutil::random_network(3 + rng.below(4), 1, 2, rng);
    const ConflictGraph lg = generators::line_graph(n);
    if (lg.size() == 0) continue;
    EXPECT_LE(oracle::imp_estimate(lg, 5, rng.next()).ratio, R("5/4"));
  }
}

TEST(ScalingCheck, KnownBetasHold) {
  SplitMix64 rng(131);
  for (int trial = 0; trial < 15; ++trial) {
    const ConflictGraph g =
        generators::random_graph(2 + rng.below(5), Rational(1, 2), rng.next());
    if (g.size() == 0 || g.edge_count() == 0) continue;
    const Rational sigma(static_cast<long>(invariants::sigma(g).value));
    const Rational delta_plus(static_cast<long>(invariants::max_degree(g)) + 1);
    EXPECT_TRUE(oracle::scaling_check(g, oracle::ConditionKind::Row, sigma, 20, 7));
    EXPECT_TRUE(
        oracle::scaling_check(g, oracle::ConditionKind::Degree, delta_plus, 20, 7));
    EXPECT_TRUE(
        oracle::scaling_check(g, oracle::ConditionKind::Clique, Rational(1), 20, 7));
  }
}

TEST(ScalingCheck, SufficiencyDirectionOnLineGraphs) {
  SplitMix64 rng(137);
  const NetworkGraph n = testutil::random_network(5, 1, 2, rng);
  const ConflictGraph lg = generators::line_graph(n);
  if (lg.size() > 0) {
    EXPECT_TRUE(oracle::scaling_check(lg, oracle::ConditionKind::Clique, Rational(1),
                                      10, 11, admission::scale_line_graph()));
  }
}

TEST(Oracle, ResourceLimits) {
  EnumLimits tight;
  tight.max_vertices = 3;
  const ConflictGraph g = generators::cycle(5);
  EXPECT_THROW(oracle::chi_f(g, DemandVector{}, tight), ResourceLimitError);
  EXPECT_THROW(oracle::beta_row(g, tight), ResourceLimitError);
}

}  // namespace
}  // namespace linksched
