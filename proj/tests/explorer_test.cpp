// Copyright 2026 The ccopt Authors
//
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

#include "ccopt/explorer.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <algorithm>
#include <sstream>

#include "ccopt/errors.hpp"
#include "ccopt/sampling.hpp"
#include "test_problems.hpp"

namespace ccopt {
namespace {

// d_k = (k + 0.5) / 1000: exactly 1000 (1 - u) samples exceed u when u is a
// multiple of 0.001.
DisturbanceBatch regular_batch() {
  DisturbanceBatch batch;
  for (int k = 0; k < 1000; ++k) batch.push_back(std::vector<double>{(k + 0.5) / 1000.0});
  return batch;
}

TEST(FilterFeasibleTest, ThresholdIsAlphaMinusMargin) {
  const auto p = testing::threshold_problem(0.05);
  const std::vector<DecisionPoint> candidates{DecisionPoint{0.956}, DecisionPoint{0.954},
                                              DecisionPoint{0.955}};
  const auto kept = filter_feasible(p, candidates, regular_batch(), 0.005);
  ASSERT_EQ(kept.size(), 2u);
  EXPECT_EQ(kept[0].index, 0u);
  EXPECT_DOUBLE_EQ(kept[0].estimate.v_hat, 0.044);
  // v_hat == alpha - alpha_eps is kept.
  EXPECT_EQ(kept[1].index, 2u);
  EXPECT_EQ(kept[1].estimate.violations, 45u);
}

TEST(FilterFeasibleTest, AlwaysViolatedGivesEmptySet) {
  const auto p = testing::constant_constraint_problem(1.0);
  const std::vector<DecisionPoint> candidates{DecisionPoint{0.0, 0.0}, DecisionPoint{0.5, 0.5}};
  RngStream s(1, 1);
  EXPECT_TRUE(filter_feasible(p, candidates, sample_disturbances(p.disturbance(), 10, s), 0.01)
                  .empty());
}

TEST(FilterFeasibleTest, RejectsEmptyInputs) {
  const auto p = make_benchmark();
  RngStream s(1, 1);
  const auto batch = sample_disturbances(p.disturbance(), 10, s);
  EXPECT_THROW(filter_feasible(p, {}, batch, 0.005), ConfigError);
  const std::vector<DecisionPoint> one{DecisionPoint{0.0, 0.0}};
  EXPECT_THROW(filter_feasible(p, one, DisturbanceBatch{}, 0.005), ConfigError);
}

TEST(FilterFeasibleTest, OutputIsOrderedSubsetBelowThreshold) {
  const auto p = make_benchmark();
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    RngStream ds(seed, 1), bs(seed, 2);
    const auto candidates = sample_decisions(p.domain(), 60, ds);
    const auto batch = sample_disturbances(p.disturbance(), 200, bs);
    const auto kept = filter_feasible(p, candidates, batch, 0.005, 3);
    std::size_t expected = 0;
    for (const auto& c : candidates) {
      expected += estimate_violation(p, c, batch).v_hat <= p.alpha() - 0.005;
    }
    ASSERT_EQ(kept.size(), expected);
    for (std::size_t k = 0; k < kept.size(); ++k) {
      EXPECT_LE(kept[k].estimate.v_hat, p.alpha() - 0.005);
      EXPECT_EQ(kept[k].point, candidates[kept[k].index]);
      EXPECT_EQ(kept[k].estimate, estimate_violation(p, kept[k].point, batch));
      if (k > 0) EXPECT_LT(kept[k - 1].index, kept[k].index);
    }
  }
}

ExplorerConfig small_config(std::uint64_t seed) {
  ExplorerConfig c;
  c.n_decisions = 40;
  c.n_disturbances = 200;
  c.max_iterations = 25;
  c.seed = seed;
  return c;
}

void expect_trace_invariants(const ChanceConstrainedProblem& p, const ExplorerConfig& c,
                             const ExplorerTrace& trace) {
  ASSERT_EQ(trace.records.size(), c.max_iterations);
  double previous = std::numeric_limits<double>::infinity();
  for (const auto& r : trace.records) {
    const double cost = r.incumbent_cost();
    EXPECT_LE(cost, previous);
    if (r.accepted) {
      ASSERT_TRUE(r.best_candidate.has_value());
      EXPECT_LT(r.best_candidate->cost, previous);
      EXPECT_LE(r.incumbent->estimate.v_hat, p.alpha() - c.alpha_margin);
      EXPECT_EQ(r.incumbent->point, r.best_candidate->point);
    } else {
      EXPECT_EQ(cost, previous);
    }
    if (r.n_feasible == 0) {
      EXPECT_FALSE(r.best_candidate.has_value());
      EXPECT_FALSE(r.accepted);
    }
    previous = cost;
  }
  if (trace.final) {
    EXPECT_LE(trace.final->estimate.v_hat, p.alpha() - c.alpha_margin);
    EXPECT_EQ(trace.final->cost, trace.records.back().incumbent_cost());
    EXPECT_TRUE(p.domain().contains(trace.final->point.coords()));
  }
}

TEST(ExploreTest, MonotoneIncumbentAndFeasibilityStampOnBenchmark) {
  const auto p = make_benchmark();
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto c = small_config(seed);
    const auto trace = explore(p, c);
    expect_trace_invariants(p, c, trace);
    EXPECT_TRUE(trace.found());
  }
}

TEST(ExploreTest, NeverViolatedReducesToRandomSearch) {
  const auto p = testing::constant_constraint_problem(-1.0);
  const auto c = small_config(3);
  const auto trace = explore(p, c);
  expect_trace_invariants(p, c, trace);
  for (const auto& r : trace.records) EXPECT_EQ(r.n_feasible, c.n_decisions);
  // The final point is the cheapest of every candidate drawn.
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t it = 0; it < c.max_iterations; ++it) {
    RngStream s = RngStream::derive(c.seed, {0, it, StreamPurpose::kDecisions});
    for (const auto& u : sample_decisions(p.domain(), c.n_decisions, s)) {
      best = std::min(best, evaluate_cost(p, u));
    }
  }
  ASSERT_TRUE(trace.found());
  EXPECT_EQ(trace.final->cost, best);
}

TEST(ExploreTest, AlwaysViolatedReportsFailure) {
  const auto p = testing::constant_constraint_problem(1.0);
  const auto c = small_config(4);
  const auto trace = explore(p, c);
  EXPECT_FALSE(trace.found());
  for (const auto& r : trace.records) {
    EXPECT_EQ(r.n_feasible, 0u);
    EXPECT_FALSE(r.incumbent.has_value());
    EXPECT_TRUE(std::isinf(r.incumbent_cost()));
  }
}

TEST(ExploreTest, BitIdenticalAcrossWorkerCounts) {
  const auto p = make_benchmark();
  auto c = small_config(11);
  c.workers = 1;
  const auto a = explore(p, c, 5);
  c.workers = 8;
  const auto b = explore(p, c, 5);
  std::ostringstream sa, sb;
  write_trace_csv(sa, a, 2);
  write_trace_csv(sb, b, 2);
  EXPECT_EQ(sa.str(), sb.str());
  ASSERT_TRUE(a.found() && b.found());
  EXPECT_EQ(a.final->point, b.final->point);
}

TEST(ExploreTest, TrialIndexSelectsIndependentStreams) {
  const auto p = make_benchmark();
  const auto c = small_config(11);
  EXPECT_NE(explore(p, c, 0).final->point, explore(p, c, 1).final->point);
}

TEST(ExploreTest, BudgetAccounting) {
  const auto p = make_benchmark();
  const auto c = small_config(12);
  const auto trace = explore(p, c);
  EXPECT_EQ(trace.constraint_evaluations, c.max_iterations * c.n_decisions * c.n_disturbances);
  std::size_t survivors = 0;
  for (const auto& r : trace.records) survivors += r.n_feasible;
  EXPECT_EQ(trace.cost_evaluations, survivors);
}

TEST(ExploreTest, ValidatesConfig) {
  const auto p = make_benchmark();
  auto expect_field = [&](ExplorerConfig c, const std::string& field) {
    try {
      explore(p, c);
      FAIL() << "expected ConfigError for " << field;
    } catch (const ConfigError& e) {
      EXPECT_EQ(e.field(), field);
    }
  };
  auto c = small_config(0);
  c.alpha_margin = 0.06;
  expect_field(c, "alpha_eps");
  c.alpha_margin = 0.05;
  expect_field(c, "alpha_eps");
  c.alpha_margin = 0.0;
  expect_field(c, "alpha_eps");
  c = small_config(0);
  c.n_decisions = 0;
  expect_field(c, "n_decisions");
  c = small_config(0);
  c.n_disturbances = 0;
  expect_field(c, "n_disturbances");
  c = small_config(0);
  c.max_iterations = 0;
  expect_field(c, "iterations");
}

TEST(ExploreTest, EvaluationErrorsCarryIterationContext) {
  ChanceConstrainedProblem p(
      "bad", BoxDomain::cube(1, 0, 1), [](std::span<const double>) { return 0.0; },
      [](std::span<const double> u, std::span<const double>) {
        return u[0] > 0.5 ? std::nan("") : -1.0;
      },
      DisturbanceModel::standard_normal(1), 0.1);
  ExplorerConfig c;
  c.n_decisions = 10;
  c.n_disturbances = 5;
  c.alpha_margin = 0.01;
  try {
    explore(p, c);
    FAIL() << "expected EvaluationError";
  } catch (const EvaluationError& e) {
    EXPECT_NE(std::string(e.what()).find("iteration 0"), std::string::npos) << e.what();
  }
}

TEST(TraceCsvTest, Format) {
  const auto p = testing::constant_constraint_problem(1.0);
  ExplorerConfig c = small_config(0);
  c.max_iterations = 2;
  std::ostringstream out;
  write_trace_csv(out, explore(p, c), 2);
  EXPECT_EQ(out.str(), "iter,n_feasible,accepted,u_1,u_2,cost,v_hat\n0,0,0,,,inf,\n1,0,0,,,inf,\n");

  const auto q = testing::constant_constraint_problem(-1.0);
  std::ostringstream ok;
  write_trace_csv(ok, explore(q, c), 2);
  std::istringstream lines(ok.str());
  std::string header, first;
  std::getline(lines, header);
  std::getline(lines, first);
  EXPECT_EQ(first.rfind("0,40,1,", 0), 0u) << first;
  EXPECT_EQ(std::count(first.begin(), first.end(), ','), 6);
}

}  // namespace
}  // namespace ccopt
