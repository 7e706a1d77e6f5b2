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

#include "ccopt/random_search.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "ccopt/errors.hpp"

namespace ccopt {
namespace {

double square(std::span<const double> v) { return v[0] * v[0]; }

TEST(RandomOptimizeTest, QuadraticConvergesInAlmostAllRuns) {
  const auto domain = BoxDomain::cube(1, -1.0, 1.0);
  int close = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    SearchConfig config;
    config.neighborhood.epsilon = 0.1;
    config.max_iterations = 500;
    config.seed = seed;
    const auto r = random_optimize(square, domain, config);
    close += std::abs(r.best[0]) < 0.05;
  }
  EXPECT_GE(close, 95);
}

TEST(RandomOptimizeTest, ConstantCostNeverMoves) {
  const auto domain = BoxDomain::cube(2, -1.0, 1.0);
  SearchConfig config;
  config.max_iterations = 200;
  const auto r = random_optimize([](std::span<const double>) { return 7.0; }, domain, config);
  EXPECT_EQ(r.accepted, 0u);
  // Same point as the initialization stream produces.
  RngStream init = RngStream::derive(config.seed, {0, 0, StreamPurpose::kInit});
  const double x0 = init.uniform(-1.0, 1.0);
  const double x1 = init.uniform(-1.0, 1.0);
  EXPECT_EQ(r.best, (DecisionPoint{x0, x1}));
  for (double c : r.cost_history) EXPECT_EQ(c, 7.0);
}

TEST(RandomOptimizeTest, SingleIteration) {
  SearchConfig config;
  config.max_iterations = 1;
  const auto r = random_optimize(square, BoxDomain::cube(1, -1.0, 1.0), config);
  EXPECT_EQ(r.cost_history.size(), 2u);
  EXPECT_EQ(r.cost_evaluations + r.skipped_iterations, 2u);
}

TEST(RandomOptimizeTest, HistoryIsNonIncreasingAndIncumbentInDomain) {
  const auto domain = BoxDomain({-3.0, 0.0}, {2.0, 0.5});
  const CostFunction rastrigin = [](std::span<const double> v) {
    double s = 20.0;
    for (double x : v) s += x * x - 10.0 * std::cos(2 * 3.141592653589793 * x);
    return s;
  };
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    for (auto dist : {NeighborhoodSpec::Distribution::kUniformBall,
                      NeighborhoodSpec::Distribution::kNormalIsotropic}) {
      SearchConfig config;
      config.neighborhood = {0.5, dist};
      config.max_iterations = 300;
      config.seed = seed;
      const auto r = random_optimize(rastrigin, domain, config);
      ASSERT_EQ(r.cost_history.size(), 301u);
      std::size_t strict_drops = 0;
      for (std::size_t i = 1; i < r.cost_history.size(); ++i) {
        ASSERT_LE(r.cost_history[i], r.cost_history[i - 1]);
        strict_drops += r.cost_history[i] < r.cost_history[i - 1];
      }
      EXPECT_EQ(strict_drops, r.accepted);
      EXPECT_TRUE(domain.contains(r.best.coords()));
      EXPECT_EQ(rastrigin(r.best.coords()), r.cost_history.back());
    }
  }
}

TEST(RandomOptimizeTest, DeterministicGivenSeed) {
  SearchConfig config;
  config.seed = 42;
  const auto a = random_optimize(square, BoxDomain::cube(1, -1.0, 1.0), config);
  const auto b = random_optimize(square, BoxDomain::cube(1, -1.0, 1.0), config);
  EXPECT_EQ(a.best, b.best);
  EXPECT_EQ(a.cost_history, b.cost_history);
}

TEST(RandomOptimizeTest, NeighborhoodLargerThanDomainSkipsWhenRetriesRunOut) {
  // A ball of radius 100 around a point in [0, 1e-6]^3 almost never lands in
  // the box, so every iteration is skipped and nothing is thrown.
  SearchConfig config;
  config.neighborhood.epsilon = 1e4;
  config.max_iterations = 20;
  const auto r = random_optimize(square, BoxDomain::cube(3, 0.0, 1e-6), config);
  EXPECT_EQ(r.skipped_iterations, 20u);
  EXPECT_EQ(r.cost_history.size(), 21u);
}

TEST(RandomOptimizeTest, ValidatesConfig) {
  SearchConfig config;
  config.neighborhood.epsilon = 0.0;
  EXPECT_THROW(random_optimize(square, BoxDomain::cube(1, 0, 1), config), ConfigError);
  config.neighborhood.epsilon = 0.1;
  config.max_iterations = 0;
  EXPECT_THROW(random_optimize(square, BoxDomain::cube(1, 0, 1), config), ConfigError);
}

TEST(RandomOptimizeTest, NonFiniteCostIsAnError) {
  SearchConfig config;
  EXPECT_THROW(random_optimize([](std::span<const double>) { return std::nan(""); },
                               BoxDomain::cube(1, 0, 1), config),
               EvaluationError);
}

}  // namespace
}  // namespace ccopt
