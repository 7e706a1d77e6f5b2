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

#ifndef CCOPT_SCENARIO_HPP_
#define CCOPT_SCENARIO_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ccopt/problem.hpp"
#include "ccopt/rng.hpp"
#include "ccopt/vectors.hpp"

namespace ccopt {

/// Smallest scenario count N with
///   N >= (2/alpha) ln(1/beta) + 2 n_u + (2 n_u/alpha) ln(2/alpha),
/// i.e. the ceiling of the right-hand side. Throws ConfigError for alpha or
/// beta outside (0, 1) or n_u == 0.
std::uint64_t scenario_bound(double alpha, double beta, std::size_t n_u);

struct ScenarioConfig {
  std::size_t n_scenarios = 100;
  std::size_t search_points = 100000;
  std::uint64_t seed = kDefaultSeed;
  std::size_t workers = 1;

  void validate() const;
};

struct ScenarioResult {
  /// Cheapest search point satisfying every scenario; absent on failure.
  std::optional<DecisionPoint> point;
  double cost = 0.0;
  std::size_t n_scenarios = 0;
  std::size_t search_points = 0;
  /// Search points whose scenario constraints were examined, cheapest first,
  /// before the minimizer was found (all of them on failure).
  std::size_t points_checked = 0;
  /// Constraint evaluations spent; checks stop at the first violated scenario.
  std::size_t constraint_evaluations = 0;

  bool found() const noexcept { return point.has_value(); }
};

/// Minimizes the cost over `search_points` subject to h(u, s) <= 0 for every
/// scenario s. An empty scenario set gives the unconstrained sampled minimum.
/// Ties are broken by the lower search-point index.
ScenarioResult minimize_over_scenarios(const ChanceConstrainedProblem& problem,
                                       const DisturbanceBatch& scenarios,
                                       std::span<const DecisionPoint> search_points,
                                       std::size_t workers = 1);

/// Scenario program solved by sampled search: draws n_scenarios disturbances
/// and search_points uniform decisions from streams derived from
/// (config.seed, trial), then calls minimize_over_scenarios. Scenario and
/// search streams are independent of each other, so for a fixed seed a larger
/// n_scenarios extends the scenario set and keeps the search points.
ScenarioResult solve_scenario(const ChanceConstrainedProblem& problem,
                              const ScenarioConfig& config, std::uint64_t trial = 0);

}  // namespace ccopt

#endif  // CCOPT_SCENARIO_HPP_
