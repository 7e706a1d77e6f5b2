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

#include "ccopt/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ccopt/errors.hpp"
#include "ccopt/parallel.hpp"
#include "ccopt/sampling.hpp"

namespace ccopt {

std::uint64_t scenario_bound(double alpha, double beta, std::size_t n_u) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("alpha", "must lie in (0, 1)");
  if (!(beta > 0.0 && beta < 1.0)) throw ConfigError("beta", "must lie in (0, 1)");
  if (n_u == 0) throw ConfigError("nu", "must be at least 1");
  const long double a = alpha;
  const long double b = beta;
  const long double n = static_cast<long double>(n_u);
  const long double rhs =
      2.0L / a * std::log(1.0L / b) + 2.0L * n + 2.0L * n / a * std::log(2.0L / a);
  return static_cast<std::uint64_t>(std::ceil(rhs));
}

void ScenarioConfig::validate() const {
  if (n_scenarios == 0) throw ConfigError("n_scenarios", "must be at least 1");
  if (search_points == 0) throw ConfigError("search_points", "must be at least 1");
}

namespace {

struct PointCheck {
  bool feasible = false;
  std::size_t evaluations = 0;
};

PointCheck check_point(const ChanceConstrainedProblem& problem,
                       const DisturbanceBatch& scenarios, std::span<const double> u) {
  PointCheck check;
  for (std::size_t s = 0; s < scenarios.size(); ++s) {
    ++check.evaluations;
    if (evaluate_constraint(problem, u, scenarios[s]) > 0.0) return check;
  }
  check.feasible = true;
  return check;
}

}  // namespace

ScenarioResult minimize_over_scenarios(const ChanceConstrainedProblem& problem,
                                       const DisturbanceBatch& scenarios,
                                       std::span<const DecisionPoint> search_points,
                                       std::size_t workers) {
  if (search_points.empty()) throw ConfigError("search_points", "must be at least 1");
  if (workers == 0) workers = default_workers();

  ScenarioResult result;
  result.n_scenarios = scenarios.size();
  result.search_points = search_points.size();

  std::vector<double> costs(search_points.size());
  parallel_for(search_points.size(), workers, [&](std::size_t i) {
    costs[i] = evaluate_cost(problem, search_points[i]);
  });

  // Visiting points by ascending (cost, index) and stopping at the first one
  // that satisfies every scenario yields the constrained argmin with the
  // lowest-index tie-break.
  std::vector<std::size_t> order(search_points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return costs[a] < costs[b]; });

  const std::size_t block = 64 * workers;
  std::vector<PointCheck> checks;
  for (std::size_t begin = 0; begin < order.size(); begin += block) {
    const std::size_t len = std::min(block, order.size() - begin);
    checks.assign(len, PointCheck{});
    parallel_for(len, workers, [&](std::size_t k) {
      checks[k] = check_point(problem, scenarios, search_points[order[begin + k]].coords());
    });
    for (std::size_t k = 0; k < len; ++k) {
      ++result.points_checked;
      result.constraint_evaluations += checks[k].evaluations;
      if (checks[k].feasible) {
        const std::size_t idx = order[begin + k];
        result.point = search_points[idx];
        result.cost = costs[idx];
        return result;
      }
    }
  }
  return result;
}

ScenarioResult solve_scenario(const ChanceConstrainedProblem& problem,
                              const ScenarioConfig& config, std::uint64_t trial) {
  config.validate();
  RngStream scenario_stream =
      RngStream::derive(config.seed, {trial, 0, StreamPurpose::kScenarios});
  RngStream search_stream =
      RngStream::derive(config.seed, {trial, 0, StreamPurpose::kSearchPoints});
  const auto scenarios =
      sample_disturbances(problem.disturbance(), config.n_scenarios, scenario_stream);
  const auto points = sample_decisions(problem.domain(), config.search_points, search_stream);
  return minimize_over_scenarios(problem, scenarios, points, config.workers);
}

}  // namespace ccopt
