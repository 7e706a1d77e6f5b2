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

#include "ccopt/study.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ccopt/errors.hpp"
#include "ccopt/parallel.hpp"

namespace ccopt {

std::string_view to_string(Method method) {
  return method == Method::kTwoLayer ? "two-layer" : "scenario";
}

Method parse_method(std::string_view name) {
  if (name == "two-layer") return Method::kTwoLayer;
  if (name == "scenario") return Method::kScenario;
  throw ConfigError("method", "expected 'two-layer' or 'scenario', got '" + std::string(name) + "'");
}

void StudyConfig::validate(const ChanceConstrainedProblem& problem) const {
  if (trials == 0) throw ConfigError("trials", "must be at least 1");
  if (trials > kMaxTrials) throw ConfigError("trials", "too many trials");
  if (oracle_n < kOracleMinSamples) {
    throw ConfigError("oracle_n", "must be at least " + std::to_string(kOracleMinSamples));
  }
  if (method == Method::kTwoLayer) {
    explorer.validate(problem);
  } else {
    scenario.validate();
  }
}

std::string StudyConfig::label() const {
  if (method == Method::kTwoLayer) {
    return "two-layer N_delta=" + std::to_string(explorer.n_disturbances);
  }
  return "scenario N=" + std::to_string(scenario.n_scenarios);
}

StudyAggregates compute_aggregates(std::span<const TrialRow> rows, double alpha) {
  StudyAggregates agg;
  agg.trials = rows.size();
  double sum_cost = 0.0;
  double sum_violation = 0.0;
  std::size_t within = 0;
  agg.min_cost = std::numeric_limits<double>::infinity();
  agg.max_cost = -std::numeric_limits<double>::infinity();
  for (const auto& row : rows) {
    if (row.failed) continue;
    ++agg.succeeded;
    sum_cost += row.cost;
    sum_violation += row.oracle.v_hat;
    agg.min_cost = std::min(agg.min_cost, row.cost);
    agg.max_cost = std::max(agg.max_cost, row.cost);
    if (row.oracle.v_hat <= alpha) ++within;
  }
  if (agg.succeeded == 0) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    agg.mean_cost = agg.min_cost = agg.max_cost = agg.stddev_cost = nan;
    agg.mean_oracle_violation = nan;
    agg.fraction_within_alpha = 0.0;
    return agg;
  }
  const double n = static_cast<double>(agg.succeeded);
  agg.mean_cost = sum_cost / n;
  agg.mean_oracle_violation = sum_violation / n;
  double sq = 0.0;
  for (const auto& row : rows) {
    if (row.failed) continue;
    const double d = row.cost - agg.mean_cost;
    sq += d * d;
  }
  agg.stddev_cost = agg.succeeded > 1 ? std::sqrt(sq / (n - 1.0)) : 0.0;
  agg.fraction_within_alpha =
      rows.empty() ? 0.0 : static_cast<double>(within) / static_cast<double>(rows.size());
  return agg;
}

namespace {

void mark_failed(TrialRow& row, std::string reason) {
  row.failed = true;
  row.failure = std::move(reason);
  row.point = DecisionPoint();
  row.cost = std::numeric_limits<double>::quiet_NaN();
  row.oracle = ViolationEstimate{};
}

}  // namespace

StudyResult run_study(const ChanceConstrainedProblem& problem, const StudyConfig& config) {
  config.validate(problem);

  StudyResult result;
  result.label = config.label();
  result.method = config.method;
  result.alpha = problem.alpha();
  result.dimension = problem.decision_dimension();
  result.oracle_n = config.oracle_n;
  result.rows.resize(config.trials);
  if (config.keep_traces && config.method == Method::kTwoLayer) {
    result.traces.resize(config.trials);
  }

  ExplorerConfig explorer = config.explorer;
  explorer.seed = config.root_seed;
  explorer.workers = 1;
  ScenarioConfig scenario = config.scenario;
  scenario.seed = config.root_seed;
  scenario.workers = 1;

  parallel_for(config.trials, config.workers, [&](std::size_t t) {
    TrialRow& row = result.rows[t];
    row.trial = t;
    try {
      if (config.method == Method::kTwoLayer) {
        ExplorerTrace trace = explore(problem, explorer, t);
        if (trace.final) {
          row.point = trace.final->point;
          row.cost = trace.final->cost;
        } else {
          mark_failed(row, "no candidate passed the violation filter");
        }
        if (!result.traces.empty()) result.traces[t] = std::move(trace);
      } else {
        ScenarioResult solved = solve_scenario(problem, scenario, t);
        if (solved.point) {
          row.point = *solved.point;
          row.cost = solved.cost;
        } else {
          mark_failed(row, "no search point satisfies every scenario");
        }
      }
      if (!row.failed) {
        row.oracle = oracle_violation(
            problem, row.point, config.oracle_n,
            RngStream::derive(config.root_seed, {t, 0, StreamPurpose::kOracle}));
      }
    } catch (const std::exception& e) {
      mark_failed(row, e.what());
    }
  });

  result.aggregates = compute_aggregates(result.rows, result.alpha);
  return result;
}

}  // namespace ccopt
