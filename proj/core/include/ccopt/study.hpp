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

#ifndef CCOPT_STUDY_HPP_
#define CCOPT_STUDY_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ccopt/explorer.hpp"
#include "ccopt/problem.hpp"
#include "ccopt/scenario.hpp"
#include "ccopt/vectors.hpp"
#include "ccopt/violation.hpp"

namespace ccopt {

enum class Method { kTwoLayer, kScenario };

std::string_view to_string(Method method);
/// Accepts "two-layer" and "scenario"; throws ConfigError("method", ...).
Method parse_method(std::string_view name);

struct StudyConfig {
  std::size_t trials = 500;
  Method method = Method::kTwoLayer;
  /// Only the knobs of the selected method are used. Their seed and workers
  /// fields are ignored; the study supplies both.
  ExplorerConfig explorer;
  ScenarioConfig scenario;
  std::size_t oracle_n = kDefaultOracleSamples;
  std::uint64_t root_seed = kDefaultSeed;
  /// Trial-level threads; 0 means default_workers(). Never affects results.
  std::size_t workers = 0;
  /// Keep every trial's ExplorerTrace (two-layer only).
  bool keep_traces = false;

  void validate(const ChanceConstrainedProblem& problem) const;
  /// Short series name such as "two-layer N_delta=1000" or "scenario N=100".
  std::string label() const;
};

struct TrialRow {
  std::size_t trial = 0;
  bool failed = false;
  std::string failure;  // empty unless failed
  DecisionPoint point;  // empty when failed
  double cost = 0.0;
  ViolationEstimate oracle;
};

struct StudyAggregates {
  std::size_t trials = 0;
  std::size_t succeeded = 0;
  // Over succeeded rows; NaN when there are none.
  double mean_cost = 0.0;
  double min_cost = 0.0;
  double max_cost = 0.0;
  double stddev_cost = 0.0;  // sample standard deviation, 0 for one row
  double mean_oracle_violation = 0.0;
  /// Succeeded rows with oracle v_hat <= alpha, divided by all rows.
  double fraction_within_alpha = 0.0;
};

/// Aggregates recomputed from any subset of rows, summed in row order.
StudyAggregates compute_aggregates(std::span<const TrialRow> rows, double alpha);

struct StudyResult {
  std::string label;
  Method method = Method::kTwoLayer;
  double alpha = 0.0;
  std::size_t dimension = 0;
  std::size_t oracle_n = 0;
  std::vector<TrialRow> rows;  // ordered by trial id
  StudyAggregates aggregates;
  std::vector<ExplorerTrace> traces;  // filled when keep_traces
};

/// Runs config.trials independent trials of the selected method and scores
/// each final point with oracle_violation on its own oracle stream. A trial
/// that finds no feasible point, or whose evaluation throws, becomes a failed
/// row; the study itself keeps going. Deterministic for a fixed root seed and
/// any worker count.
StudyResult run_study(const ChanceConstrainedProblem& problem, const StudyConfig& config);

}  // namespace ccopt

#endif  // CCOPT_STUDY_HPP_
