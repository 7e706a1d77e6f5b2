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

#include <cmath>
#include <limits>
#include <ostream>
#include <string>

#include "ccopt/errors.hpp"
#include "ccopt/parallel.hpp"
#include "ccopt/report.hpp"
#include "ccopt/sampling.hpp"

namespace ccopt {

void ExplorerConfig::validate(const ChanceConstrainedProblem& problem) const {
  if (n_decisions == 0) throw ConfigError("n_decisions", "must be at least 1");
  if (n_disturbances == 0) throw ConfigError("n_disturbances", "must be at least 1");
  if (!(alpha_margin > 0.0 && alpha_margin < problem.alpha())) {
    throw ConfigError("alpha_eps", "must lie in (0, alpha) = (0, " +
                                       format_short(problem.alpha()) + "), got " +
                                       format_short(alpha_margin));
  }
  if (max_iterations == 0) throw ConfigError("iterations", "must be at least 1");
  if (max_iterations > kMaxIterations) {
    throw ConfigError("iterations", "must not exceed " + std::to_string(kMaxIterations));
  }
}

double IterationRecord::incumbent_cost() const {
  return incumbent ? incumbent->cost : std::numeric_limits<double>::infinity();
}

std::vector<FeasibleCandidate> filter_feasible(const ChanceConstrainedProblem& problem,
                                               std::span<const DecisionPoint> candidates,
                                               const DisturbanceBatch& batch,
                                               double alpha_margin, std::size_t workers) {
  if (candidates.empty()) throw ConfigError("candidates", "candidate list is empty");
  if (batch.empty()) throw ConfigError("batch", "disturbance batch is empty");
  const double threshold = problem.alpha() - alpha_margin;

  std::vector<ViolationEstimate> estimates(candidates.size());
  parallel_for(candidates.size(), workers, [&](std::size_t i) {
    estimates[i] = estimate_violation(problem, candidates[i], batch);
  });

  std::vector<FeasibleCandidate> kept;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (estimates[i].v_hat > threshold) continue;
    kept.push_back({i, candidates[i], estimates[i]});
  }
  return kept;
}

ExplorerTrace explore(const ChanceConstrainedProblem& problem, const ExplorerConfig& config,
                      std::uint64_t trial) {
  config.validate(problem);

  ExplorerTrace trace;
  trace.records.reserve(config.max_iterations);
  std::optional<ScoredPoint> incumbent;

  for (std::size_t it = 0; it < config.max_iterations; ++it) {
    RngStream decision_stream =
        RngStream::derive(config.seed, {trial, it, StreamPurpose::kDecisions});
    RngStream disturbance_stream =
        RngStream::derive(config.seed, {trial, it, StreamPurpose::kDisturbances});
    const auto candidates =
        sample_decisions(problem.domain(), config.n_decisions, decision_stream);
    const auto batch =
        sample_disturbances(problem.disturbance(), config.n_disturbances, disturbance_stream);

    std::vector<FeasibleCandidate> feasible;
    std::vector<double> costs;
    try {
      feasible = filter_feasible(problem, candidates, batch, config.alpha_margin, config.workers);
      costs.resize(feasible.size());
      parallel_for(feasible.size(), config.workers, [&](std::size_t k) {
        costs[k] = evaluate_cost(problem, feasible[k].point);
      });
    } catch (const EvaluationError& e) {
      throw EvaluationError("iteration " + std::to_string(it) + ": " + e.what());
    }
    trace.constraint_evaluations += candidates.size() * batch.size();
    trace.cost_evaluations += feasible.size();

    IterationRecord record;
    record.iteration = it;
    record.n_feasible = feasible.size();
    if (!feasible.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < feasible.size(); ++k) {
        if (costs[k] < costs[best]) best = k;
      }
      record.best_candidate = ScoredPoint{feasible[best].point, costs[best], feasible[best].estimate};
      const double incumbent_cost =
          incumbent ? incumbent->cost : std::numeric_limits<double>::infinity();
      if (costs[best] < incumbent_cost) {
        incumbent = record.best_candidate;
        record.accepted = true;
      }
    }
    record.incumbent = incumbent;
    trace.records.push_back(std::move(record));
  }
  trace.final = incumbent;
  return trace;
}

void write_trace_csv(std::ostream& out, const ExplorerTrace& trace, std::size_t dimension) {
  out << "iter,n_feasible,accepted";
  for (std::size_t i = 1; i <= dimension; ++i) out << ",u_" << i;
  out << ",cost,v_hat\n";
  for (const auto& r : trace.records) {
    out << r.iteration << ',' << r.n_feasible << ',' << (r.accepted ? 1 : 0);
    if (r.incumbent) {
      for (double x : r.incumbent->point.coords()) out << ',' << format_real(x);
      out << ',' << format_real(r.incumbent->cost) << ','
          << format_real(r.incumbent->estimate.v_hat) << '\n';
    } else {
      for (std::size_t i = 0; i < dimension; ++i) out << ',';
      out << ",inf,\n";
    }
  }
}

}  // namespace ccopt
