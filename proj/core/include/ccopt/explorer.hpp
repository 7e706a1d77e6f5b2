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

#ifndef CCOPT_EXPLORER_HPP_
#define CCOPT_EXPLORER_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "ccopt/problem.hpp"
#include "ccopt/rng.hpp"
#include "ccopt/vectors.hpp"
#include "ccopt/violation.hpp"

namespace ccopt {

/// Knobs of the two-layer explorer.
struct ExplorerConfig {
  std::size_t n_decisions = 100;      // candidates per iteration
  std::size_t n_disturbances = 1000;  // shared disturbance batch per iteration
  double alpha_margin = 0.005;        // discard when v_hat > alpha - alpha_margin
  std::size_t max_iterations = 50;
  std::uint64_t seed = kDefaultSeed;
  /// Candidate-evaluation threads; 0 means default_workers(). Never affects
  /// results.
  std::size_t workers = 1;

  /// Throws ConfigError naming the field when a knob is out of range for
  /// `problem` (e.g. "alpha_eps" when alpha_margin is not in (0, alpha)).
  void validate(const ChanceConstrainedProblem& problem) const;
};

/// A candidate that survived the filter.
struct FeasibleCandidate {
  std::size_t index = 0;  // position in the candidate list
  DecisionPoint point;
  ViolationEstimate estimate;
};

/// Candidates whose v_hat <= alpha - alpha_margin, all scored against the
/// same batch, in input order.
std::vector<FeasibleCandidate> filter_feasible(const ChanceConstrainedProblem& problem,
                                               std::span<const DecisionPoint> candidates,
                                               const DisturbanceBatch& batch,
                                               double alpha_margin, std::size_t workers = 1);

struct ScoredPoint {
  DecisionPoint point;
  double cost = 0.0;
  ViolationEstimate estimate;
};

struct IterationRecord {
  std::size_t iteration = 0;
  std::size_t n_feasible = 0;
  /// Lowest-cost survivor of this iteration (lowest index on ties).
  std::optional<ScoredPoint> best_candidate;
  /// Incumbent after this iteration; absent until the first acceptance.
  std::optional<ScoredPoint> incumbent;
  bool accepted = false;

  double incumbent_cost() const;  // +infinity while there is no incumbent
};

struct ExplorerTrace {
  std::vector<IterationRecord> records;
  /// Final incumbent with the estimate from its acceptance iteration. Absent
  /// when no candidate ever passed the filter.
  std::optional<ScoredPoint> final;
  std::size_t constraint_evaluations = 0;
  std::size_t cost_evaluations = 0;

  bool found() const noexcept { return final.has_value(); }
};

/// Two-layer randomized optimizer.
///
/// Each iteration draws n_decisions uniform candidates and one batch of
/// n_disturbances samples, discards candidates with v_hat > alpha -
/// alpha_margin, and replaces the incumbent by the cheapest survivor if that
/// is strictly cheaper. The incumbent starts empty (cost +inf), so the first
/// survivor is always accepted; an iteration without survivors keeps the
/// incumbent and moves on with fresh samples.
///
/// Streams are derived from (config.seed, trial, iteration), so the trace is
/// bit-identical for any `workers` value.
ExplorerTrace explore(const ChanceConstrainedProblem& problem, const ExplorerConfig& config,
                      std::uint64_t trial = 0);

/// CSV with columns iter,n_feasible,accepted,u_1..u_n,cost,v_hat describing
/// the incumbent after each iteration. Rows before the first acceptance have
/// empty u and v_hat fields and cost "inf".
void write_trace_csv(std::ostream& out, const ExplorerTrace& trace, std::size_t dimension);

}  // namespace ccopt

#endif  // CCOPT_EXPLORER_HPP_
