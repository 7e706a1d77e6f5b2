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

#ifndef CCOPT_VIOLATION_HPP_
#define CCOPT_VIOLATION_HPP_

#include <cstddef>
#include <span>

#include "ccopt/problem.hpp"
#include "ccopt/rng.hpp"
#include "ccopt/vectors.hpp"

namespace ccopt {

/// Empirical violation probability of one decision over a disturbance batch.
struct ViolationEstimate {
  std::size_t violations = 0;
  std::size_t sample_count = 0;
  double v_hat = 0.0;
  /// Binomial standard error sqrt(v_hat (1 - v_hat) / sample_count).
  double std_error = 0.0;

  /// Throws ConfigError if sample_count is zero or violations exceeds it.
  static ViolationEstimate from_counts(std::size_t violations, std::size_t sample_count);

  bool operator==(const ViolationEstimate&) const = default;
};

/// 1 if h(u, delta) > 0, else 0. A constraint value of exactly zero counts as
/// satisfied.
int indicator(const ChanceConstrainedProblem& problem, std::span<const double> u,
              std::span<const double> delta);
inline int indicator(const ChanceConstrainedProblem& problem, const DecisionPoint& u,
                     const DisturbanceSample& delta) {
  return indicator(problem, u.coords(), delta.coords());
}

/// Mean of the indicator over every sample of `batch`. Never short-circuits:
/// exactly batch.size() constraint evaluations are made.
ViolationEstimate estimate_violation(const ChanceConstrainedProblem& problem,
                                     std::span<const double> u, const DisturbanceBatch& batch);
inline ViolationEstimate estimate_violation(const ChanceConstrainedProblem& problem,
                                            const DecisionPoint& u,
                                            const DisturbanceBatch& batch) {
  return estimate_violation(problem, u.coords(), batch);
}

/// Smallest sample count accepted by oracle_violation.
inline constexpr std::size_t kOracleMinSamples = 100000;
inline constexpr std::size_t kDefaultOracleSamples = 1000000;

/// High-accuracy evaluation estimate over `n` fresh draws from `stream`.
/// Samples are streamed rather than stored; the result equals
/// estimate_violation over sample_disturbances(model, n, stream).
ViolationEstimate oracle_violation(const ChanceConstrainedProblem& problem,
                                   std::span<const double> u, std::size_t n, RngStream stream);
inline ViolationEstimate oracle_violation(const ChanceConstrainedProblem& problem,
                                          const DecisionPoint& u, std::size_t n,
                                          RngStream stream) {
  return oracle_violation(problem, u.coords(), n, std::move(stream));
}

}  // namespace ccopt

#endif  // CCOPT_VIOLATION_HPP_
