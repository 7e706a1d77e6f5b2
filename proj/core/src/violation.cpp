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

#include "ccopt/violation.hpp"

#include <cmath>
#include <vector>

#include "ccopt/errors.hpp"
#include "ccopt/sampling.hpp"

namespace ccopt {

ViolationEstimate ViolationEstimate::from_counts(std::size_t violations,
                                                 std::size_t sample_count) {
  if (sample_count == 0) throw ConfigError("sample_count", "must be at least 1");
  if (violations > sample_count) {
    throw ConfigError("violations", "exceeds sample_count");
  }
  ViolationEstimate e;
  e.violations = violations;
  e.sample_count = sample_count;
  e.v_hat = static_cast<double>(violations) / static_cast<double>(sample_count);
  e.std_error = std::sqrt(e.v_hat * (1.0 - e.v_hat) / static_cast<double>(sample_count));
  return e;
}

int indicator(const ChanceConstrainedProblem& problem, std::span<const double> u,
              std::span<const double> delta) {
  return evaluate_constraint(problem, u, delta) > 0.0 ? 1 : 0;
}

ViolationEstimate estimate_violation(const ChanceConstrainedProblem& problem,
                                     std::span<const double> u, const DisturbanceBatch& batch) {
  if (batch.empty()) throw ConfigError("batch", "disturbance batch is empty");
  std::size_t violations = 0;
  for (std::size_t k = 0; k < batch.size(); ++k) {
    violations += static_cast<std::size_t>(indicator(problem, u, batch[k]));
  }
  return ViolationEstimate::from_counts(violations, batch.size());
}

ViolationEstimate oracle_violation(const ChanceConstrainedProblem& problem,
                                   std::span<const double> u, std::size_t n, RngStream stream) {
  if (n < kOracleMinSamples) {
    throw ConfigError("oracle_n", "must be at least " + std::to_string(kOracleMinSamples));
  }
  std::vector<double> sample(problem.disturbance_dimension());
  std::size_t violations = 0;
  for (std::size_t k = 0; k < n; ++k) {
    sample_disturbance_into(problem.disturbance(), stream, sample);
    violations += static_cast<std::size_t>(indicator(problem, u, sample));
  }
  return ViolationEstimate::from_counts(violations, n);
}

}  // namespace ccopt
