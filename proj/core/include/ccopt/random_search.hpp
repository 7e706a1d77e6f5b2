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

#ifndef CCOPT_RANDOM_SEARCH_HPP_
#define CCOPT_RANDOM_SEARCH_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "ccopt/problem.hpp"
#include "ccopt/rng.hpp"
#include "ccopt/vectors.hpp"

namespace ccopt {

/// Neighborhood {v' : |v' - v|^2 < epsilon} around the incumbent (Euclidean
/// norm), sampled either uniformly or from an isotropic normal truncated to
/// the ball.
struct NeighborhoodSpec {
  enum class Distribution { kUniformBall, kNormalIsotropic };

  double epsilon = 0.1;
  Distribution distribution = Distribution::kUniformBall;

  double radius() const;
};

struct SearchConfig {
  NeighborhoodSpec neighborhood;
  std::size_t max_iterations = 500;
  std::uint64_t seed = kDefaultSeed;
  /// Trial index used for stream derivation.
  std::uint64_t trial = 0;

  void validate() const;
};

/// Redraws allowed per iteration before the iteration is skipped.
inline constexpr int kMaxNeighborRetries = 100;

struct SearchResult {
  DecisionPoint best;
  /// Incumbent cost after initialization and after every iteration;
  /// length max_iterations + 1.
  std::vector<double> cost_history;
  std::size_t accepted = 0;
  std::size_t skipped_iterations = 0;
  std::size_t cost_evaluations = 0;
};

/// Classical randomized search for a deterministic problem on a box: start
/// from a uniform point, draw a neighbor each iteration and move there only
/// on strict improvement. Neighbors outside the box are rejected and redrawn
/// up to kMaxNeighborRetries times.
SearchResult random_optimize(const CostFunction& cost, const BoxDomain& domain,
                             const SearchConfig& config);

}  // namespace ccopt

#endif  // CCOPT_RANDOM_SEARCH_HPP_
