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

#include <cmath>
#include <string>

#include "ccopt/errors.hpp"
#include "ccopt/sampling.hpp"

namespace ccopt {

double NeighborhoodSpec::radius() const { return std::sqrt(epsilon); }

void SearchConfig::validate() const {
  if (!(neighborhood.epsilon > 0.0) || !std::isfinite(neighborhood.epsilon)) {
    throw ConfigError("epsilon", "neighborhood size must be positive and finite");
  }
  if (max_iterations == 0) throw ConfigError("iterations", "must be at least 1");
}

namespace {

double checked_cost(const CostFunction& cost, std::span<const double> v) {
  const double value = cost(v);
  if (!std::isfinite(value)) {
    throw EvaluationError("cost: non-finite value at " + format_point(v));
  }
  return value;
}

// One draw from the neighborhood of `center`, or false if it fell outside the
// ball (normal draws only).
bool draw_neighbor(const NeighborhoodSpec& spec, std::span<const double> center,
                   RngStream& stream, std::span<double> out) {
  const double radius = spec.radius();
  const std::size_t n = center.size();
  double norm_sq = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = stream.normal();
    norm_sq += out[i] * out[i];
  }
  double scale = 0.0;
  if (spec.distribution == NeighborhoodSpec::Distribution::kUniformBall) {
    if (norm_sq == 0.0) return false;
    const double r = radius * std::pow(stream.uniform01(), 1.0 / static_cast<double>(n));
    scale = r / std::sqrt(norm_sq);
  } else {
    scale = 0.5 * radius;
    if (scale * scale * norm_sq >= radius * radius) return false;
  }
  for (std::size_t i = 0; i < n; ++i) out[i] = center[i] + scale * out[i];
  return true;
}

}  // namespace

SearchResult random_optimize(const CostFunction& cost, const BoxDomain& domain,
                             const SearchConfig& config) {
  config.validate();
  if (!cost) throw ConfigError("cost", "cost function is empty");

  RngStream init = RngStream::derive(config.seed, {config.trial, 0, StreamPurpose::kInit});
  RngStream moves = RngStream::derive(config.seed, {config.trial, 0, StreamPurpose::kDecisions});

  const std::size_t n = domain.dimension();
  std::vector<double> current(n);
  sample_decision_into(domain, init, current);

  SearchResult result;
  double current_cost = checked_cost(cost, current);
  result.cost_evaluations = 1;
  result.cost_history.reserve(config.max_iterations + 1);
  result.cost_history.push_back(current_cost);

  std::vector<double> candidate(n);
  for (std::size_t it = 0; it < config.max_iterations; ++it) {
    bool drawn = false;
    for (int attempt = 0; attempt <= kMaxNeighborRetries && !drawn; ++attempt) {
      drawn = draw_neighbor(config.neighborhood, current, moves, candidate) &&
              domain.contains(candidate);
    }
    if (!drawn) {
      ++result.skipped_iterations;
    } else {
      const double candidate_cost = checked_cost(cost, candidate);
      ++result.cost_evaluations;
      if (candidate_cost < current_cost) {
        current.swap(candidate);
        current_cost = candidate_cost;
        ++result.accepted;
      }
    }
    result.cost_history.push_back(current_cost);
  }
  result.best = DecisionPoint(std::move(current));
  return result;
}

}  // namespace ccopt
