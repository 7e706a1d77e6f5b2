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

#ifndef CCOPT_PROBLEM_HPP_
#define CCOPT_PROBLEM_HPP_

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ccopt/rng.hpp"
#include "ccopt/vectors.hpp"

namespace ccopt {

/// Closed box [lower, upper] in R^n.
class BoxDomain {
 public:
  /// Throws ConfigError unless both bounds have the same nonzero dimension
  /// and lower[i] < upper[i] for every i.
  BoxDomain(std::vector<double> lower, std::vector<double> upper);

  /// [lo, hi]^dimension.
  static BoxDomain cube(std::size_t dimension, double lo, double hi);

  std::size_t dimension() const noexcept { return lower_.size(); }
  std::span<const double> lower() const noexcept { return lower_; }
  std::span<const double> upper() const noexcept { return upper_; }

  /// Bounds inclusive.
  bool contains(std::span<const double> point) const;

  bool operator==(const BoxDomain&) const = default;

 private:
  std::vector<double> lower_;
  std::vector<double> upper_;
};

/// Distribution of the uncertain parameter.
class DisturbanceModel {
 public:
  enum class Kind { kStandardNormalIid, kUniformBox, kUserSupplied };

  /// Fills one sample of length dimension() from the stream.
  using Sampler = std::function<void(RngStream&, std::span<double>)>;

  static DisturbanceModel standard_normal(std::size_t dimension);
  static DisturbanceModel uniform_box(BoxDomain box);
  static DisturbanceModel user_supplied(std::size_t dimension, Sampler sampler);

  Kind kind() const noexcept { return kind_; }
  std::size_t dimension() const noexcept { return dimension_; }
  /// Bounds of a uniform-box model; throws std::logic_error for other kinds.
  const BoxDomain& box() const;
  const Sampler& sampler() const noexcept { return sampler_; }

  std::string describe() const;

 private:
  DisturbanceModel(Kind kind, std::size_t dimension);

  Kind kind_;
  std::size_t dimension_;
  std::vector<BoxDomain> box_;  // zero or one element
  Sampler sampler_;
};

using CostFunction = std::function<double(std::span<const double> u)>;
using ConstraintFunction =
    std::function<double(std::span<const double> u, std::span<const double> delta)>;

/// min J(u) over the box subject to Pr{h(u, delta) <= 0} >= 1 - alpha.
///
/// The problem only carries evaluation callbacks and metadata; nothing about
/// the solvers depends on a concrete instance. Immutable after construction
/// and safe to share across threads as long as the callbacks are.
class ChanceConstrainedProblem {
 public:
  ChanceConstrainedProblem(std::string name, BoxDomain domain, CostFunction cost,
                           ConstraintFunction constraint, DisturbanceModel disturbance,
                           double alpha);

  const std::string& name() const noexcept { return name_; }
  const BoxDomain& domain() const noexcept { return domain_; }
  const CostFunction& cost() const noexcept { return cost_; }
  const ConstraintFunction& constraint() const noexcept { return constraint_; }
  const DisturbanceModel& disturbance() const noexcept { return disturbance_; }
  double alpha() const noexcept { return alpha_; }

  std::size_t decision_dimension() const noexcept { return domain_.dimension(); }
  std::size_t disturbance_dimension() const noexcept { return disturbance_.dimension(); }

 private:
  std::string name_;
  BoxDomain domain_;
  CostFunction cost_;
  ConstraintFunction constraint_;
  DisturbanceModel disturbance_;
  double alpha_;
};

/// J(u). Throws EvaluationError on dimension mismatch, a point outside the
/// domain, or a non-finite value.
double evaluate_cost(const ChanceConstrainedProblem& problem, std::span<const double> u);
inline double evaluate_cost(const ChanceConstrainedProblem& problem, const DecisionPoint& u) {
  return evaluate_cost(problem, u.coords());
}

/// h(u, delta). Throws EvaluationError on dimension mismatch or a non-finite
/// value.
double evaluate_constraint(const ChanceConstrainedProblem& problem, std::span<const double> u,
                           std::span<const double> delta);
inline double evaluate_constraint(const ChanceConstrainedProblem& problem,
                                  const DecisionPoint& u, const DisturbanceSample& delta) {
  return evaluate_constraint(problem, u.coords(), delta.coords());
}

/// Name under which the benchmark below is registered.
inline constexpr std::string_view kBenchmarkName = "paper-nonconvex-2d";

/// Non-convex two-dimensional benchmark:
///
///   J(u)    = sum_i ((u_i + 0.5)^4 - 30 u_i^2 - 20 u_i) / 100
///   h(u, d) = sum_i (0.05 (u_i - a_i d)^4 - b_i (u_i - a_i d)^2) - (1 - 0.1 d)^2
///
/// with a = (1.5, 2), b = (2, 3), u in [-6, 5]^2, scalar d ~ N(0, 1) and
/// alpha = 0.05.
ChanceConstrainedProblem make_benchmark();

/// Problem by registry name. Throws ConfigError("problem", ...) for unknown
/// names.
ChanceConstrainedProblem make_problem(std::string_view name);
std::vector<std::string> problem_names();

}  // namespace ccopt

#endif  // CCOPT_PROBLEM_HPP_
