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

#include "ccopt/problem.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "ccopt/errors.hpp"

namespace ccopt {

std::string format_short(double value) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, end);
}

std::string format_point(std::span<const double> coords) {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_short(coords[i]);
  }
  out += ")";
  return out;
}

DisturbanceBatch::DisturbanceBatch(std::size_t dimension, std::vector<double> data)
    : dimension_(dimension), data_(std::move(data)) {
  if (dimension_ == 0 || data_.size() % dimension_ != 0) {
    throw ConfigError("batch", "data length is not a multiple of a nonzero dimension");
  }
}

DisturbanceBatch::DisturbanceBatch(std::initializer_list<DisturbanceSample> samples) {
  for (const auto& s : samples) push_back(s.coords());
}

DisturbanceBatch DisturbanceBatch::from_samples(std::span<const DisturbanceSample> samples) {
  DisturbanceBatch batch;
  for (const auto& s : samples) batch.push_back(s.coords());
  return batch;
}

DisturbanceBatch DisturbanceBatch::prefix(std::size_t count) const {
  if (count > size()) throw std::out_of_range("DisturbanceBatch::prefix");
  DisturbanceBatch out;
  out.dimension_ = dimension_;
  out.data_.assign(data_.begin(), data_.begin() + static_cast<std::ptrdiff_t>(count * dimension_));
  return out;
}

void DisturbanceBatch::push_back(std::span<const double> sample) {
  if (data_.empty() && dimension_ == 0) dimension_ = sample.size();
  if (sample.size() != dimension_ || dimension_ == 0) {
    throw ConfigError("batch", "sample dimension " + std::to_string(sample.size()) +
                                   " does not match batch dimension " +
                                   std::to_string(dimension_));
  }
  data_.insert(data_.end(), sample.begin(), sample.end());
}

BoxDomain::BoxDomain(std::vector<double> lower, std::vector<double> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.empty()) throw ConfigError("domain", "dimension must be at least 1");
  if (lower_.size() != upper_.size()) {
    throw ConfigError("domain", "lower and upper bounds differ in dimension");
  }
  for (std::size_t i = 0; i < lower_.size(); ++i) {
    if (!std::isfinite(lower_[i]) || !std::isfinite(upper_[i]) || !(lower_[i] < upper_[i])) {
      throw ConfigError("domain", "degenerate interval in dimension " + std::to_string(i));
    }
  }
}

BoxDomain BoxDomain::cube(std::size_t dimension, double lo, double hi) {
  return BoxDomain(std::vector<double>(dimension, lo), std::vector<double>(dimension, hi));
}

bool BoxDomain::contains(std::span<const double> point) const {
  if (point.size() != dimension()) return false;
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (!(point[i] >= lower_[i] && point[i] <= upper_[i])) return false;
  }
  return true;
}

DisturbanceModel::DisturbanceModel(Kind kind, std::size_t dimension)
    : kind_(kind), dimension_(dimension) {
  if (dimension_ == 0) throw ConfigError("disturbance", "dimension must be at least 1");
}

DisturbanceModel DisturbanceModel::standard_normal(std::size_t dimension) {
  return DisturbanceModel(Kind::kStandardNormalIid, dimension);
}

DisturbanceModel DisturbanceModel::uniform_box(BoxDomain box) {
  DisturbanceModel model(Kind::kUniformBox, box.dimension());
  model.box_.push_back(std::move(box));
  return model;
}

DisturbanceModel DisturbanceModel::user_supplied(std::size_t dimension, Sampler sampler) {
  if (!sampler) throw ConfigError("disturbance", "user-supplied sampler is empty");
  DisturbanceModel model(Kind::kUserSupplied, dimension);
  model.sampler_ = std::move(sampler);
  return model;
}

const BoxDomain& DisturbanceModel::box() const {
  if (box_.empty()) throw std::logic_error("DisturbanceModel::box on a non-box model");
  return box_.front();
}

std::string DisturbanceModel::describe() const {
  switch (kind_) {
    case Kind::kStandardNormalIid:
      return "standard-normal-iid(" + std::to_string(dimension_) + ")";
    case Kind::kUniformBox:
      return "uniform-box" + format_point(box().lower()) + "-" + format_point(box().upper());
    case Kind::kUserSupplied:
      return "user-supplied(" + std::to_string(dimension_) + ")";
  }
  return "unknown";
}

ChanceConstrainedProblem::ChanceConstrainedProblem(std::string name, BoxDomain domain,
                                                   CostFunction cost,
                                                   ConstraintFunction constraint,
                                                   DisturbanceModel disturbance, double alpha)
    : name_(std::move(name)),
      domain_(std::move(domain)),
      cost_(std::move(cost)),
      constraint_(std::move(constraint)),
      disturbance_(std::move(disturbance)),
      alpha_(alpha) {
  if (!(alpha_ > 0.0 && alpha_ < 1.0)) throw ConfigError("alpha", "must lie in (0, 1)");
  if (!cost_) throw ConfigError("cost", "cost function is empty");
  if (!constraint_) throw ConfigError("constraint", "constraint function is empty");
}

double evaluate_cost(const ChanceConstrainedProblem& problem, std::span<const double> u) {
  if (u.size() != problem.decision_dimension()) {
    throw EvaluationError("cost: decision dimension " + std::to_string(u.size()) +
                          ", expected " + std::to_string(problem.decision_dimension()));
  }
  if (!problem.domain().contains(u)) {
    throw EvaluationError("cost: point " + format_point(u) + " lies outside the domain");
  }
  const double value = problem.cost()(u);
  if (!std::isfinite(value)) {
    throw EvaluationError("cost: non-finite value at " + format_point(u));
  }
  return value;
}

double evaluate_constraint(const ChanceConstrainedProblem& problem, std::span<const double> u,
                           std::span<const double> delta) {
  if (u.size() != problem.decision_dimension()) {
    throw EvaluationError("constraint: decision dimension " + std::to_string(u.size()) +
                          ", expected " + std::to_string(problem.decision_dimension()));
  }
  if (delta.size() != problem.disturbance_dimension()) {
    throw EvaluationError("constraint: disturbance dimension " + std::to_string(delta.size()) +
                          ", expected " + std::to_string(problem.disturbance_dimension()));
  }
  const double value = problem.constraint()(u, delta);
  if (!std::isfinite(value)) {
    throw EvaluationError("constraint: non-finite value at u=" + format_point(u) +
                          " delta=" + format_point(delta));
  }
  return value;
}

namespace {

inline double pow4(double x) {
  const double x2 = x * x;
  return x2 * x2;
}

constexpr double kShift[2] = {1.5, 2.0};   // a_i
constexpr double kWeight[2] = {2.0, 3.0};  // b_i

double benchmark_cost(std::span<const double> u) {
  double sum = 0.0;
  for (std::size_t i = 0; i < 2; ++i) {
    sum += pow4(u[i] + 0.5) - 30.0 * u[i] * u[i] - 20.0 * u[i];
  }
  return sum / 100.0;
}

double benchmark_constraint(std::span<const double> u, std::span<const double> delta) {
  const double d = delta[0];
  double sum = 0.0;
  for (std::size_t i = 0; i < 2; ++i) {
    const double x = u[i] - kShift[i] * d;
    sum += 0.05 * pow4(x) - kWeight[i] * x * x;
  }
  const double tail = 1.0 - 0.1 * d;
  return sum - tail * tail;
}

}  // namespace

ChanceConstrainedProblem make_benchmark() {
  return ChanceConstrainedProblem(std::string(kBenchmarkName), BoxDomain::cube(2, -6.0, 5.0),
                                  benchmark_cost, benchmark_constraint,
                                  DisturbanceModel::standard_normal(1), 0.05);
}

ChanceConstrainedProblem make_problem(std::string_view name) {
  if (name == kBenchmarkName) return make_benchmark();
  throw ConfigError("problem", "unknown problem '" + std::string(name) + "'");
}

std::vector<std::string> problem_names() { return {std::string(kBenchmarkName)}; }

}  // namespace ccopt
