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

#ifndef CCOPT_VECTORS_HPP_
#define CCOPT_VECTORS_HPP_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace ccopt {

/// Small owning real vector with a tag so decision points and disturbance
/// samples cannot be swapped by accident.
template <class Tag>
class TaggedVector {
 public:
  TaggedVector() = default;
  explicit TaggedVector(std::vector<double> coords) : coords_(std::move(coords)) {}
  TaggedVector(std::initializer_list<double> coords) : coords_(coords) {}
  explicit TaggedVector(std::span<const double> coords)
      : coords_(coords.begin(), coords.end()) {}

  std::size_t size() const noexcept { return coords_.size(); }
  bool empty() const noexcept { return coords_.empty(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  std::span<const double> coords() const noexcept { return coords_; }
  const std::vector<double>& values() const noexcept { return coords_; }

  bool operator==(const TaggedVector&) const = default;

 private:
  std::vector<double> coords_;
};

struct DecisionTag {};
struct DisturbanceTag {};

/// A point u in the decision space.
using DecisionPoint = TaggedVector<DecisionTag>;
/// A realization of the uncertain parameter delta.
using DisturbanceSample = TaggedVector<DisturbanceTag>;

/// Renders "(x1, x2, ...)" with round-trip precision, for diagnostics.
std::string format_point(std::span<const double> coords);
/// Shortest round-trip decimal of one value.
std::string format_short(double value);

/// Row-major batch of disturbance samples sharing one dimension. Used instead
/// of a vector of DisturbanceSample so large batches stay contiguous.
class DisturbanceBatch {
 public:
  DisturbanceBatch() = default;
  DisturbanceBatch(std::size_t dimension, std::vector<double> data);
  DisturbanceBatch(std::initializer_list<DisturbanceSample> samples);

  static DisturbanceBatch from_samples(std::span<const DisturbanceSample> samples);

  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t size() const noexcept {
    return dimension_ == 0 ? 0 : data_.size() / dimension_;
  }
  bool empty() const noexcept { return data_.empty(); }

  std::span<const double> operator[](std::size_t k) const {
    return {data_.data() + k * dimension_, dimension_};
  }
  DisturbanceSample sample(std::size_t k) const { return DisturbanceSample((*this)[k]); }

  /// First `count` samples as a new batch.
  DisturbanceBatch prefix(std::size_t count) const;
  void push_back(std::span<const double> sample);

  std::span<const double> data() const noexcept { return data_; }

 private:
  std::size_t dimension_ = 0;
  std::vector<double> data_;
};

}  // namespace ccopt

#endif  // CCOPT_VECTORS_HPP_
