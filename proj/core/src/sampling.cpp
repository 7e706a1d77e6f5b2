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

#include "ccopt/sampling.hpp"

#include "ccopt/errors.hpp"

namespace ccopt {

void sample_decision_into(const BoxDomain& domain, RngStream& stream, std::span<double> out) {
  const auto lo = domain.lower();
  const auto hi = domain.upper();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = stream.uniform(lo[i], hi[i]);
}

std::vector<DecisionPoint> sample_decisions(const BoxDomain& domain, std::size_t count,
                                            RngStream& stream) {
  if (count == 0) throw ConfigError("count", "must be at least 1");
  std::vector<DecisionPoint> points;
  points.reserve(count);
  std::vector<double> coords(domain.dimension());
  for (std::size_t k = 0; k < count; ++k) {
    sample_decision_into(domain, stream, coords);
    points.emplace_back(coords);
  }
  return points;
}

void sample_disturbance_into(const DisturbanceModel& model, RngStream& stream,
                             std::span<double> out) {
  switch (model.kind()) {
    case DisturbanceModel::Kind::kStandardNormalIid:
      for (double& x : out) x = stream.normal();
      return;
    case DisturbanceModel::Kind::kUniformBox:
      sample_decision_into(model.box(), stream, out);
      return;
    case DisturbanceModel::Kind::kUserSupplied:
      model.sampler()(stream, out);
      return;
  }
  throw ConfigError("disturbance", "unsupported model kind");
}

DisturbanceBatch sample_disturbances(const DisturbanceModel& model, std::size_t count,
                                     RngStream& stream) {
  if (count == 0) throw ConfigError("count", "must be at least 1");
  const std::size_t dim = model.dimension();
  std::vector<double> data(count * dim);
  for (std::size_t k = 0; k < count; ++k) {
    sample_disturbance_into(model, stream, std::span<double>(data.data() + k * dim, dim));
  }
  return DisturbanceBatch(dim, std::move(data));
}

}  // namespace ccopt
