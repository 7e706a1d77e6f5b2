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

#ifndef CCOPT_SAMPLING_HPP_
#define CCOPT_SAMPLING_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "ccopt/problem.hpp"
#include "ccopt/rng.hpp"
#include "ccopt/vectors.hpp"

namespace ccopt {

/// `count` i.i.d. uniform points in the box. Drawn coordinate by coordinate
/// in point order, so a longer request extends a shorter one.
std::vector<DecisionPoint> sample_decisions(const BoxDomain& domain, std::size_t count,
                                            RngStream& stream);

/// Fills `out` with one uniform point in the box.
void sample_decision_into(const BoxDomain& domain, RngStream& stream, std::span<double> out);

/// `count` i.i.d. draws from the model. Prefix-stable like sample_decisions.
DisturbanceBatch sample_disturbances(const DisturbanceModel& model, std::size_t count,
                                     RngStream& stream);

/// Fills `out` (length model.dimension()) with one draw.
void sample_disturbance_into(const DisturbanceModel& model, RngStream& stream,
                             std::span<double> out);

}  // namespace ccopt

#endif  // CCOPT_SAMPLING_HPP_
