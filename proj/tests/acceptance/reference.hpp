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

#ifndef CCOPT_TESTS_ACCEPTANCE_REFERENCE_HPP_
#define CCOPT_TESTS_ACCEPTANCE_REFERENCE_HPP_

// Hand-expanded benchmark formulas, written without the library.

namespace ccopt::acceptance {

inline double reference_cost(double u1, double u2) {
  const double p = u1 + 0.5;
  const double q = u2 + 0.5;
  return (p * p * p * p - 30.0 * u1 * u1 - 20.0 * u1 + q * q * q * q - 30.0 * u2 * u2 -
          20.0 * u2) /
         100.0;
}

inline double reference_constraint(double u1, double u2, double d) {
  const double x = u1 - 1.5 * d;
  const double y = u2 - 2.0 * d;
  const double s = 1.0 - 0.1 * d;
  return 0.05 * x * x * x * x - 2.0 * x * x + 0.05 * y * y * y * y - 3.0 * y * y - s * s;
}

}  // namespace ccopt::acceptance

#endif  // CCOPT_TESTS_ACCEPTANCE_REFERENCE_HPP_
