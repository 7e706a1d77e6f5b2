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

#ifndef CCOPT_TESTS_ACCEPTANCE_GRID_ORACLE_HPP_
#define CCOPT_TESTS_ACCEPTANCE_GRID_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>

namespace ccopt::acceptance {

struct GridOracleSpec {
  std::size_t grid = 1000;  // points per axis, endpoints included
  std::size_t samples = 100000;
  double threshold = 0.045;
  double lo = -6.0;
  double hi = 5.0;
  std::uint64_t seed = 1;
};

struct GridOracleResult {
  bool found = false;
  double j_star = 0.0;
  double u1 = 0.0;
  double u2 = 0.0;
  std::size_t violations = 0;
  /// Grid points examined, cheapest first, up to and including the optimum.
  std::size_t scanned = 0;
  double seconds = 0.0;
  bool from_cache = false;
};

/// Cheapest grid point whose violation count over one shared set of
/// `samples` standard normal draws is at most threshold * samples. Uses
/// std::mt19937_64 with std::normal_distribution and the reference formulas.
GridOracleResult build_grid_oracle(const GridOracleSpec& spec);

/// build_grid_oracle, reusing <cache_dir>/grid_oracle.json when it was built
/// with the same spec.
GridOracleResult cached_grid_oracle(const GridOracleSpec& spec,
                                    const std::filesystem::path& cache_dir);

std::string describe(const GridOracleSpec& spec);

}  // namespace ccopt::acceptance

#endif  // CCOPT_TESTS_ACCEPTANCE_GRID_ORACLE_HPP_
