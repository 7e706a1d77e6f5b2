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

#ifndef CCOPT_RNG_HPP_
#define CCOPT_RNG_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

namespace ccopt {

/// Fixed root seed used when none is given, so bare runs are reproducible.
inline constexpr std::uint64_t kDefaultSeed = 20190611;

/// What a stream is used for. Part of the stream id, so draws for different
/// purposes of the same (trial, iteration) never share a sequence.
enum class StreamPurpose : std::uint8_t {
  kInit = 1,
  kDecisions = 2,
  kDisturbances = 3,
  kScenarios = 4,
  kSearchPoints = 5,
  kOracle = 6,
};

std::string_view to_string(StreamPurpose purpose);

/// Derivation path of a stream below the root seed.
struct StreamPath {
  std::uint64_t trial = 0;
  std::uint64_t iteration = 0;
  StreamPurpose purpose = StreamPurpose::kInit;
};

/// Upper bounds of the packed stream id fields.
inline constexpr std::uint64_t kMaxTrials = std::uint64_t{1} << 32;
inline constexpr std::uint64_t kMaxIterations = std::uint64_t{1} << 24;

/// Deterministic random stream identified by (seed, stream id).
///
/// The stream id packs purpose (8 bits), trial (32 bits) and iteration
/// (24 bits), so distinct paths always give distinct ids. The engine is
/// std::mt19937_64 seeded through std::seed_seq over the four 32-bit halves
/// of (seed, id); both algorithms are fully specified by the standard, which
/// keeps sequences identical across standard libraries. Uniform and normal
/// conversions are implemented here rather than with the <random>
/// distributions, whose outputs are implementation-defined.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  /// Stream for `path` under `root_seed`. Throws ConfigError when the trial or
  /// iteration index does not fit its field.
  static RngStream derive(std::uint64_t root_seed, const StreamPath& path);
  static std::uint64_t pack(const StreamPath& path);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform on [0, 1) with 53 random mantissa bits.
  double uniform01();
  /// Uniform on [lo, hi].
  double uniform(double lo, double hi);
  /// Standard normal variate, Marsaglia polar method (exact, no tail cutoff).
  double normal();

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
  std::optional<double> spare_normal_;
};

/// Name of the normal-variate method, recorded in run metadata.
inline constexpr std::string_view kNormalMethod = "marsaglia-polar";
inline constexpr std::string_view kGeneratorName = "mt19937_64+seed_seq";

}  // namespace ccopt

#endif  // CCOPT_RNG_HPP_
