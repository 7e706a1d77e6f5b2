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

#include "ccopt/rng.hpp"

#include <cmath>
#include <string>

#include "ccopt/errors.hpp"

namespace ccopt {

std::string_view to_string(StreamPurpose purpose) {
  switch (purpose) {
    case StreamPurpose::kInit: return "init";
    case StreamPurpose::kDecisions: return "decisions";
    case StreamPurpose::kDisturbances: return "disturbances";
    case StreamPurpose::kScenarios: return "scenarios";
    case StreamPurpose::kSearchPoints: return "search-points";
    case StreamPurpose::kOracle: return "oracle";
  }
  return "unknown";
}

namespace {

std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t stream_id) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream_id),
                    static_cast<std::uint32_t>(stream_id >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id), engine_(seeded_engine(seed, stream_id)) {}

std::uint64_t RngStream::pack(const StreamPath& path) {
  if (path.trial >= kMaxTrials) {
    throw ConfigError("trials", "trial index " + std::to_string(path.trial) + " exceeds 2^32-1");
  }
  if (path.iteration >= kMaxIterations) {
    throw ConfigError("iterations",
                      "iteration index " + std::to_string(path.iteration) + " exceeds 2^24-1");
  }
  return (static_cast<std::uint64_t>(path.purpose) << 56) | (path.trial << 24) | path.iteration;
}

RngStream RngStream::derive(std::uint64_t root_seed, const StreamPath& path) {
  return RngStream(root_seed, pack(path));
}

double RngStream::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi) {
  const double value = lo + (hi - lo) * uniform01();
  return value > hi ? hi : value;
}

double RngStream::normal() {
  if (spare_normal_) {
    const double value = *spare_normal_;
    spare_normal_.reset();
    return value;
  }
  double x, y, s;
  do {
    x = 2.0 * uniform01() - 1.0;
    y = 2.0 * uniform01() - 1.0;
    s = x * x + y * y;
  } while (s >= 1.0 || s == 0.0);
  const double scale = std::sqrt(-2.0 * std::log(s) / s);
  spare_normal_ = y * scale;
  return x * scale;
}

}  // namespace ccopt
