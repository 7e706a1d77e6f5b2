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

#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <utility>

#include "ccopt/errors.hpp"
#include "ccopt/rng.hpp"

namespace ccopt {
namespace {

TEST(RngStreamTest, SameSeedAndIdGiveSameSequence) {
  RngStream a(123, 456), b(123, 456);
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(a.next_u64(), b.next_u64());
  RngStream c(123, 456), d(123, 456);
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(c.normal(), d.normal());
}

TEST(RngStreamTest, PackIsInjectiveOverItsFields) {
  EXPECT_NE(RngStream::pack({1, 0, StreamPurpose::kDecisions}),
            RngStream::pack({0, 1, StreamPurpose::kDecisions}));
  EXPECT_NE(RngStream::pack({0, 0, StreamPurpose::kDecisions}),
            RngStream::pack({0, 0, StreamPurpose::kDisturbances}));
  EXPECT_EQ(RngStream::pack({kMaxTrials - 1, kMaxIterations - 1, StreamPurpose::kOracle}) >> 56,
            static_cast<std::uint64_t>(StreamPurpose::kOracle));
  EXPECT_THROW(RngStream::pack({kMaxTrials, 0, StreamPurpose::kInit}), ConfigError);
  EXPECT_THROW(RngStream::pack({0, kMaxIterations, StreamPurpose::kInit}), ConfigError);
}

// Collision scan: the first two outputs of every derived engine must be
// distinct across (trial, iteration, purpose).
TEST(RngStreamTest, DerivedStreamsDoNotCollide) {
  std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
  std::set<std::uint64_t> ids;
  std::size_t count = 0;
  for (std::uint64_t trial = 0; trial < 60; ++trial) {
    for (std::uint64_t it = 0; it < 60; ++it) {
      for (auto purpose : {StreamPurpose::kInit, StreamPurpose::kDecisions,
                           StreamPurpose::kDisturbances, StreamPurpose::kScenarios,
                           StreamPurpose::kSearchPoints, StreamPurpose::kOracle}) {
        RngStream s = RngStream::derive(kDefaultSeed, {trial, it, purpose});
        ids.insert(s.stream_id());
        const auto first = s.next_u64();
        seen.emplace(first, s.next_u64());
        ++count;
      }
    }
  }
  EXPECT_EQ(ids.size(), count);
  EXPECT_EQ(seen.size(), count);
}

TEST(RngStreamTest, Uniform01Range) {
  RngStream s(1, 2);
  for (int i = 0; i < 100000; ++i) {
    const double x = s.uniform01();
    ASSERT_GE(x, 0.0);
    ASSERT_LT(x, 1.0);
  }
}

TEST(SampleDecisionsTest, DeterministicAndInBounds) {
  const BoxDomain unit = BoxDomain::cube(2, 0.0, 1.0);
  RngStream a(99, 1), b(99, 1);
  const auto pa = sample_decisions(unit, 3, a);
  const auto pb = sample_decisions(unit, 3, b);
  ASSERT_EQ(pa.size(), 3u);
  EXPECT_EQ(pa, pb);
  for (const auto& p : pa) EXPECT_TRUE(unit.contains(p.coords()));

  RngStream c(5, 5);
  const auto single = sample_decisions(BoxDomain({-2.0, 10.0, 0.0}, {-1.0, 11.0, 1e-9}), 1, c);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_TRUE(BoxDomain({-2.0, 10.0, 0.0}, {-1.0, 11.0, 1e-9}).contains(single[0].coords()));
}

TEST(SampleDecisionsTest, ZeroCountRejected) {
  RngStream s(1, 1);
  EXPECT_THROW(sample_decisions(BoxDomain::cube(1, 0, 1), 0, s), ConfigError);
}

// Uniform on [-6, 5]: mean -0.5, standard error 11 / sqrt(12 N).
TEST(SampleDecisionsTest, CoordinateMeansMatchUniform) {
  constexpr std::size_t kN = 100000;
  RngStream s(kDefaultSeed, 17);
  const auto pts = sample_decisions(BoxDomain::cube(2, -6.0, 5.0), kN, s);
  const double se = 11.0 / std::sqrt(12.0 * kN);
  for (std::size_t d = 0; d < 2; ++d) {
    double sum = 0.0;
    for (const auto& p : pts) sum += p[d];
    EXPECT_NEAR(sum / kN, -0.5, 4 * se);
  }
}

TEST(SampleDecisionsTest, LongerDrawExtendsShorterDraw) {
  RngStream a(3, 3), b(3, 3);
  const auto short_run = sample_decisions(BoxDomain::cube(2, 0, 1), 10, a);
  const auto long_run = sample_decisions(BoxDomain::cube(2, 0, 1), 25, b);
  for (std::size_t i = 0; i < short_run.size(); ++i) EXPECT_EQ(short_run[i], long_run[i]);
}

TEST(SampleDisturbancesTest, StandardNormalMoments) {
  constexpr std::size_t kN = 100000;
  RngStream s(kDefaultSeed, 23);
  const auto batch = sample_disturbances(DisturbanceModel::standard_normal(1), kN, s);
  ASSERT_EQ(batch.size(), kN);
  double sum = 0.0, sq = 0.0;
  for (std::size_t k = 0; k < kN; ++k) {
    sum += batch[k][0];
    sq += batch[k][0] * batch[k][0];
  }
  const double mean = sum / kN;
  const double var = sq / kN - mean * mean;
  EXPECT_NEAR(mean, 0.0, 4.0 / std::sqrt(static_cast<double>(kN)));
  EXPECT_NEAR(var, 1.0, 0.05);
}

TEST(SampleDisturbancesTest, NormalTailsAreNotTruncated) {
  // Pr{|Z| > 4} = 6.3e-5, so 2e6 draws should produce roughly 127 of them.
  RngStream s(kDefaultSeed, 29);
  const auto batch = sample_disturbances(DisturbanceModel::standard_normal(1), 2000000, s);
  std::size_t beyond = 0;
  for (std::size_t k = 0; k < batch.size(); ++k) beyond += std::abs(batch[k][0]) > 4.0;
  EXPECT_GT(beyond, 60u);
  EXPECT_LT(beyond, 220u);
}

TEST(SampleDisturbancesTest, SingleDrawIsFinite) {
  RngStream s(8, 8);
  const auto batch = sample_disturbances(DisturbanceModel::standard_normal(1), 1, s);
  ASSERT_EQ(batch.size(), 1u);
  EXPECT_TRUE(std::isfinite(batch[0][0]));
}

TEST(SampleDisturbancesTest, UniformBoxIsReproducibleAndBounded) {
  const auto model = DisturbanceModel::uniform_box(BoxDomain::cube(1, 0.0, 1.0));
  RngStream a(11, 0), b(11, 0);
  const auto x = sample_disturbances(model, 50, a);
  const auto y = sample_disturbances(model, 50, b);
  ASSERT_EQ(x.size(), 50u);
  for (std::size_t k = 0; k < 50; ++k) {
    EXPECT_EQ(x[k][0], y[k][0]);
    EXPECT_GE(x[k][0], 0.0);
    EXPECT_LE(x[k][0], 1.0);
  }
}

TEST(SampleDisturbancesTest, UserSuppliedSampler) {
  const auto model = DisturbanceModel::user_supplied(2, [](RngStream& s, std::span<double> out) {
    out[0] = 1.0;
    out[1] = s.uniform(10.0, 20.0);
  });
  RngStream s(1, 1);
  const auto batch = sample_disturbances(model, 4, s);
  ASSERT_EQ(batch.dimension(), 2u);
  for (std::size_t k = 0; k < batch.size(); ++k) {
    EXPECT_EQ(batch[k][0], 1.0);
    EXPECT_GE(batch[k][1], 10.0);
  }
}

}  // namespace
}  // namespace ccopt
