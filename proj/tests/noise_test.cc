// Copyright 2026 The hladder Authors
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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "hladder/ladder.h"
#include "hladder/noise.h"
#include "oracles.h"

namespace hladder {
namespace {

constexpr double kQuarterPi = std::numbers::pi / 4;

// Closed-form Bloch vectors, written independently of the library.
Eigen::Matrix2cd bloch_matrix(double x, double y, double z) {
  Eigen::Matrix2cd m;
  m << 0.5 * (1 + z), 0.5 * Complex(x, -y), 0.5 * Complex(x, y), 0.5 * (1 - z);
  return m;
}

Eigen::Matrix2cd ideal_h() { return bloch_matrix(std::sin(kQuarterPi), 0, std::cos(kQuarterPi)); }

TEST(NoiseModel, Validation) {
  EXPECT_THROW((NoiseModel{NoiseKind::kA, -1e-3}.validate()), std::invalid_argument);
  EXPECT_THROW((NoiseModel{NoiseKind::kA, 1.5}.validate()), std::invalid_argument);
  EXPECT_NO_THROW((NoiseModel{NoiseKind::kB, 1.5}.validate()));
  EXPECT_EQ(parse_noise_kind("B"), NoiseKind::kB);
  EXPECT_THROW(parse_noise_kind("d"), std::invalid_argument);
  EXPECT_EQ(noise_kind_name(NoiseKind::kC), "c");
}

TEST(NoisyResource, ZeroStrengthIsIdeal) {
  const auto h = ideal_rung(0);
  for (NoiseKind k : {NoiseKind::kA, NoiseKind::kB, NoiseKind::kC}) {
    EXPECT_LT(trace_distance(make_noisy_resource({k, 0.0}), h), 1e-15);
  }
}

TEST(NoisyResource, LevelZeroDistances) {
  for (double s : {1e-8, 1e-6, 1e-4, 1e-2}) {
    EXPECT_NEAR(trace_distance(make_noisy_resource({NoiseKind::kA, s}), ideal_rung(0)), s, 1e-12);
    const auto b = make_noisy_resource({NoiseKind::kB, s});
    const Eigen::Matrix2cd b_ref = bloch_matrix(std::sin(kQuarterPi + s), 0, std::cos(kQuarterPi + s));
    EXPECT_LT((b.matrix() - b_ref).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_NEAR(trace_distance(b, ideal_rung(0)), std::abs(std::sin(s / 2)), 1e-12);
    const auto c = make_noisy_resource({NoiseKind::kC, s});
    const Eigen::Matrix2cd c_ref =
        bloch_matrix(std::sin(kQuarterPi) * std::cos(s), std::sin(kQuarterPi) * std::sin(s), std::cos(kQuarterPi));
    EXPECT_LT((c.matrix() - c_ref).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_NEAR(trace_distance(c, ideal_rung(0)), oracle::trace_distance_2x2(c_ref, ideal_h()), 1e-12);
  }
}

TEST(Propagate, NoiselessReproducesLadder) {
  for (NoiseKind k : {NoiseKind::kA, NoiseKind::kB, NoiseKind::kC}) {
    for (int level : {0, 1, 2, 5, 12, 30}) {
      Rng rng = Rng::substream(3, static_cast<std::uint64_t>(level));
      const auto r = propagate_to_level({k, 0.0}, level, rng);
      EXPECT_LT(r.distance, 1e-12);
      const auto v = r.state.bloch_vector();
      EXPECT_NEAR(0.5 * std::atan2(v[0], v[2]), ladder_angle(Family::kH, level), 1e-12);
    }
  }
}

TEST(Propagate, IntermediateStatesArePhysical) {
  int seen = 0;
  auto check = [&](const DensityMatrix& rho) {
    ++seen;
    EXPECT_GE(rho.min_eigenvalue(), -1e-10);
    EXPECT_NEAR(rho.trace(), 1.0, 1e-12);
  };
  for (NoiseKind k : {NoiseKind::kA, NoiseKind::kB, NoiseKind::kC}) {
    for (int i = 0; i < 20; ++i) {
      Rng rng = Rng::substream(4, static_cast<std::uint64_t>(i));
      propagate_to_level({k, 1e-2}, 10, rng, check);
    }
  }
  EXPECT_GT(seen, 100);
}

TEST(Propagate, LevelZeroReturnsFreshResource) {
  Rng rng(1);
  const auto r = propagate_to_level({NoiseKind::kA, 1e-4}, 0, rng);
  EXPECT_EQ(r.steps, 0);
  EXPECT_NEAR(r.distance, 1e-4, 1e-12);
}

TEST(Propagate, ErrorsShrinkWithLevel) {
  const auto profile = mean_distance_profile({NoiseKind::kA, 1e-3}, 0, 8, 200, 5);
  ASSERT_EQ(profile.size(), 9u);
  EXPECT_LT(profile[8].distance, profile[0].distance / 20);
}

TEST(DecayFit, RecoversSyntheticLaw) {
  std::vector<DecayPoint> pts;
  for (int i = 2; i <= 12; ++i) pts.push_back({i, 5 * std::pow(3.0, -i)});
  const auto fit = fit_exponential_decay(pts);
  EXPECT_NEAR(fit.prefactor, 5, 1e-9);
  EXPECT_NEAR(fit.base, 3, 1e-9);
  EXPECT_EQ(fit.level_min, 2);
  EXPECT_EQ(fit.level_max, 12);
  EXPECT_LT(fit.residual_rms, 1e-12);
}

TEST(DecayFit, Errors) {
  std::vector<DecayPoint> two{{1, 0.1}, {2, 0.01}};
  EXPECT_THROW(fit_exponential_decay(two), std::invalid_argument);
  std::vector<DecayPoint> zero{{1, 0.1}, {2, 0.0}, {3, 0.001}};
  EXPECT_THROW(fit_exponential_decay(zero), std::invalid_argument);
  std::vector<DecayPoint> same{{1, 0.1}, {1, 0.2}, {1, 0.3}};
  EXPECT_THROW(fit_exponential_decay(same), std::invalid_argument);
}

TEST(Profile, DeterministicAcrossJobs) {
  const NoiseModel m{NoiseKind::kB, 1e-4};
  const auto a = mean_distance_profile(m, 2, 6, 50, 9, 1);
  const auto b = mean_distance_profile(m, 2, 6, 50, 9, 3);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].level, b[i].level);
    EXPECT_EQ(a[i].distance, b[i].distance);
  }
  EXPECT_THROW(mean_distance_profile(m, 5, 2, 10, 1), std::invalid_argument);
}

TEST(Profile, DefaultWindows) {
  EXPECT_EQ(default_fit_window(1e-4).first, 18);
  EXPECT_EQ(default_fit_window(1e-4).last, 28);
  EXPECT_EQ(default_fit_window(1e-6).last, 22);
  EXPECT_EQ(default_fit_window(1e-8).first, 13);
  const auto w = default_fit_window(1e-3);
  EXPECT_LT(w.first, w.last);
  EXPECT_GE(w.first, 1);
}

}  // namespace
}  // namespace hladder
