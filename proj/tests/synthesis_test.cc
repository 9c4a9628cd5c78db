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
#include "hladder/synthesis.h"
#include "oracles.h"

namespace hladder {
namespace {

constexpr double kPi = std::numbers::pi;

SynthesisConfig h_only(double eps) {
  SynthesisConfig c;
  c.epsilon = eps;
  return c;
}

SynthesisConfig all_families(double eps) {
  SynthesisConfig c;
  c.epsilon = eps;
  c.families = {kAllFamilies.begin(), kAllFamilies.end()};
  return c;
}

TEST(Config, Validation) {
  SynthesisConfig c;
  c.epsilon = 0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c.epsilon = 1e-3;
  c.max_level = kMaxLevel + 1;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c.max_level = 10;
  c.families.clear();
  EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(Config, DefaultMaxLevel) {
  for (double eps : {1e-2, 1e-4, 1e-8, 1e-12}) {
    const int l = default_max_level(eps);
    EXPECT_LE(rotation_angle(Family::kH, l), eps / 2);
    if (l > 0) {
      EXPECT_GT(rotation_angle(Family::kH, l - 1), eps / 2);
    }
  }
  EXPECT_EQ(default_max_level(1e-300), kMaxLevel);
}

TEST(Wrap, IntoHalfOpenInterval) {
  EXPECT_DOUBLE_EQ(wrap_angle(kPi), kPi);
  EXPECT_DOUBLE_EQ(wrap_angle(-kPi), kPi);
  EXPECT_NEAR(wrap_angle(3 * kPi / 2), -kPi / 2, 1e-15);
  for (double x = -20; x < 20; x += 0.37) {
    const double w = wrap_angle(x);
    EXPECT_GT(w, -kPi);
    EXPECT_LE(w, kPi);
    EXPECT_NEAR(std::remainder(w - x, 2 * kPi), 0, 1e-12);
  }
}

TEST(RandomRotation, TCaseSplitsEvenly) {
  Rng rng(4);
  int to_zero = 0;
  const int n = 100000;
  for (int k = 0; k < n; ++k) {
    const auto r = apply_random_rotation(kPi / 4, kPi / 4, rng);
    if (std::abs(r.new_residual) < 1e-15) {
      ++to_zero;
      EXPECT_EQ(r.sign, 1);
    } else {
      EXPECT_NEAR(r.new_residual, kPi / 2, 1e-15);
      EXPECT_EQ(r.sign, -1);
    }
  }
  EXPECT_NEAR(static_cast<double>(to_zero) / n, 0.5, 4 * 0.5 / std::sqrt(n));
  EXPECT_THROW(apply_random_rotation(0.1, 0.0, rng), std::invalid_argument);
}

TEST(Clifford, Examples) {
  auto r = reduce_by_clifford(kPi / 2);
  EXPECT_NEAR(r.reduced, 0, 1e-15);
  EXPECT_EQ(r.s_count, 1);
  r = reduce_by_clifford(kPi / 5);
  EXPECT_DOUBLE_EQ(r.reduced, kPi / 5);
  EXPECT_EQ(r.s_count, 0);
  r = reduce_by_clifford(-0.9 * kPi);
  EXPECT_NEAR(r.reduced, 0.1 * kPi, 1e-15);
  EXPECT_EQ(r.s_count, 2);  // -0.9 pi = 0.1 pi - 2 (pi/2)
  r = reduce_by_clifford(kPi / 2 + 1e-3);
  EXPECT_NEAR(r.reduced, 1e-3, 1e-15);
  // pi then S (free T correction) reduces the failed T case to zero.
  const auto failed = reduce_by_clifford(wrap_angle(kPi / 4 + kPi / 4));
  EXPECT_NEAR(failed.reduced, 0, 1e-15);
}

TEST(Clifford, ReducedIsCongruentAndInRange) {
  for (double x = -7; x < 7; x += 0.0131) {
    const auto r = reduce_by_clifford(x);
    EXPECT_GT(r.reduced, -kPi / 4);
    EXPECT_LE(r.reduced, kPi / 4);
    EXPECT_NEAR(std::remainder(x - r.reduced - r.s_count * kPi / 2, 2 * kPi), 0, 1e-12);
    EXPECT_GE(r.s_count, 0);
    EXPECT_LE(r.s_count, 3);
  }
}

TEST(PickState, Examples) {
  EXPECT_EQ(pick_state(rotation_angle(Family::kH, 5), h_only(1e-6)), (StateChoice{Family::kH, 5}));
  EXPECT_EQ(pick_state(-rotation_angle(Family::kH, 5), h_only(1e-6)), (StateChoice{Family::kH, 5}));
  EXPECT_EQ(pick_state(0.60, all_families(1e-6)), (StateChoice{Family::kPsi1, 0}));
  EXPECT_EQ(pick_state(7.2e-4, h_only(1e-6)), (StateChoice{Family::kH, 8}));
}

TEST(PickState, RespectsMaxLevel) {
  SynthesisConfig c = h_only(1e-12);
  c.max_level = 4;
  EXPECT_EQ(pick_state(1e-9, c), (StateChoice{Family::kH, 4}));
}

TEST(PickState, MatchesBruteForceScan) {
  Rng rng(8);
  const std::vector<int> all{0, 1, 2, 3}, h{0};
  for (int k = 0; k < 5000; ++k) {
    const double r = std::exp(rng.uniform(std::log(1e-12), std::log(kPi / 4)));
    for (bool multi : {false, true}) {
      const SynthesisConfig c = multi ? all_families(1e-12) : h_only(1e-12);
      const auto got = pick_state(r, c);
      const auto want = oracle::nearest_rung(r, multi ? all : h, c.effective_max_level());
      const double gap_got = std::abs(r - rotation_angle(got.family, got.level));
      const double gap_want = std::abs(r - oracle::rotation(want.family, want.level));
      EXPECT_NEAR(gap_got, gap_want, 1e-15 + 1e-12 * r) << r;
    }
  }
}

TEST(Synthesize, DirectTGate) {
  Rng rng(1);
  for (int k = 0; k < 50; ++k) {
    const auto r = synthesize(kPi / 4, h_only(1e-6), rng);
    EXPECT_EQ(r.online_cost, 1);
    EXPECT_EQ(r.offline_cost, 1.0);
    EXPECT_NEAR(r.residual, 0, 1e-15);
  }
}

TEST(Synthesize, AlreadyWithinPrecision) {
  Rng rng(1);
  const auto r = synthesize(kPi / 2 + 1e-9, h_only(1e-6), rng);
  EXPECT_EQ(r.online_cost, 0);
  EXPECT_EQ(r.offline_cost, 0.0);
  EXPECT_EQ(r.clifford_corrections, 1);
}

TEST(Synthesize, TerminationAndCostInvariants) {
  for (int k = 0; k < 10000; ++k) {
    Rng rng = Rng::substream(17, k);
    const double eps = std::exp(rng.uniform(std::log(1e-12), std::log(1e-2)));
    const double target = rng.uniform(-2 * kPi, 2 * kPi);
    const bool multi = k % 2 == 1;
    const auto r = synthesize(target, multi ? all_families(eps) : h_only(eps), rng);
    ASSERT_LE(std::abs(r.residual), eps);
    EXPECT_EQ(r.online_cost, static_cast<std::int64_t>(r.applied.size()));
    EXPECT_GE(r.offline_cost, static_cast<double>(r.online_cost));
    double floor = 0;
    for (const auto& a : r.applied) {
      if (a.family == Family::kH) floor += a.level + 1;
    }
    EXPECT_GE(r.offline_cost, floor);
    // Replaying the applied rotations lands on the reported residual modulo pi/2.
    double replay = target;
    for (const auto& a : r.applied) replay -= a.sign * rotation_angle(a.family, a.level);
    EXPECT_NEAR(std::remainder(replay - r.residual, kPi / 2), 0, 1e-9);
  }
}

TEST(Synthesize, WithoutCliffordReductionStillConverges) {
  SynthesisConfig c = h_only(1e-5);
  c.free_clifford_reduction = false;
  for (int k = 0; k < 200; ++k) {
    Rng rng = Rng::substream(3, k);
    const auto r = synthesize(rng.uniform(0, 2 * kPi), c, rng);
    EXPECT_LE(std::abs(r.residual), 1e-5);
    EXPECT_EQ(r.clifford_corrections, 0);
  }
}

TEST(Synthesize, DeterministicUnderSeed) {
  Rng a(99), b(99);
  const auto x = synthesize(1.234, all_families(1e-9), a);
  const auto y = synthesize(1.234, all_families(1e-9), b);
  EXPECT_EQ(x.online_cost, y.online_cost);
  EXPECT_EQ(x.offline_cost, y.offline_cost);
  EXPECT_EQ(x.residual, y.residual);
}

// Mean |residual| after step k+1 never exceeds the mean after step k by more
// than three standard errors. Finished runs keep their final residual.
TEST(Synthesize, MonotoneProgressInExpectation) {
  const int runs = 4000;
  const double eps = 1e-10;
  std::vector<std::vector<double>> traces;
  std::size_t longest = 0;
  for (int k = 0; k < runs; ++k) {
    Rng rng = Rng::substream(23, k);
    const double target = rng.uniform(0, 2 * kPi);
    const auto r = synthesize(target, h_only(eps), rng);
    std::vector<double> t;
    double res = reduce_by_clifford(wrap_angle(target)).reduced;
    t.push_back(std::abs(res));
    for (const auto& a : r.applied) {
      res = reduce_by_clifford(wrap_angle(res - a.sign * rotation_angle(a.family, a.level))).reduced;
      t.push_back(std::abs(res));
    }
    longest = std::max(longest, t.size());
    traces.push_back(std::move(t));
  }
  for (std::size_t step = 0; step + 1 < longest; ++step) {
    double sum = 0, sq = 0;
    for (const auto& t : traces) {
      const double a = t[std::min(step, t.size() - 1)];
      const double b = t[std::min(step + 1, t.size() - 1)];
      sum += b - a;
      sq += (b - a) * (b - a);
    }
    const double mean = sum / runs;
    const double se = std::sqrt(std::max(0.0, sq / runs - mean * mean) / (runs - 1));
    EXPECT_LE(mean, 3 * se + 1e-300) << "step " << step;
  }
}

TEST(Synthesize, SignSymmetry) {
  const int n = 3000;
  for (double phi : {0.3, 2.0}) {
    std::vector<double> on_p, on_m, off_p, off_m;
    for (int k = 0; k < n; ++k) {
      Rng a = Rng::substream(51, k), b = Rng::substream(52, k);
      const auto rp = synthesize(phi, h_only(1e-7), a);
      const auto rm = synthesize(-phi, h_only(1e-7), b);
      on_p.push_back(static_cast<double>(rp.online_cost));
      on_m.push_back(static_cast<double>(rm.online_cost));
      off_p.push_back(rp.offline_cost);
      off_m.push_back(rm.offline_cost);
    }
    EXPECT_GT(oracle::ks_pvalue(oracle::ks_statistic(on_p, on_m), n, n), 0.01);
    EXPECT_GT(oracle::ks_pvalue(oracle::ks_statistic(off_p, off_m), n, n), 0.01);
  }
}

TEST(MinOnline, GeometricOnlineCount) {
  const int n = 10000;
  std::vector<long long> counts(64, 0);
  double sum = 0;
  for (int k = 0; k < n; ++k) {
    Rng rng = Rng::substream(61, k);
    const double eps = std::exp(rng.uniform(std::log(1e-12), std::log(1e-4)));
    const auto r = min_online_synthesize(rng.uniform(0, 2 * kPi), all_families(eps), rng);
    ASSERT_LE(std::abs(r.residual), eps);
    EXPECT_EQ(r.online_cost, static_cast<std::int64_t>(r.ancilla_uses.size()));
    EXPECT_GE(r.offline_cost, static_cast<double>(r.online_cost));
    sum += static_cast<double>(r.online_cost);
    counts[std::min<std::size_t>(r.online_cost, 63)]++;
  }
  const double mean = sum / n;
  EXPECT_GE(mean, 1.9);
  EXPECT_LE(mean, 2.1);
  EXPECT_GT(oracle::geometric_half_chi2_pvalue(counts), 0.01);
}

TEST(MinOnline, SuccessEndsTheChain) {
  Rng rng(5);
  for (int k = 0; k < 500; ++k) {
    const auto r = min_online_synthesize(1.0 + 0.001 * k, all_families(1e-8), rng);
    ASSERT_FALSE(r.ancilla_uses.empty());
    for (std::size_t i = 0; i + 1 < r.ancilla_uses.size(); ++i) EXPECT_EQ(r.ancilla_uses[i].sign, -1);
  }
}

TEST(Bs12Distance, Examples) {
  EXPECT_EQ(distance_angle_to_bs12(0), 0.0);
  EXPECT_NEAR(distance_angle_to_bs12(1e-6) / (1e-6 / std::numbers::sqrt2), 1, 1e-12);
  EXPECT_NEAR(distance_angle_to_bs12(kPi / 2), 1, 1e-15);
  for (double x = -4; x < 4; x += 0.01) {
    EXPECT_NEAR(distance_angle_to_bs12(x), std::sqrt(1 - std::abs(std::cos(x))), 1e-12);
  }
}

}  // namespace
}  // namespace hladder
