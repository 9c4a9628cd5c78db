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

#include "hladder/ladder.h"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "hladder/factories.h"

namespace hladder {

namespace {

constexpr double kTheta0 = std::numbers::pi / 8.0;

double base_angle(Family family) { return family == Family::kH ? kTheta0 : factory_output_angle(family); }

double base_cost(Family family) { return family == Family::kH ? 1.0 : factory_average_cost(family); }

void check_level(int level) {
  if (level < 0 || level > kMaxLevel) {
    throw std::invalid_argument("ladder level " + std::to_string(level) + " outside [0, " + std::to_string(kMaxLevel) + "]");
  }
}

}  // namespace

double ladder_angle(Family family, int level) {
  if (level < 0) throw std::invalid_argument("ladder levels are non-negative");
  // tan(pi/8) = sqrt(2) - 1 exactly.
  const double step = std::numbers::sqrt2 - 1.0;
  const double base_tan = family == Family::kH ? step : std::tan(base_angle(family));
  return std::atan(base_tan * std::pow(step, level));
}

ResourceState ResourceState::make(Family family, int level) {
  check_level(level);
  return {family, level, ladder_angle(family, level)};
}

double merge_success_prob(const ResourceState& bottom) {
  const double c = std::cos(bottom.state_angle);
  const double s = std::sin(bottom.state_angle);
  const double c0 = std::cos(kTheta0);
  const double s0 = std::sin(kTheta0);
  return c * c * c0 * c0 + s * s * s0 * s0;
}

double merge_success_deficit(const ResourceState& bottom) {
  const double s = std::sin(bottom.state_angle);
  return s * s * std::cos(2.0 * kTheta0);
}

MergeResult merge_step(const ResourceState& bottom, Rng& rng) {
  if (rng.bernoulli(merge_success_prob(bottom))) {
    return {MergeOutcome::kUp, ResourceState::make(bottom.family, bottom.level + 1)};
  }
  if (bottom.level == 0) return {MergeOutcome::kDown, std::nullopt};
  return {MergeOutcome::kDown, ResourceState::make(bottom.family, bottom.level - 1)};
}

double ClimbResult::offline_cost(Family family) const {
  if (family == Family::kH) return static_cast<double>(h_consumed);
  return static_cast<double>(h_consumed) + static_cast<double>(base_states_consumed) * base_cost(family);
}

ClimbResult simulate_climb(Family family, int target_level, Rng& rng) {
  check_level(target_level);
  ClimbResult result;
  auto bill_base = [&] {
    if (family == Family::kH) {
      ++result.h_consumed;
    } else {
      ++result.base_states_consumed;
    }
    return ResourceState::make(family, 0);
  };

  std::optional<ResourceState> rung = bill_base();
  while (rung->level != target_level) {
    ++result.steps;
    ++result.h_consumed;
    MergeResult merged = merge_step(*rung, rng);
    rung = merged.state ? *merged.state : bill_base();
  }
  return result;
}

double expected_climb_cost(Family family, int target_level) {
  check_level(target_level);
  const double c_base = base_cost(family);
  if (target_level == 0) return c_base;

  // Unknowns E_0 .. E_{T-1}; tridiagonal rows a_l E_{l-1} + b_l E_l + c_l E_{l+1} = d_l.
  const auto n = static_cast<std::size_t>(target_level);
  std::vector<double> a(n, 0.0), b(n, 1.0), c(n, 0.0), d(n, 1.0);
  for (std::size_t l = 0; l < n; ++l) {
    const double p = merge_success_prob(ResourceState::make(family, static_cast<int>(l)));
    if (l == 0) {
      // E_{-1} = c_base + E_0 folds into the diagonal.
      b[0] = p;
      d[0] = 1.0 + (1.0 - p) * c_base;
    } else {
      a[l] = -(1.0 - p);
    }
    if (l + 1 < n) c[l] = -p;
  }
  // Thomas algorithm.
  for (std::size_t l = 1; l < n; ++l) {
    const double w = a[l] / b[l - 1];
    b[l] -= w * c[l - 1];
    d[l] -= w * d[l - 1];
  }
  std::vector<double> e(n);
  e[n - 1] = d[n - 1] / b[n - 1];
  for (std::size_t l = n - 1; l-- > 0;) e[l] = (d[l] - c[l] * e[l + 1]) / b[l];
  return c_base + e[0];
}

}  // namespace hladder
