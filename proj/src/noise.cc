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

#include "hladder/noise.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

#include "hladder/ladder.h"
#include "hladder/parallel.h"

namespace hladder {

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;

// Fresh resource on wire 0, walker on wire 1; the walker controls the CNOT
// and wire 0 is measured.
const Gate kMergeCnot = Gate::cnot(1, 0);

}  // namespace

std::string_view noise_kind_name(NoiseKind kind) {
  switch (kind) {
    case NoiseKind::kA: return "a";
    case NoiseKind::kB: return "b";
    case NoiseKind::kC: return "c";
  }
  return "?";
}

NoiseKind parse_noise_kind(std::string_view text) {
  if (text.size() == 1) {
    switch (std::tolower(static_cast<unsigned char>(text[0]))) {
      case 'a': return NoiseKind::kA;
      case 'b': return NoiseKind::kB;
      case 'c': return NoiseKind::kC;
      default: break;
    }
  }
  throw std::invalid_argument("unknown noise model '" + std::string(text) + "' (expected a, b or c)");
}

void NoiseModel::validate() const {
  if (!(strength >= 0) || !std::isfinite(strength)) throw std::invalid_argument("noise strength must be >= 0");
  if (kind == NoiseKind::kA && strength > 1) throw std::invalid_argument("model A strength is a probability");
}

DensityMatrix make_noisy_resource(const NoiseModel& model) {
  model.validate();
  switch (model.kind) {
    case NoiseKind::kA: {
      // Bloch vector of |H> shrunk by (1 - 2p).
      const double r = 1.0 - 2.0 * model.strength;
      return DensityMatrix::from_bloch(r * std::sin(kQuarterPi), 0.0, r * std::cos(kQuarterPi));
    }
    case NoiseKind::kB:
      return DensityMatrix::from_bloch(std::sin(kQuarterPi + model.strength), 0.0, std::cos(kQuarterPi + model.strength));
    case NoiseKind::kC:
      return DensityMatrix::from_bloch(std::sin(kQuarterPi) * std::cos(model.strength),
                                       std::sin(kQuarterPi) * std::sin(model.strength), std::cos(kQuarterPi));
  }
  throw std::invalid_argument("unknown noise model");
}

DensityMatrix ideal_rung(int level) {
  return DensityMatrix::from_pure(PureRegister::real_state(ladder_angle(Family::kH, level)));
}

NoisyClimb propagate_to_level(const NoiseModel& model, int target_level, Rng& rng, const StateObserver& observe) {
  if (target_level < 0 || target_level > kMaxLevel) throw std::invalid_argument("target level out of range");
  const DensityMatrix fresh = make_noisy_resource(model);

  std::optional<DensityMatrix> walker = fresh;
  int level = 0;
  std::int64_t steps = 0;
  if (observe) observe(*walker);
  while (level != target_level) {
    ++steps;
    const DensityMatrix joint = apply_gate(fresh.tensor(*walker), kMergeCnot);
    if (observe) observe(joint);
    MixedMeasurement m = measure_qubit(joint, 0);
    if (rng.bernoulli(m.prob0)) {
      walker = std::move(m.post0);
      ++level;
    } else if (level > 0) {
      walker = std::move(m.post1);
      --level;
    } else {
      walker = fresh;
    }
    if (observe) observe(*walker);
  }
  const double distance = trace_distance(*walker, ideal_rung(target_level));
  return {*walker, distance, steps};
}

DecayFit fit_exponential_decay(std::span<const DecayPoint> points) {
  if (points.size() < 3) throw std::invalid_argument("decay fit needs at least 3 points");
  double sx = 0, sy = 0;
  int lo = points.front().level, hi = points.front().level;
  for (const DecayPoint& p : points) {
    if (!(p.distance > 0)) throw std::invalid_argument("decay fit needs positive distances");
    sx += p.level;
    sy += std::log(p.distance);
    lo = std::min(lo, p.level);
    hi = std::max(hi, p.level);
  }
  if (lo == hi) throw std::invalid_argument("decay fit needs two distinct levels");
  const double n = static_cast<double>(points.size());
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (const DecayPoint& p : points) {
    sxx += (p.level - mx) * (p.level - mx);
    sxy += (p.level - mx) * (std::log(p.distance) - my);
  }
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  double ss = 0;
  for (const DecayPoint& p : points) {
    const double r = std::log(p.distance) - (intercept + slope * p.level);
    ss += r * r;
  }
  return {std::exp(intercept), std::exp(-slope), lo, hi, std::sqrt(ss / n)};
}

std::vector<DecayPoint> mean_distance_profile(const NoiseModel& model, int first_level, int last_level,
                                              std::size_t instances, std::uint64_t seed, unsigned jobs) {
  if (first_level < 0 || last_level < first_level || last_level > kMaxLevel) {
    throw std::invalid_argument("bad level range");
  }
  if (instances == 0) throw std::invalid_argument("need at least one instance per level");
  model.validate();
  const auto levels = static_cast<std::size_t>(last_level - first_level + 1);
  std::vector<double> distances(levels * instances);
  parallel_for(distances.size(), jobs, [&](std::size_t task) {
    const int level = first_level + static_cast<int>(task / instances);
    Rng rng = Rng::substream(seed, task);
    distances[task] = propagate_to_level(model, level, rng).distance;
  });

  std::vector<DecayPoint> out;
  out.reserve(levels);
  for (std::size_t k = 0; k < levels; ++k) {
    double sum = 0;
    for (std::size_t j = 0; j < instances; ++j) sum += distances[k * instances + j];
    out.push_back({first_level + static_cast<int>(k), sum / static_cast<double>(instances)});
  }
  return out;
}

LevelWindow default_fit_window(double strength) {
  auto near = [&](double v) { return std::abs(strength - v) <= 1e-3 * v; };
  if (near(1e-4)) return {18, 28};
  if (near(1e-6)) return {18, 22};
  if (near(1e-8)) return {13, 16};
  if (!(strength > 1e-14)) throw std::invalid_argument("no default fit window for this strength");
  const int last = std::clamp(static_cast<int>(std::floor(std::log(strength / 1e-14) / std::log(2.3))), 3, kMaxLevel);
  return {last - last / 3, last};
}

}  // namespace hladder
