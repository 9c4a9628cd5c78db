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

#pragma once

// Monte Carlo experiments over the synthesis protocol: cost-scaling clouds
// and their log-log fits, fixed-angle cost tables, and the comparison with
// published Solovay-Kitaev fit constants.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hladder/rng.h"

namespace hladder {

enum class Scheme { kHOnly, kMulti, kMinOnline };

/// "h-only", "multi", "min-online".
std::string_view scheme_name(Scheme scheme);
Scheme parse_scheme(std::string_view text);

struct ScalingSample {
  Scheme scheme;
  double epsilon;
  double target;
  std::int64_t online;
  double offline;
};

/// ln C = intercept + slope * ln ln(1/epsilon).
struct ScalingFit {
  double intercept = 0;
  double slope = 0;
  std::size_t n_samples = 0;
  double rms_residual = 0;
};

struct LogLogPoint {
  double x;  ///< ln ln(1/epsilon)
  double y;  ///< ln C
};

/// Ordinary least squares. Throws std::invalid_argument with fewer than two
/// distinct x values.
ScalingFit fit_loglog(std::span<const LogLogPoint> points);

struct StudyOptions {
  Scheme scheme = Scheme::kHOnly;
  std::size_t n_samples = 18000;
  double eps_min = 1e-12;
  double eps_max = 1e-4;
  std::uint64_t seed = kDefaultSeed;
  unsigned jobs = 1;
};

struct ScalingStudy {
  std::vector<ScalingSample> samples;
  ScalingFit online;
  ScalingFit offline;
  double mean_online = 0;
  double mean_offline = 0;
  /// Samples whose target was already within epsilon after free Clifford
  /// reduction; their zero costs have no logarithm and are left out of fits.
  std::size_t zero_cost_samples = 0;
};

/// epsilon log-uniform in [eps_min, eps_max], target uniform in (0, 2*pi).
/// Sample i draws from Rng::substream(seed, i).
ScalingStudy run_scaling_study(const StudyOptions& options);

/// Fits of an existing sample cloud, as run_scaling_study computes them.
ScalingStudy fit_samples(std::vector<ScalingSample> samples);

/// Synthesis of one target under a scheme (families and variant chosen by the scheme).
struct SchemeCost {
  std::int64_t online;
  double offline;
};
SchemeCost run_scheme(Scheme scheme, double target, double epsilon, Rng& rng);

struct FitLine {
  double intercept;
  double slope;
};

/// epsilon at which two ln C vs ln ln(1/epsilon) lines cross, exp(-exp(x)).
/// Throws std::invalid_argument for parallel lines.
double sk_crossover(FitLine a, FitLine b);

/// Published fit constants, two decimals as printed.
struct SkFitConstants {
  FitLine sk_z{-4.88, 4.41};       ///< Solovay-Kitaev, Z rotations
  FitLine sk_u{-2.67, 3.40};       ///< Solovay-Kitaev, random unitaries
  FitLine h_online{-0.49, 1.29};
  FitLine h_offline{-0.72, 2.27};
  FitLine multi_online{-0.78, 1.12};
  FitLine multi_offline{0.54, 1.75};
  FitLine min_online_offline{1.13, 1.75};
  double min_online_mean = 1.99;
};
inline constexpr SkFitConstants kPublishedFits{};

/// A random unitary costs three random Z/X rotations: curves shift by ln 3.
FitLine as_unitary_cost(FitLine rotation_fit);

struct CrossoverRow {
  std::string label;
  double computed;
  double quoted;
};

/// The five crossovers quoted alongside the published fits.
std::vector<CrossoverRow> published_crossovers(const SkFitConstants& fits = kPublishedFits);

struct ComparisonPoint {
  double epsilon;
  double sk_z, online_z, offline_z;  ///< ln C for Z rotations
  double sk_u, online_u, offline_u;  ///< ln C for random unitaries
};

/// ln C of every curve on a log-spaced epsilon grid, for one scheme's fits.
std::vector<ComparisonPoint> comparison_table(FitLine online, FitLine offline, double eps_min, double eps_max,
                                              std::size_t points, const SkFitConstants& fits = kPublishedFits);

struct FixedAngleRow {
  double epsilon;
  std::size_t n_samples;
  double mean_online;
  double mean_offline;
  double se_online;
  double se_offline;
};

/// Mean costs of synthesizing the fixed angle theta at each epsilon.
std::vector<FixedAngleRow> fixed_angle_study(double theta, std::span<const double> eps_list, Scheme scheme,
                                             std::size_t n_samples, std::uint64_t seed, unsigned jobs = 1);

/// Published fixed-angle means for comparison output. Missing entries are 0.
struct PublishedCostRow {
  double theta;
  double epsilon;
  double c_sk, c_on, c_on_multi, c_off, c_off_multi;
};
std::span<const PublishedCostRow> published_cost_table();

// --- Export -----------------------------------------------------------------

/// CSV, header `scheme,epsilon,target,online,offline`, doubles at 17 digits.
void write_samples_csv(std::ostream& out, std::span<const ScalingSample> samples);
std::vector<ScalingSample> read_samples_csv(std::istream& in);

/// JSON summary of a study: both fits with constants and sample counts.
std::string study_summary_json(const ScalingStudy& study, const StudyOptions& options);

/// Writes `content` to `path`; throws std::runtime_error on I/O failure.
void write_file(const std::string& path, const std::string& content);

}  // namespace hladder
