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

// Printed reference values. Entries carry four significant figures and are
// sometimes truncated rather than rounded.

#include <array>
#include <cmath>

namespace hladder::testing {

/// 2 theta_i for the H ladder, i = 0..16.
inline constexpr std::array<double, 17> kTableH = {
    7.853e-1, 3.398e-1, 1.419e-1, 5.886e-2, 2.439e-2, 1.010e-2, 4.184e-3, 1.733e-3, 7.179e-4,
    2.974e-4, 1.232e-4, 5.102e-5, 2.113e-5, 8.753e-6, 3.626e-6, 1.502e-6, 6.221e-7,
};

/// 2 phi^j_i, i = 0..8, for j = 0, 1, 2.
inline constexpr std::array<std::array<double, 9>, 3> kTablePsi = {{
    {4.456e-1, 1.871e-1, 7.770e-2, 3.220e-2, 1.334e-2, 5.525e-3, 2.288e-3, 9.479e-4, 3.926e-4},
    {5.698e-1, 2.415e-1, 1.004e-1, 4.162e-2, 1.724e-2, 7.142e-3, 2.959e-3, 1.225e-3, 5.076e-4},
    {6.898e-1, 2.954e-1, 1.231e-1, 5.105e-2, 2.115e-2, 8.761e-3, 3.629e-3, 1.503e-3, 6.226e-4},
}};

/// True when `computed` agrees with a four-significant-figure `printed`
/// value: off by at most one unit in the last printed digit.
inline bool matches_four_figures(double computed, double printed) {
  const double unit = std::pow(10.0, std::floor(std::log10(std::abs(printed))) - 3);
  return std::abs(computed - printed) <= unit * (1 + 1e-9);
}

}  // namespace hladder::testing
