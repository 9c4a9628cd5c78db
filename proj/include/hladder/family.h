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

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace hladder {

/// Base resource of a ladder: the |H> state itself or one of the three
/// four-qubit factory outputs.
enum class Family { kH = 0, kPsi0 = 1, kPsi1 = 2, kPsi2 = 3 };

inline constexpr std::array<Family, 4> kAllFamilies = {Family::kH, Family::kPsi0, Family::kPsi1,
                                                       Family::kPsi2};

/// "H", "psi0", "psi1", "psi2".
std::string_view family_name(Family family);

/// Case-insensitive inverse of family_name. Throws std::invalid_argument.
Family parse_family(std::string_view text);

/// Comma-separated list, e.g. "H,psi0,psi2"; "all" selects every family.
std::vector<Family> parse_family_list(std::string_view text);

std::string format_family_list(const std::vector<Family>& families);

}  // namespace hladder
