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

#include "hladder/family.h"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace hladder {

std::string_view family_name(Family family) {
  switch (family) {
    case Family::kH:
      return "H";
    case Family::kPsi0:
      return "psi0";
    case Family::kPsi1:
      return "psi1";
    case Family::kPsi2:
      return "psi2";
  }
  throw std::invalid_argument("unknown family");
}

Family parse_family(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (Family f : kAllFamilies) {
    std::string name(family_name(f));
    std::transform(name.begin(), name.end(), name.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == name) return f;
  }
  throw std::invalid_argument("unknown family '" + std::string(text) + "' (expected H, psi0, psi1 or psi2)");
}

std::vector<Family> parse_family_list(std::string_view text) {
  if (text == "all") return {kAllFamilies.begin(), kAllFamilies.end()};
  std::vector<Family> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    Family f = parse_family(text.substr(start, comma - start));
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
    start = comma + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string format_family_list(const std::vector<Family>& families) {
  std::string out;
  for (Family f : families) {
    if (!out.empty()) out += ',';
    out += family_name(f);
  }
  return out;
}

}  // namespace hladder
