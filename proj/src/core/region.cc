// Copyright 2026 The vowifi-audit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vowifi/core/region.h"

#include <cctype>
#include <string>

namespace vowifi {

std::string_view RegionName(Region region) {
  switch (region) {
    case Region::kAfrica: return "Africa";
    case Region::kAsia: return "Asia";
    case Region::kEurope: return "Europe";
    case Region::kNorthAmerica: return "NorthAmerica";
    case Region::kSouthAmerica: return "SouthAmerica";
    case Region::kOceania: return "Oceania";
    case Region::kUnknown: break;
  }
  return "Unknown";
}

std::optional<Region> ParseRegion(std::string_view text) {
  std::string folded;
  for (char c : text) {
    if (c == ' ' || c == '_' || c == '-') continue;
    folded.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  for (Region r : kAllRegions) {
    std::string name;
    for (char c : RegionName(r)) {
      name.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    if (name == folded) return r;
  }
  return std::nullopt;
}

}  // namespace vowifi
