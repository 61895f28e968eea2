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

#ifndef VOWIFI_CORE_REGION_H_
#define VOWIFI_CORE_REGION_H_

#include <array>
#include <optional>
#include <string_view>

namespace vowifi {

enum class Region { kAfrica, kAsia, kEurope, kNorthAmerica, kSouthAmerica, kOceania, kUnknown };

// Report column order.
inline constexpr std::array<Region, 7> kAllRegions = {
    Region::kAfrica,       Region::kAsia,    Region::kEurope,  Region::kNorthAmerica,
    Region::kSouthAmerica, Region::kOceania, Region::kUnknown};

std::string_view RegionName(Region region);

// Accepts the canonical names ("NorthAmerica") and their spaced or
// underscored forms ("North America", "north_america").
std::optional<Region> ParseRegion(std::string_view text);

}  // namespace vowifi

#endif  // VOWIFI_CORE_REGION_H_
