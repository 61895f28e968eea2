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


#include "vowifi/report/regions.h"

#include <cctype>
#include <sstream>

namespace vowifi::report {
namespace {

std::string_view Trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool AllDigits(std::string_view s) {
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return !s.empty();
}

}  // namespace

ReportError::ReportError(ReportErrc code, const std::string& detail, std::size_t line)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + detail : detail),
      code_(code),
      line_(line) {}

RegionMap RegionMap::Parse(std::string_view csv) {
  RegionMap map;
  std::istringstream in{std::string(csv)};
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const std::string_view line = Trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto comma = line.find(',');
    if (comma == std::string_view::npos) {
      throw ReportError(ReportErrc::kRegionMapError, "expected mcc,region", number);
    }
    const std::string_view key = Trim(line.substr(0, comma));
    const std::string_view value = Trim(line.substr(comma + 1));
    if (key == "mcc" && value == "region") continue;
    const auto region = ParseRegion(value);
    if (!region) {
      throw ReportError(ReportErrc::kRegionMapError, "unknown region '" + std::string(value) + "'",
                        number);
    }
    if (key.size() == 2 && key[1] == '*' && std::isdigit(static_cast<unsigned char>(key[0]))) {
      map.zones_[key[0]] = *region;
    } else if (key.size() == 3 && AllDigits(key)) {
      map.exact_[std::string(key)] = *region;
    } else {
      throw ReportError(ReportErrc::kRegionMapError, "bad mcc '" + std::string(key) + "'", number);
    }
  }
  return map;
}

Region RegionMap::Lookup(std::string_view mcc) const {
  if (const auto it = exact_.find(mcc); it != exact_.end()) return it->second;
  if (mcc.size() == 3 && AllDigits(mcc)) {
    if (const auto it = zones_.find(mcc[0]); it != zones_.end()) return it->second;
  }
  return Region::kUnknown;
}

Region ResolveRegion(std::string_view region, std::string_view mcc, const RegionMap* map) {
  if (const auto named = ParseRegion(region); named && *named != Region::kUnknown) return *named;
  return map ? map->Lookup(mcc) : Region::kUnknown;
}

}  // namespace vowifi::report
