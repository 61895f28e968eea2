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


#ifndef VOWIFI_REPORT_REGIONS_H_
#define VOWIFI_REPORT_REGIONS_H_

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "vowifi/core/region.h"

namespace vowifi::report {

enum class ReportErrc { kSchemaError, kRegionMapError, kFormatError };

class ReportError : public std::runtime_error {
 public:
  ReportError(ReportErrc code, const std::string& detail, std::size_t line = 0);
  ReportErrc code() const { return code_; }
  std::size_t line() const { return line_; }

 private:
  ReportErrc code_;
  std::size_t line_;
};

// mcc -> region. Lines are "mcc,region"; "D*" sets the default for every
// MCC starting with digit D. '#' lines and a "mcc,region" header are skipped.
class RegionMap {
 public:
  static RegionMap Parse(std::string_view csv);
  static RegionMap Default();

  void Set(const std::string& mcc, Region region) { exact_[mcc] = region; }
  Region Lookup(std::string_view mcc) const;
  bool empty() const { return exact_.empty() && zones_.empty(); }

 private:
  std::map<std::string, Region, std::less<>> exact_;
  std::map<char, Region> zones_;
};

// The finding's own region when it names one, else the map's entry for
// `mcc`, else Unknown.
Region ResolveRegion(std::string_view region, std::string_view mcc, const RegionMap* map);

}  // namespace vowifi::report

#endif  // VOWIFI_REPORT_REGIONS_H_
