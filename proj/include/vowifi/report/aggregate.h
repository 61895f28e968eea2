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


#ifndef VOWIFI_REPORT_AGGREGATE_H_
#define VOWIFI_REPORT_AGGREGATE_H_

#include <array>
#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vowifi/core/region.h"
#include "vowifi/report/regions.h"

namespace vowifi::report {

enum class Scope { kL1Server, kL2Server, kL1Client, kL2Client, kDesAny };

inline constexpr std::array<Scope, 5> kAllScopes{Scope::kL1Server, Scope::kL2Server,
                                                 Scope::kL1Client, Scope::kL2Client,
                                                 Scope::kDesAny};

const char* ScopeName(Scope scope);
std::optional<Scope> ParseScope(std::string_view name);

// Counts of flag == true per region. `unprobed` counts findings whose flag
// for this scope is unknown; they never enter the region counts.
struct AggregateRow {
  Scope scope = Scope::kL1Server;
  std::array<std::uint32_t, kAllRegions.size()> counts{};
  std::uint32_t total = 0;
  std::uint32_t unprobed = 0;

  std::uint32_t count(Region r) const { return counts[static_cast<std::size_t>(r)]; }
  bool operator==(const AggregateRow&) const = default;
};

enum class Flag { kFalse, kTrue, kUnknown };

// The parts of an EndpointFinding or ClientFinding line that reports use.
struct FindingRecord {
  bool client = false;
  std::string id;  // fqdn or file
  std::string mcc;
  std::string region;
  Flag l1_null = Flag::kUnknown;
  Flag l2_null = Flag::kUnknown;
  Flag des = Flag::kUnknown;  // l1_des || l2_des, or uses_des
};

// Throws ReportError(kSchemaError) naming `line`.
FindingRecord ParseFindingLine(std::string_view text, std::size_t line = 0);

class Aggregator {
 public:
  explicit Aggregator(const RegionMap* regions = nullptr);

  void Add(const FindingRecord& finding);
  // Blank lines are skipped; line numbers count from `first_line`.
  void AddStream(std::istream& in, std::size_t first_line = 1);

  // One row per scope, kAllScopes order.
  std::vector<AggregateRow> Rows() const { return rows_; }
  std::size_t findings() const { return findings_; }

 private:
  const RegionMap* regions_;
  std::vector<AggregateRow> rows_;
  std::size_t findings_ = 0;
};

std::vector<AggregateRow> Aggregate(std::istream& in, const RegionMap* regions = nullptr);

// Row-wise sum of two aggregates over the same scopes.
std::vector<AggregateRow> Merge(const std::vector<AggregateRow>& a,
                                const std::vector<AggregateRow>& b);

bool Valid(const AggregateRow& row);

}  // namespace vowifi::report

#endif  // VOWIFI_REPORT_AGGREGATE_H_
