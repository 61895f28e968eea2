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


#ifndef VOWIFI_REPORT_EMIT_H_
#define VOWIFI_REPORT_EMIT_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vowifi/report/aggregate.h"

namespace vowifi::report {

enum class Format { kText, kCsv, kJson };

std::optional<Format> ParseFormat(std::string_view name);

// CSV: scope,Africa,Asia,Europe,NorthAmerica,SouthAmerica,Oceania,Unknown,total,unprobed
std::string EmitReport(const std::vector<AggregateRow>& rows, Format format);

// Throw ReportError(kFormatError).
std::vector<AggregateRow> ParseCsvReport(std::string_view csv);
std::vector<AggregateRow> ParseJsonReport(std::string_view json);

}  // namespace vowifi::report

#endif  // VOWIFI_REPORT_EMIT_H_
