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


#include "vowifi/report/aggregate.h"

#include <json.hpp>
#include <string>

namespace vowifi::report {
namespace {

using nlohmann::json;

[[noreturn]] void Schema(std::size_t line, const std::string& what) {
  throw ReportError(ReportErrc::kSchemaError, what, line);
}

const json& Field(const json& j, const char* name, std::size_t line) {
  const auto it = j.find(name);
  if (it == j.end()) Schema(line, std::string("missing field '") + name + "'");
  return *it;
}

std::string StringField(const json& j, const char* name, std::size_t line) {
  const json& v = Field(j, name, line);
  if (!v.is_string()) Schema(line, std::string("field '") + name + "' must be a string");
  return v.get<std::string>();
}

Flag TriField(const json& j, const char* name, std::size_t line) {
  const std::string v = StringField(j, name, line);
  if (v == "true") return Flag::kTrue;
  if (v == "false") return Flag::kFalse;
  if (v == "unknown") return Flag::kUnknown;
  Schema(line, std::string("field '") + name + "' must be \"true\", \"false\" or \"unknown\"");
}

Flag BoolField(const json& j, const char* name, std::size_t line) {
  const json& v = Field(j, name, line);
  if (!v.is_boolean()) Schema(line, std::string("field '") + name + "' must be a boolean");
  return v.get<bool>() ? Flag::kTrue : Flag::kFalse;
}

Flag Either(Flag a, Flag b) {
  if (a == Flag::kTrue || b == Flag::kTrue) return Flag::kTrue;
  if (a == Flag::kUnknown || b == Flag::kUnknown) return Flag::kUnknown;
  return Flag::kFalse;
}

}  // namespace

const char* ScopeName(Scope scope) {
  switch (scope) {
    case Scope::kL1Server: return "L1_server";
    case Scope::kL2Server: return "L2_server";
    case Scope::kL1Client: return "L1_client";
    case Scope::kL2Client: return "L2_client";
    case Scope::kDesAny: return "DES_any";
  }
  return "?";
}

std::optional<Scope> ParseScope(std::string_view name) {
  for (Scope s : kAllScopes) {
    if (name == ScopeName(s)) return s;
  }
  return std::nullopt;
}

FindingRecord ParseFindingLine(std::string_view text, std::size_t line) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    Schema(line, std::string("not JSON: ") + e.what());
  }
  if (!j.is_object()) Schema(line, "finding must be a JSON object");
  FindingRecord r;
  const std::string kind = StringField(j, "kind", line);
  r.mcc = StringField(j, "mcc", line);
  r.region = StringField(j, "region", line);
  if (kind == "endpoint") {
    r.id = StringField(j, "fqdn", line);
    r.l1_null = TriField(j, "l1_null", line);
    r.l2_null = TriField(j, "l2_null", line);
    r.des = Either(TriField(j, "l1_des", line), TriField(j, "l2_des", line));
  } else if (kind == "client") {
    r.client = true;
    r.id = StringField(j, "file", line);
    r.l1_null = BoolField(j, "l1_null", line);
    r.l2_null = BoolField(j, "l2_null", line);
    r.des = BoolField(j, "uses_des", line);
  } else {
    Schema(line, "kind must be \"endpoint\" or \"client\"");
  }
  return r;
}

Aggregator::Aggregator(const RegionMap* regions) : regions_(regions) {
  for (Scope s : kAllScopes) rows_.push_back(AggregateRow{s, {}, 0, 0});
}

void Aggregator::Add(const FindingRecord& f) {
  ++findings_;
  const Region region = ResolveRegion(f.region, f.mcc, regions_);
  auto bump = [&](Scope scope, Flag flag) {
    AggregateRow& row = rows_[static_cast<std::size_t>(scope)];
    if (flag == Flag::kTrue) {
      ++row.counts[static_cast<std::size_t>(region)];
      ++row.total;
    } else if (flag == Flag::kUnknown) {
      ++row.unprobed;
    }
  };
  bump(f.client ? Scope::kL1Client : Scope::kL1Server, f.l1_null);
  bump(f.client ? Scope::kL2Client : Scope::kL2Server, f.l2_null);
  bump(Scope::kDesAny, f.des);
}

void Aggregator::AddStream(std::istream& in, std::size_t first_line) {
  std::string line;
  for (std::size_t n = first_line; std::getline(in, line); ++n) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Add(ParseFindingLine(line, n));
  }
}

std::vector<AggregateRow> Aggregate(std::istream& in, const RegionMap* regions) {
  Aggregator agg(regions);
  agg.AddStream(in);
  return agg.Rows();
}

std::vector<AggregateRow> Merge(const std::vector<AggregateRow>& a,
                                const std::vector<AggregateRow>& b) {
  std::vector<AggregateRow> out = a;
  for (const AggregateRow& rb : b) {
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const AggregateRow& r) { return r.scope == rb.scope; });
    if (it == out.end()) {
      out.push_back(rb);
      continue;
    }
    for (std::size_t i = 0; i < it->counts.size(); ++i) it->counts[i] += rb.counts[i];
    it->total += rb.total;
    it->unprobed += rb.unprobed;
  }
  return out;
}

bool Valid(const AggregateRow& row) {
  std::uint64_t sum = 0;
  for (auto c : row.counts) sum += c;
  return sum == row.total;
}

}  // namespace vowifi::report
