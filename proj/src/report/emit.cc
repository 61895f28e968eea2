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


#include "vowifi/report/emit.h"

#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "vowifi/report/regions.h"

namespace vowifi::report {
namespace {

using nlohmann::ordered_json;

[[noreturn]] void Bad(const std::string& what, std::size_t line = 0) {
  throw ReportError(ReportErrc::kFormatError, what, line);
}

std::vector<std::string> Header() {
  std::vector<std::string> h{"scope"};
  for (Region r : kAllRegions) h.emplace_back(RegionName(r));
  h.emplace_back("total");
  h.emplace_back("unprobed");
  return h;
}

std::vector<std::string> Cells(const AggregateRow& row) {
  std::vector<std::string> c{ScopeName(row.scope)};
  for (auto n : row.counts) c.push_back(std::to_string(n));
  c.push_back(std::to_string(row.total));
  c.push_back(std::to_string(row.unprobed));
  return c;
}

std::string Summary(const AggregateRow& row) {
  std::ostringstream out;
  out << ScopeName(row.scope) << ": " << row.total;
  std::string sep = " (";
  for (Region r : kAllRegions) {
    if (row.count(r) == 0) continue;
    out << sep << RegionName(r) << ": " << row.count(r);
    sep = ", ";
  }
  if (sep == ", ") out << ")";
  out << "; " << row.unprobed << " unprobed";
  return out.str();
}

std::uint32_t Count(const std::string& s, std::size_t line) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 9) {
    Bad("bad count '" + s + "'", line);
  }
  return static_cast<std::uint32_t>(std::stoul(s));
}

void CheckTotal(const AggregateRow& row, std::size_t line) {
  if (!Valid(row)) Bad(std::string(ScopeName(row.scope)) + ": total differs from region sum", line);
}

}  // namespace

std::optional<Format> ParseFormat(std::string_view name) {
  if (name == "text") return Format::kText;
  if (name == "csv") return Format::kCsv;
  if (name == "json") return Format::kJson;
  return std::nullopt;
}

std::string EmitReport(const std::vector<AggregateRow>& rows, Format format) {
  const auto header = Header();
  std::ostringstream out;
  switch (format) {
    case Format::kCsv: {
      std::vector<std::vector<std::string>> lines{header};
      for (const auto& row : rows) lines.push_back(Cells(row));
      for (const auto& cells : lines) {
        for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
        out << "\n";
      }
      break;
    }
    case Format::kText: {
      std::vector<std::size_t> width;
      for (const auto& h : header) width.push_back(h.size());
      width[0] = std::max<std::size_t>(width[0], 9);
      auto print = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
          if (i == 0) {
            out << std::left << std::setw(static_cast<int>(width[i])) << cells[i];
          } else {
            out << "  " << std::right << std::setw(static_cast<int>(width[i])) << cells[i];
          }
        }
        out << "\n";
      };
      print(header);
      for (const auto& row : rows) print(Cells(row));
      if (!rows.empty()) out << "\n";
      for (const auto& row : rows) out << Summary(row) << "\n";
      break;
    }
    case Format::kJson: {
      ordered_json doc;
      doc["rows"] = ordered_json::array();
      for (const auto& row : rows) {
        ordered_json r;
        r["scope"] = ScopeName(row.scope);
        ordered_json regions = ordered_json::object();
        for (Region reg : kAllRegions) regions[std::string(RegionName(reg))] = row.count(reg);
        r["regions"] = regions;
        r["total"] = row.total;
        r["unprobed"] = row.unprobed;
        doc["rows"].push_back(r);
      }
      out << doc.dump(2) << "\n";
      break;
    }
  }
  return out.str();
}

std::vector<AggregateRow> ParseCsvReport(std::string_view csv) {
  std::istringstream in{std::string(csv)};
  std::string line;
  std::vector<AggregateRow> rows;
  const auto header = Header();
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
    if (n == 1) {
      if (cells != header) Bad("unexpected CSV header", n);
      continue;
    }
    if (line.empty()) continue;
    if (cells.size() != header.size()) Bad("expected " + std::to_string(header.size()) + " fields", n);
    const auto scope = ParseScope(cells[0]);
    if (!scope) Bad("unknown scope '" + cells[0] + "'", n);
    AggregateRow row;
    row.scope = *scope;
    for (std::size_t i = 0; i < row.counts.size(); ++i) row.counts[i] = Count(cells[1 + i], n);
    row.total = Count(cells[1 + row.counts.size()], n);
    row.unprobed = Count(cells[2 + row.counts.size()], n);
    CheckTotal(row, n);
    rows.push_back(row);
  }
  if (n == 0) Bad("empty CSV document");
  return rows;
}

std::vector<AggregateRow> ParseJsonReport(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    Bad(std::string("not JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array()) Bad("missing rows array");
  std::vector<AggregateRow> rows;
  try {
    for (const auto& r : doc["rows"]) {
      const auto scope = ParseScope(r.at("scope").get<std::string>());
      if (!scope) Bad("unknown scope");
      AggregateRow row;
      row.scope = *scope;
      const auto& regions = r.at("regions");
      if (regions.size() != kAllRegions.size()) Bad("regions must list every region");
      for (Region reg : kAllRegions) {
        row.counts[static_cast<std::size_t>(reg)] =
            regions.at(std::string(RegionName(reg))).get<std::uint32_t>();
      }
      row.total = r.at("total").get<std::uint32_t>();
      row.unprobed = r.at("unprobed").get<std::uint32_t>();
      CheckTotal(row, 0);
      rows.push_back(row);
    }
  } catch (const ordered_json::exception& e) {
    Bad(std::string("malformed row: ") + e.what());
  }
  return rows;
}

}  // namespace vowifi::report
