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


#include "vowifi/mbn/document.h"

#include <string_view>

namespace vowifi::mbn {

const char* McfgErrcName(McfgErrc code) {
  switch (code) {
    case McfgErrc::kNotMcfg: return "NotMcfg";
    case McfgErrc::kTruncated: return "Truncated";
    case McfgErrc::kBadTrailer: return "BadTrailer";
    case McfgErrc::kSpecInvalid: return "SpecInvalid";
    case McfgErrc::kRuleParseError: return "RuleParseError";
  }
  return "?";
}

McfgError::McfgError(McfgErrc code, const std::string& detail, std::size_t offset)
    : std::runtime_error(std::string(McfgErrcName(code)) + ": " + detail),
      code_(code),
      offset_(offset) {}

std::vector<std::pair<std::string, Bytes>> ExtractEmbeddedFiles(const McfgDocument& doc) {
  std::vector<std::pair<std::string, Bytes>> out;
  for (const auto& item : doc.items) {
    if (const auto* efs = std::get_if<EfsFile>(&item.kind)) out.emplace_back(efs->path, efs->content);
  }
  return out;
}

namespace {

std::string_view Trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<std::pair<std::string, std::string>> MetadataPairs(const Trailer& trailer) {
  std::vector<std::pair<std::string, std::string>> out;
  const std::string text(trailer.metadata.begin(), trailer.metadata.end());
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find_first_of(";\n", pos);
    const std::string_view field =
        Trim(std::string_view(text).substr(pos, end == std::string::npos ? std::string::npos : end - pos));
    const auto eq = field.find('=');
    if (eq != std::string_view::npos && eq > 0) {
      out.emplace_back(std::string(Trim(field.substr(0, eq))), std::string(Trim(field.substr(eq + 1))));
    }
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  return out;
}

}  // namespace vowifi::mbn
