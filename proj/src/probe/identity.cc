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

#include "vowifi/probe/identity.h"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "vowifi/probe/errors.h"

namespace vowifi::probe {
namespace {

bool AllDigits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::string Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

std::string PaddedMnc(const std::string& mnc) { return mnc.size() == 2 ? "0" + mnc : mnc; }

void ReplaceAll(std::string& s, std::string_view token, const std::string& value) {
  for (std::size_t pos = s.find(token); pos != std::string::npos;
       pos = s.find(token, pos + value.size())) {
    s.replace(pos, token.size(), value);
  }
}

}  // namespace

void ValidateIdentity(const OperatorIdentity& op) {
  if (op.mcc.size() != 3 || !AllDigits(op.mcc)) {
    throw ProbeError(ProbeErrc::kMalformedIdentity, "mcc must be 3 digits: '" + op.mcc + "'");
  }
  if (op.mnc.size() < 2 || op.mnc.size() > 3 || !AllDigits(op.mnc)) {
    throw ProbeError(ProbeErrc::kMalformedIdentity, "mnc must be 2 or 3 digits: '" + op.mnc + "'");
  }
}

std::string GenerateEpdgFqdn(const OperatorIdentity& op) {
  ValidateIdentity(op);
  return "epdg.epc.mnc" + PaddedMnc(op.mnc) + ".mcc" + op.mcc + ".pub.3gppnetwork.org";
}

std::string BuildNai(std::string_view imsi_template, const OperatorIdentity& op) {
  ValidateIdentity(op);
  std::string imsi(imsi_template);
  ReplaceAll(imsi, "{mcc}", op.mcc);
  ReplaceAll(imsi, "{mnc}", op.mnc);
  if (imsi.size() < 6 || imsi.size() > 15 || !AllDigits(imsi)) {
    throw ProbeError(ProbeErrc::kMalformedIdentity, "IMSI template expands to '" + imsi + "'");
  }
  return "0" + imsi + "@nai.epc.mnc" + PaddedMnc(op.mnc) + ".mcc" + op.mcc + ".3gppnetwork.org";
}

std::vector<OperatorIdentity> ParseOperatorsCsv(std::istream& in) {
  std::vector<OperatorIdentity> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string trimmed = Trim(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    std::vector<std::string> fields;
    std::stringstream ss(trimmed);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(Trim(field));
    if (number == 1 && !fields.empty() && fields[0] == "mcc") continue;
    if (fields.size() < 2) {
      throw ProbeError(ProbeErrc::kMalformedIdentity,
                       "line " + std::to_string(number) + ": expected mcc,mnc[,label[,region]]");
    }
    OperatorIdentity op{fields[0], fields[1], fields.size() > 2 ? fields[2] : "", Region::kUnknown};
    if (fields.size() > 3 && !fields[3].empty()) {
      op.region = ParseRegion(fields[3]).value_or(Region::kUnknown);
    }
    try {
      ValidateIdentity(op);
    } catch (const ProbeError& e) {
      throw ProbeError(ProbeErrc::kMalformedIdentity,
                       "line " + std::to_string(number) + ": " + e.what());
    }
    out.push_back(std::move(op));
  }
  return out;
}

}  // namespace vowifi::probe
