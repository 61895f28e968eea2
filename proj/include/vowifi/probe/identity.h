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

#ifndef VOWIFI_PROBE_IDENTITY_H_
#define VOWIFI_PROBE_IDENTITY_H_

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "vowifi/core/region.h"

namespace vowifi::probe {

struct OperatorIdentity {
  std::string mcc;  // exactly 3 digits
  std::string mnc;  // 2 or 3 digits
  std::string label;
  Region region = Region::kUnknown;

  bool operator==(const OperatorIdentity&) const = default;
};

// Throws ProbeError(kMalformedIdentity).
void ValidateIdentity(const OperatorIdentity& op);

// epdg.epc.mnc<MNC>.mcc<MCC>.pub.3gppnetwork.org with the MNC padded to
// three digits (3GPP TS 23.003).
std::string GenerateEpdgFqdn(const OperatorIdentity& op);

// Test-range PLMN 001/01 with an all-zero MSIN.
inline constexpr std::string_view kDefaultImsi = "001010000000000";

// Builds the EAP permanent identity 0<IMSI>@nai.epc.mnc<MNC>.mcc<MCC>.3gppnetwork.org.
// `imsi_template` may contain {mcc} and {mnc}; the expansion must be
// 6 to 15 digits.
std::string BuildNai(std::string_view imsi_template, const OperatorIdentity& op);

// mcc,mnc,label,region per line. A header line starting with "mcc" and
// lines starting with '#' are skipped. Unknown or empty regions map to
// Region::kUnknown. Throws ProbeError(kMalformedIdentity) naming the line.
std::vector<OperatorIdentity> ParseOperatorsCsv(std::istream& in);

}  // namespace vowifi::probe

#endif  // VOWIFI_PROBE_IDENTITY_H_
