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

#ifndef VOWIFI_PROBE_FINDING_JSON_H_
#define VOWIFI_PROBE_FINDING_JSON_H_

#include <string>
#include <string_view>

#include "vowifi/probe/classify.h"

namespace vowifi::probe {

// One JSON object per line:
//   {"kind":"endpoint","fqdn":...,"mcc":...,"mnc":...,"label":...,
//    "region":...,"addresses":[...],"probed_address":...,
//    "l1_null":"true|false|unknown","l1_des":...,"l2_null":...,"l2_des":...,
//    "l1":{"<suite>":{"verdict":"Accepted","selected":"<suite>","rtt_ms":..}},
//    "l2":{...},"error":""}
// Rejected verdicts carry "code" and "code_name", GroupMismatch "group",
// NetworkError "detail".
std::string SerializeFinding(const EndpointFinding& finding);

// Throws ProbeError(kSchemaError).
EndpointFinding ParseFinding(std::string_view line);

}  // namespace vowifi::probe

#endif  // VOWIFI_PROBE_FINDING_JSON_H_
