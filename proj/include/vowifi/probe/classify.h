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

#ifndef VOWIFI_PROBE_CLASSIFY_H_
#define VOWIFI_PROBE_CLASSIFY_H_

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vowifi/probe/identity.h"
#include "vowifi/probe/prober.h"

namespace vowifi::probe {

enum class Tri { kFalse, kTrue, kUnknown };

std::string_view TriName(Tri t);
std::optional<Tri> ParseTri(std::string_view text);

struct ComboResult {
  std::string combo;
  Verdict verdict;
  double rtt_ms = 0;

  bool operator==(const ComboResult&) const = default;
};

struct EndpointFinding {
  OperatorIdentity op;
  std::string fqdn;
  std::vector<std::string> addresses;
  std::string probed_address;
  std::vector<ComboResult> l1;  // probing order
  std::vector<ComboResult> l2;
  Tri l1_null = Tri::kUnknown;
  Tri l1_des = Tri::kUnknown;  // DES or 3DES
  Tri l2_null = Tri::kUnknown;
  Tri l2_des = Tri::kUnknown;
  std::string error;  // resolution failure, empty otherwise

  bool operator==(const EndpointFinding&) const = default;
};

// True if an Accepted verdict selected one of `encr_ids`; otherwise
// false if any verdict of the layer is definitive; otherwise unknown.
Tri LayerFlag(const std::vector<ComboResult>& layer, std::initializer_list<std::uint16_t> encr_ids);

EndpointFinding ClassifyEndpoint(const std::vector<ProbeOutcome>& outcomes, const std::string& fqdn,
                                 const std::vector<std::string>& addresses);

// Recomputes the four flags from the stored per-layer verdicts.
void RecomputeFlags(EndpointFinding& finding);

}  // namespace vowifi::probe

#endif  // VOWIFI_PROBE_CLASSIFY_H_
