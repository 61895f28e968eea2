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

#include "vowifi/probe/classify.h"

#include <algorithm>

namespace vowifi::probe {

std::string_view TriName(Tri t) {
  switch (t) {
    case Tri::kFalse: return "false";
    case Tri::kTrue: return "true";
    case Tri::kUnknown: break;
  }
  return "unknown";
}

std::optional<Tri> ParseTri(std::string_view text) {
  if (text == "true") return Tri::kTrue;
  if (text == "false") return Tri::kFalse;
  if (text == "unknown") return Tri::kUnknown;
  return std::nullopt;
}

Tri LayerFlag(const std::vector<ComboResult>& layer, std::initializer_list<std::uint16_t> encr_ids) {
  bool definitive = false;
  for (const ComboResult& r : layer) {
    if (r.verdict.kind == VerdictKind::kAccepted) {
      const auto encr = r.verdict.selected.Get(ike::TransformType::kEncr);
      if (encr && std::find(encr_ids.begin(), encr_ids.end(), encr->id) != encr_ids.end()) {
        return Tri::kTrue;
      }
    }
    definitive = definitive || r.verdict.definitive();
  }
  return definitive ? Tri::kFalse : Tri::kUnknown;
}

void RecomputeFlags(EndpointFinding& f) {
  f.l1_null = LayerFlag(f.l1, {ike::encr::kNull});
  f.l1_des = LayerFlag(f.l1, {ike::encr::kDes, ike::encr::k3Des});
  f.l2_null = LayerFlag(f.l2, {ike::encr::kNull});
  f.l2_des = LayerFlag(f.l2, {ike::encr::kDes, ike::encr::k3Des});
}

EndpointFinding ClassifyEndpoint(const std::vector<ProbeOutcome>& outcomes, const std::string& fqdn,
                                 const std::vector<std::string>& addresses) {
  EndpointFinding f;
  f.fqdn = fqdn;
  f.addresses = addresses;
  if (!addresses.empty()) f.probed_address = addresses.front();
  for (const ProbeOutcome& o : outcomes) {
    ComboResult r{o.combo.key(), o.verdict, o.rtt_ms};
    (o.combo.layer == Layer::kL1 ? f.l1 : f.l2).push_back(std::move(r));
  }
  RecomputeFlags(f);
  return f;
}

}  // namespace vowifi::probe
