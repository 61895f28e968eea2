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

#include "vowifi/probe/finding_json.h"

#include <json.hpp>

#include "vowifi/probe/errors.h"

namespace vowifi::probe {
namespace {

using Json = nlohmann::ordered_json;

Json VerdictJson(const ComboResult& r) {
  Json j;
  j["verdict"] = VerdictKindName(r.verdict.kind);
  switch (r.verdict.kind) {
    case VerdictKind::kAccepted: j["selected"] = r.verdict.selected.ToString(); break;
    case VerdictKind::kRejected:
      j["code"] = r.verdict.code;
      j["code_name"] = r.verdict.code == kEapStageNoSa
                           ? std::string("EAP_STAGE_NO_SA")
                           : ike::NotifyName(static_cast<std::uint16_t>(r.verdict.code));
      break;
    case VerdictKind::kGroupMismatch: j["group"] = r.verdict.group; break;
    case VerdictKind::kNetworkError: j["detail"] = r.verdict.detail; break;
    default: break;
  }
  j["rtt_ms"] = r.rtt_ms;
  return j;
}

Json LayerJson(const std::vector<ComboResult>& layer) {
  Json j = Json::object();
  for (const ComboResult& r : layer) j[r.combo] = VerdictJson(r);
  return j;
}

std::vector<ComboResult> ParseLayer(const Json& j) {
  std::vector<ComboResult> out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    ComboResult r;
    r.combo = it.key();
    const auto kind = ParseVerdictKind(v.at("verdict").get<std::string>());
    if (!kind) throw std::invalid_argument("unknown verdict " + v.at("verdict").dump());
    r.verdict.kind = *kind;
    switch (*kind) {
      case VerdictKind::kAccepted:
        r.verdict.selected = ike::Suite::Parse(v.at("selected").get<std::string>());
        break;
      case VerdictKind::kRejected: r.verdict.code = v.at("code").get<std::uint32_t>(); break;
      case VerdictKind::kGroupMismatch: r.verdict.group = v.at("group").get<std::uint16_t>(); break;
      case VerdictKind::kNetworkError: r.verdict.detail = v.at("detail").get<std::string>(); break;
      default: break;
    }
    r.rtt_ms = v.value("rtt_ms", 0.0);
    out.push_back(std::move(r));
  }
  return out;
}

Tri ParseFlag(const Json& j, const char* name) {
  const auto t = ParseTri(j.at(name).get<std::string>());
  if (!t) throw std::invalid_argument(std::string("bad tri-state for ") + name);
  return *t;
}

}  // namespace

std::string SerializeFinding(const EndpointFinding& f) {
  Json j;
  j["kind"] = "endpoint";
  j["fqdn"] = f.fqdn;
  j["mcc"] = f.op.mcc;
  j["mnc"] = f.op.mnc;
  j["label"] = f.op.label;
  j["region"] = RegionName(f.op.region);
  j["addresses"] = f.addresses;
  j["probed_address"] = f.probed_address;
  j["l1_null"] = TriName(f.l1_null);
  j["l1_des"] = TriName(f.l1_des);
  j["l2_null"] = TriName(f.l2_null);
  j["l2_des"] = TriName(f.l2_des);
  j["l1"] = LayerJson(f.l1);
  j["l2"] = LayerJson(f.l2);
  j["error"] = f.error;
  return j.dump();
}

EndpointFinding ParseFinding(std::string_view line) {
  try {
    const Json j = Json::parse(line);
    if (j.value("kind", "") != "endpoint") throw std::invalid_argument("kind is not \"endpoint\"");
    EndpointFinding f;
    f.fqdn = j.at("fqdn").get<std::string>();
    f.op.mcc = j.value("mcc", "");
    f.op.mnc = j.value("mnc", "");
    f.op.label = j.value("label", "");
    f.op.region = ParseRegion(j.value("region", "Unknown")).value_or(Region::kUnknown);
    f.addresses = j.value("addresses", std::vector<std::string>{});
    f.probed_address = j.value("probed_address", "");
    f.l1_null = ParseFlag(j, "l1_null");
    f.l1_des = ParseFlag(j, "l1_des");
    f.l2_null = ParseFlag(j, "l2_null");
    f.l2_des = ParseFlag(j, "l2_des");
    if (j.contains("l1")) f.l1 = ParseLayer(j.at("l1"));
    if (j.contains("l2")) f.l2 = ParseLayer(j.at("l2"));
    f.error = j.value("error", "");
    return f;
  } catch (const Json::exception& e) {
    throw ProbeError(ProbeErrc::kSchemaError, e.what());
  } catch (const std::invalid_argument& e) {
    throw ProbeError(ProbeErrc::kSchemaError, e.what());
  }
}

}  // namespace vowifi::probe
