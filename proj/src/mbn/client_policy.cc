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


#include "vowifi/mbn/client_policy.h"

#include <algorithm>
#include <json.hpp>

namespace vowifi::mbn {
namespace {

std::vector<std::string> SplitValues(std::string_view entry) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      std::string v = NormalizeAlgorithm(cur);
      if (!v.empty()) out.push_back(std::move(v));
    }
    cur.clear();
  };
  for (char c : entry) {
    if (c == ',' || c == ';' || c == '|' || c == ' ' || c == '\t' || c == '\r') {
      flush();
    } else {
      cur.push_back(c);
    }
  }
  flush();
  return out;
}

bool Contains(const std::vector<std::string>& list, std::string_view v) {
  return std::find(list.begin(), list.end(), v) != list.end();
}

// Evidence of the match that produced `field`'s current list.
std::vector<const Evidence*> Winning(const ClientPolicy& p, PolicyField field) {
  std::vector<const Evidence*> out;
  const Evidence* last = nullptr;
  for (const auto& e : p.evidence) {
    if (e.field == field) last = &e;
  }
  if (!last) return out;
  for (const auto& e : p.evidence) {
    if (e.field == field && e.match == last->match) out.push_back(&e);
  }
  return out;
}

void AddEvidence(ClientFinding& f, const ClientPolicy& p, PolicyField field,
                 std::initializer_list<std::string_view> names) {
  for (const Evidence* e : Winning(p, field)) {
    const auto values = SplitValues(e->entry);
    const bool hit = std::any_of(names.begin(), names.end(),
                                 [&](std::string_view n) { return Contains(values, n); });
    if (!hit) continue;
    std::pair<std::string, std::string> pair{e->path, e->entry};
    if (std::find(f.evidence.begin(), f.evidence.end(), pair) == f.evidence.end()) {
      f.evidence.push_back(std::move(pair));
    }
  }
}

}  // namespace

std::vector<std::string>& ClientPolicy::field(PolicyField f) {
  switch (f) {
    case PolicyField::kL1Encr: return l1_encr;
    case PolicyField::kL1Integ: return l1_integ;
    case PolicyField::kL1Prf: return l1_prf;
    case PolicyField::kL1Dh: return l1_dh;
    case PolicyField::kL2Encr: return l2_encr;
    case PolicyField::kL2Integ: return l2_integ;
  }
  return l1_encr;
}

const std::vector<std::string>& ClientPolicy::field(PolicyField f) const {
  return const_cast<ClientPolicy*>(this)->field(f);
}

ClientPolicy ExtractClientPolicy(const std::vector<std::pair<std::string, Bytes>>& files,
                                 const RuleSet& rules) {
  ClientPolicy policy;
  std::size_t match = 0;
  for (const auto& [path, content] : files) {
    const std::string_view text(reinterpret_cast<const char*>(content.data()), content.size());
    for (std::size_t i = 0; i < rules.rules().size(); ++i) {
      const Rule& rule = rules.rules()[i];
      if (!GlobMatch(rule.glob, path)) continue;
      const auto entries = rules.Match(i, text);
      std::vector<std::string> values;
      for (const auto& e : entries) {
        for (auto& v : SplitValues(e)) values.push_back(std::move(v));
      }
      if (values.empty()) continue;
      ++match;
      policy.field(rule.field) = std::move(values);
      for (const auto& e : entries) policy.evidence.push_back({rule.field, path, e, match});
      if (!Contains(policy.sources, path)) policy.sources.push_back(path);
    }
  }
  return policy;
}

ClientFinding ClassifyClientPolicy(const ClientPolicy& p) {
  ClientFinding f;
  f.l1_null = Contains(p.l1_encr, "null");
  f.l2_null = Contains(p.l2_encr, "null");
  const bool des_l1 = Contains(p.l1_encr, "des") || Contains(p.l1_encr, "3des");
  const bool des_l2 = Contains(p.l2_encr, "des") || Contains(p.l2_encr, "3des");
  f.uses_des = des_l1 || des_l2;
  if (f.l1_null) AddEvidence(f, p, PolicyField::kL1Encr, {"null"});
  if (f.l2_null) AddEvidence(f, p, PolicyField::kL2Encr, {"null"});
  if (des_l1) AddEvidence(f, p, PolicyField::kL1Encr, {"des", "3des"});
  if (des_l2) AddEvidence(f, p, PolicyField::kL2Encr, {"des", "3des"});
  return f;
}

ClientRecord AuditContainer(std::string file, const McfgDocument& doc, const RuleSet& rules) {
  ClientRecord r;
  r.file = std::move(file);
  r.label = doc.trailer.carrier_name;
  for (const auto& [k, v] : MetadataPairs(doc.trailer)) {
    if (k == "mcc") r.mcc = v;
    else if (k == "mnc") r.mnc = v;
    else if (k == "region") r.region = v;
    else if (k == "label" && r.label.empty()) r.label = v;
  }
  r.policy = ExtractClientPolicy(ExtractEmbeddedFiles(doc), rules);
  r.policy.label = r.label;
  r.finding = ClassifyClientPolicy(r.policy);
  return r;
}

std::string SerializeClientRecord(const ClientRecord& r) {
  nlohmann::ordered_json j;
  j["kind"] = "client";
  j["file"] = r.file;
  j["label"] = r.label;
  j["mcc"] = r.mcc;
  j["mnc"] = r.mnc;
  j["region"] = r.region;
  j["l1_null"] = r.finding.l1_null;
  j["l2_null"] = r.finding.l2_null;
  j["uses_des"] = r.finding.uses_des;
  nlohmann::ordered_json policy;
  for (PolicyField f : {PolicyField::kL1Encr, PolicyField::kL1Integ, PolicyField::kL1Prf,
                        PolicyField::kL1Dh, PolicyField::kL2Encr, PolicyField::kL2Integ}) {
    policy[PolicyFieldName(f)] = r.policy.field(f);
  }
  policy["sources"] = r.policy.sources;
  j["policy"] = policy;
  j["evidence"] = nlohmann::ordered_json::array();
  for (const auto& [path, entry] : r.finding.evidence) {
    j["evidence"].push_back({{"path", path}, {"entry", entry}});
  }
  return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

}  // namespace vowifi::mbn
