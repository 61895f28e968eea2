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


#ifndef VOWIFI_MBN_CLIENT_POLICY_H_
#define VOWIFI_MBN_CLIENT_POLICY_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vowifi/core/bytes.h"
#include "vowifi/mbn/document.h"
#include "vowifi/mbn/rules.h"

namespace vowifi::mbn {

struct Evidence {
  PolicyField field;
  std::string path;
  std::string entry;  // the matched text, verbatim
  std::size_t match = 0;  // one id per (file, rule) hit
  bool operator==(const Evidence&) const = default;
};

struct ClientPolicy {
  std::string label;
  std::vector<std::string> l1_encr, l1_integ, l1_prf, l1_dh;
  std::vector<std::string> l2_encr, l2_integ;
  std::vector<std::string> sources;  // contributing paths, first-seen order
  std::vector<Evidence> evidence;    // every match, application order

  std::vector<std::string>& field(PolicyField f);
  const std::vector<std::string>& field(PolicyField f) const;
  bool operator==(const ClientPolicy&) const = default;
};

struct ClientFinding {
  bool l1_null = false;
  bool l2_null = false;
  bool uses_des = false;
  std::vector<std::pair<std::string, std::string>> evidence;  // (path, entry)
  bool operator==(const ClientFinding&) const = default;
};

// Files in order, rules in order within each file; a later match replaces
// the field's list.
ClientPolicy ExtractClientPolicy(const std::vector<std::pair<std::string, Bytes>>& files,
                                 const RuleSet& rules);

ClientFinding ClassifyClientPolicy(const ClientPolicy& policy);

// One audited container, as written to client JSONL.
struct ClientRecord {
  std::string file;
  std::string label;
  std::string mcc, mnc, region;  // from trailer metadata when present
  ClientPolicy policy;
  ClientFinding finding;
};

ClientRecord AuditContainer(std::string file, const McfgDocument& doc, const RuleSet& rules);

std::string SerializeClientRecord(const ClientRecord& record);

}  // namespace vowifi::mbn

#endif  // VOWIFI_MBN_CLIENT_POLICY_H_
