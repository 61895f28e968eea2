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


#ifndef VOWIFI_MBN_RULES_H_
#define VOWIFI_MBN_RULES_H_

#include <optional>
#include <regex>
#include <string>
#include <string_view>
#include <vector>

namespace vowifi::mbn {

enum class PolicyField { kL1Encr, kL1Integ, kL1Prf, kL1Dh, kL2Encr, kL2Integ };

const char* PolicyFieldName(PolicyField field);
std::optional<PolicyField> ParsePolicyField(std::string_view name);

// A rule file has one rule per line:
//
//   <path-glob>  key:<name>|regex:<pattern>  <field>
//
// '#' starts a comment. Globs use '*' (any run, including '/') and '?'.
// key:<name> reads "name=v1,v2", "name: v1 v2" and "<name>v1,v2</name>".
// regex:<pattern> collects capture group 1 of every match (the whole match
// when the pattern has no group).
struct Rule {
  std::string glob;
  std::string matcher;  // as written
  PolicyField field;
  int line = 0;
};

class RuleSet {
 public:
  // Throws McfgError(kRuleParseError) with the line number.
  static RuleSet Parse(std::string_view text);
  static RuleSet Default();

  const std::vector<Rule>& rules() const { return rules_; }
  bool empty() const { return rules_.empty(); }

  // Raw matched entries of `rule` in `content`; empty when nothing matched.
  std::vector<std::string> Match(std::size_t rule, std::string_view content) const;

 private:
  struct Compiled {
    bool is_key = false;
    std::string key;
    std::regex re;
  };
  std::vector<Rule> rules_;
  std::vector<Compiled> compiled_;
};

bool GlobMatch(std::string_view glob, std::string_view path);

// Lower-cases and maps common spellings to canonical algorithm names
// ("ENCR_NULL" -> "null", "3DES-CBC" -> "3des", ...).
std::string NormalizeAlgorithm(std::string_view raw);

}  // namespace vowifi::mbn

#endif  // VOWIFI_MBN_RULES_H_
