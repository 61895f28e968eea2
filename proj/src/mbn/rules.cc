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


#include "vowifi/mbn/rules.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>
#include <utility>

#include "vowifi/mbn/document.h"

namespace vowifi::mbn {
namespace {

constexpr std::array<std::pair<PolicyField, const char*>, 6> kFields{{
    {PolicyField::kL1Encr, "l1_encr"},
    {PolicyField::kL1Integ, "l1_integ"},
    {PolicyField::kL1Prf, "l1_prf"},
    {PolicyField::kL1Dh, "l1_dh"},
    {PolicyField::kL2Encr, "l2_encr"},
    {PolicyField::kL2Integ, "l2_integ"},
}};

constexpr std::size_t kMaxLine = 4096;

std::string Lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string_view Trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n\"'");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n\"'");
  return s.substr(b, e - b + 1);
}

bool StartsWithNoCase(std::string_view s, std::string_view prefix) {
  return s.size() >= prefix.size() && Lower(s.substr(0, prefix.size())) == Lower(prefix);
}

template <typename Fn>
void ForEachLine(std::string_view content, Fn fn) {
  std::size_t pos = 0;
  while (pos < content.size()) {
    auto end = content.find('\n', pos);
    if (end == std::string_view::npos) end = content.size();
    const std::string_view line = content.substr(pos, end - pos);
    if (line.size() <= kMaxLine) fn(line);
    pos = end + 1;
  }
}

}  // namespace

const char* PolicyFieldName(PolicyField field) {
  for (const auto& [f, name] : kFields) {
    if (f == field) return name;
  }
  return "?";
}

std::optional<PolicyField> ParsePolicyField(std::string_view name) {
  for (const auto& [f, n] : kFields) {
    if (name == n) return f;
  }
  return std::nullopt;
}

bool GlobMatch(std::string_view glob, std::string_view path) {
  std::size_t g = 0, p = 0;
  std::size_t star = std::string_view::npos, resume = 0;
  while (p < path.size()) {
    if (g < glob.size() && (glob[g] == '?' || glob[g] == path[p])) {
      ++g;
      ++p;
    } else if (g < glob.size() && glob[g] == '*') {
      star = g++;
      resume = p;
    } else if (star != std::string_view::npos) {
      g = star + 1;
      p = ++resume;
    } else {
      return false;
    }
  }
  while (g < glob.size() && glob[g] == '*') ++g;
  return g == glob.size();
}

std::string NormalizeAlgorithm(std::string_view raw) {
  std::string s = Lower(Trim(raw));
  std::replace(s.begin(), s.end(), '_', '-');
  static const std::array<std::pair<const char*, const char*>, 22> kAliases{{
      {"encr-null", "null"},        {"esp-null", "null"},
      {"enc-null", "null"},         {"des-cbc", "des"},
      {"encr-des", "des"},          {"3des-cbc", "3des"},
      {"des3", "3des"},             {"des-ede3", "3des"},
      {"des-ede3-cbc", "3des"},     {"tripledes", "3des"},
      {"encr-3des", "3des"},        {"aes128", "aes-cbc-128"},
      {"aes-128", "aes-cbc-128"},   {"aes128-cbc", "aes-cbc-128"},
      {"aes-128-cbc", "aes-cbc-128"}, {"encr-aes-cbc-128", "aes-cbc-128"},
      {"aes192", "aes-cbc-192"},    {"aes-192", "aes-cbc-192"},
      {"aes256", "aes-cbc-256"},    {"aes-256", "aes-cbc-256"},
      {"aes-256-cbc", "aes-cbc-256"}, {"encr-aes-cbc-256", "aes-cbc-256"},
  }};
  for (const auto& [from, to] : kAliases) {
    if (s == from) return to;
  }
  return s;
}

RuleSet RuleSet::Parse(std::string_view text) {
  RuleSet set;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string_view body = line;
    if (const auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    std::istringstream fields{std::string(body)};
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    auto fail = [&](const std::string& why) {
      throw McfgError(McfgErrc::kRuleParseError, "line " + std::to_string(number) + ": " + why,
                      static_cast<std::size_t>(number));
    };
    if (tok.size() != 3) fail("expected <glob> <matcher> <field>");
    const auto field = ParsePolicyField(tok[2]);
    if (!field) fail("unknown field '" + tok[2] + "'");

    Compiled c;
    if (StartsWithNoCase(tok[1], "key:")) {
      c.is_key = true;
      c.key = tok[1].substr(4);
      if (c.key.empty()) fail("empty key");
    } else if (StartsWithNoCase(tok[1], "regex:")) {
      try {
        c.re = std::regex(tok[1].substr(6), std::regex::ECMAScript | std::regex::icase);
      } catch (const std::regex_error& e) {
        fail(std::string("bad regex: ") + e.what());
      }
    } else {
      fail("matcher must be key:<name> or regex:<pattern>");
    }
    set.rules_.push_back({tok[0], tok[1], *field, number});
    set.compiled_.push_back(std::move(c));
  }
  if (set.rules_.empty()) throw McfgError(McfgErrc::kRuleParseError, "rule set is empty", 0);
  return set;
}

std::vector<std::string> RuleSet::Match(std::size_t rule, std::string_view content) const {
  const Compiled& c = compiled_.at(rule);
  std::vector<std::string> out;
  if (c.is_key) {
    const std::string key = Lower(c.key);
    const std::string open = "<" + key + ">", close = "</" + key + ">";
    ForEachLine(content, [&](std::string_view line) {
      const std::string lower = Lower(line);
      // key = value / key: value
      const auto lead = lower.find_first_not_of(" \t\"'");
      if (lead != std::string::npos && lower.compare(lead, key.size(), key) == 0) {
        auto at = lead + key.size();
        if (at < lower.size() && (lower[at] == '"' || lower[at] == '\'')) ++at;
        at = lower.find_first_not_of(" \t", at);
        if (at != std::string::npos && (lower[at] == '=' || lower[at] == ':')) {
          const auto value = Trim(line.substr(at + 1));
          if (!value.empty()) out.emplace_back(value);
        }
      }
      // <key>value</key>
      for (std::size_t from = 0;;) {
        const auto b = lower.find(open, from);
        if (b == std::string::npos) break;
        const auto e = lower.find(close, b + open.size());
        if (e == std::string::npos) break;
        const auto value = Trim(line.substr(b + open.size(), e - b - open.size()));
        if (!value.empty()) out.emplace_back(value);
        from = e + close.size();
      }
    });
  } else {
    ForEachLine(content, [&](std::string_view line) {
      const std::string s(line);
      for (auto it = std::sregex_iterator(s.begin(), s.end(), c.re); it != std::sregex_iterator(); ++it) {
        const auto& m = *it;
        const std::string value = m.size() > 1 && m[1].matched ? m[1].str() : m[0].str();
        if (!Trim(value).empty()) out.push_back(value);
        if (m.length(0) == 0) break;
      }
    });
  }
  return out;
}

}  // namespace vowifi::mbn
