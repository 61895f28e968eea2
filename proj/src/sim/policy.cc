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

#include "vowifi/sim/policy.h"

#include <sstream>

#include "vowifi/crypto/dh.h"

namespace vowifi::sim {
namespace {

using ike::TransformType;

std::string Trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool HasTypes(const ike::Suite& s, std::initializer_list<TransformType> types) {
  if (s.algorithms().size() != types.size()) return false;
  for (TransformType t : types) {
    if (!s.Get(t)) return false;
  }
  return true;
}

}  // namespace

void EpdgPolicy::Validate() const {
  for (const auto& s : l1_allowed) {
    if (!HasTypes(s, {TransformType::kEncr, TransformType::kPrf, TransformType::kInteg,
                      TransformType::kDh})) {
      throw SimError(SimErrc::kInvalidPolicy, "l1 tuple needs exactly ENCR, PRF, INTEG, DH: " + s.ToString());
    }
    if (!crypto::IsSupportedGroup(s.Get(TransformType::kDh)->id)) {
      throw SimError(SimErrc::kInvalidPolicy, "unsupported DH group in " + s.ToString());
    }
  }
  for (const auto& s : l2_allowed) {
    if (!HasTypes(s, {TransformType::kEncr, TransformType::kInteg, TransformType::kEsn})) {
      throw SimError(SimErrc::kInvalidPolicy, "l2 tuple needs exactly ENCR, INTEG, ESN: " + s.ToString());
    }
  }
  if (behavior != Behavior::kSilentDrop && l1_allowed.empty()) {
    throw SimError(SimErrc::kInvalidPolicy, "a responding simulator needs at least one l1 tuple");
  }
  if (behavior == Behavior::kDemandGroup && !crypto::IsSupportedGroup(demand_group)) {
    throw SimError(SimErrc::kInvalidPolicy, "demand-group names unsupported group " + std::to_string(demand_group));
  }
}

EpdgPolicy EpdgPolicy::Parse(std::string_view text) {
  EpdgPolicy p;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = Trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = "policy line " + std::to_string(number) + ": ";
    if (eq == std::string::npos) throw SimError(SimErrc::kInvalidPolicy, where + "expected key = value");
    const std::string key = Trim(line.substr(0, eq));
    const std::string value = Trim(line.substr(eq + 1));
    try {
      if (key == "l1") {
        p.l1_allowed.push_back(ike::Suite::Parse(value));
      } else if (key == "l2") {
        p.l2_allowed.push_back(ike::Suite::Parse(value));
      } else if (key == "behavior") {
        if (value == "responsive") {
          p.behavior = Behavior::kResponsive;
        } else if (value == "ignore-ike-auth") {
          p.behavior = Behavior::kIgnoreIkeAuth;
        } else if (value == "silent-drop") {
          p.behavior = Behavior::kSilentDrop;
        } else if (value == "cookie-first") {
          p.behavior = Behavior::kCookieFirst;
        } else if (value.rfind("demand-group:", 0) == 0) {
          p.behavior = Behavior::kDemandGroup;
          p.demand_group = static_cast<std::uint16_t>(std::stoul(value.substr(13)));
        } else {
          throw std::invalid_argument("unknown behavior '" + value + "'");
        }
      } else if (key == "eap_mode") {
        if (value == "eap-request-stub") {
          p.eap_mode = EapMode::kEapRequestStub;
        } else if (value == "reject-identity") {
          p.eap_mode = EapMode::kRejectIdentity;
        } else if (value == "eap-without-sa") {
          p.eap_mode = EapMode::kEapWithoutSa;
        } else {
          throw std::invalid_argument("unknown eap_mode '" + value + "'");
        }
      } else if (key == "simulate_nat") {
        if (value != "true" && value != "false") throw std::invalid_argument("simulate_nat is true or false");
        p.simulate_nat = value == "true";
      } else {
        throw std::invalid_argument("unknown key '" + key + "'");
      }
    } catch (const std::invalid_argument& e) {
      throw SimError(SimErrc::kInvalidPolicy, where + e.what());
    } catch (const std::out_of_range& e) {
      throw SimError(SimErrc::kInvalidPolicy, where + "number out of range");
    }
  }
  p.Validate();
  return p;
}

std::string EpdgPolicy::Serialize() const {
  std::ostringstream out;
  out << "behavior = ";
  switch (behavior) {
    case Behavior::kResponsive: out << "responsive"; break;
    case Behavior::kIgnoreIkeAuth: out << "ignore-ike-auth"; break;
    case Behavior::kSilentDrop: out << "silent-drop"; break;
    case Behavior::kCookieFirst: out << "cookie-first"; break;
    case Behavior::kDemandGroup: out << "demand-group:" << demand_group; break;
  }
  out << "\neap_mode = ";
  switch (eap_mode) {
    case EapMode::kEapRequestStub: out << "eap-request-stub\n"; break;
    case EapMode::kRejectIdentity: out << "reject-identity\n"; break;
    case EapMode::kEapWithoutSa: out << "eap-without-sa\n"; break;
  }
  if (simulate_nat) out << "simulate_nat = true\n";
  for (const auto& s : l1_allowed) out << "l1 = " << s.ToString() << '\n';
  for (const auto& s : l2_allowed) out << "l2 = " << s.ToString() << '\n';
  return out.str();
}

}  // namespace vowifi::sim
