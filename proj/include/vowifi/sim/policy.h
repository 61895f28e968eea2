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

#ifndef VOWIFI_SIM_POLICY_H_
#define VOWIFI_SIM_POLICY_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vowifi/ike/registry.h"

namespace vowifi::sim {

enum class SimErrc { kInvalidPolicy, kBindFailure };

class SimError : public std::runtime_error {
 public:
  SimError(SimErrc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  SimErrc code() const { return code_; }

 private:
  SimErrc code_;
};

enum class Behavior { kResponsive, kIgnoreIkeAuth, kSilentDrop, kCookieFirst, kDemandGroup };
// kEapWithoutSa answers IKE_AUTH with the EAP request only, as gateways
// do that defer the child SA until EAP completes.
enum class EapMode { kEapRequestStub, kRejectIdentity, kEapWithoutSa };

// What the simulated ePDG accepts and how it reacts. Allowed tuples are
// complete suites; earlier entries are preferred when an offer matches
// several.
struct EpdgPolicy {
  std::vector<ike::Suite> l1_allowed;  // ENCR+PRF+INTEG+DH
  std::vector<ike::Suite> l2_allowed;  // ENCR+INTEG+ESN
  Behavior behavior = Behavior::kResponsive;
  std::uint16_t demand_group = 0;  // kDemandGroup only
  EapMode eap_mode = EapMode::kEapRequestStub;
  // Answer with NAT detection hashes that never match, forcing NAT-T.
  bool simulate_nat = false;

  // Throws SimError(kInvalidPolicy).
  void Validate() const;

  // Line-oriented "key = value" text; see Serialize() for the keys.
  static EpdgPolicy Parse(std::string_view text);
  std::string Serialize() const;

  bool operator==(const EpdgPolicy&) const = default;
};

}  // namespace vowifi::sim

#endif  // VOWIFI_SIM_POLICY_H_
