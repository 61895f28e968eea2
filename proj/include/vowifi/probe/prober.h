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

#ifndef VOWIFI_PROBE_PROBER_H_
#define VOWIFI_PROBE_PROBER_H_

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vowifi/crypto/keys.h"
#include "vowifi/crypto/random.h"
#include "vowifi/ike/payloads.h"
#include "vowifi/ike/registry.h"
#include "vowifi/probe/rate_limiter.h"

namespace vowifi::probe {

enum class Layer { kL1, kL2 };

// A single offer: L1 combos carry ENCR/PRF/INTEG/DH, L2 combos carry the
// ESP types ENCR/INTEG/ESN.
struct ProbeCombo {
  Layer layer = Layer::kL1;
  ike::Suite suite;

  static ProbeCombo L1(const ike::Suite& suite);
  static ProbeCombo L2(const ike::Suite& suite);

  std::string key() const { return suite.ToString(); }
  bool operator==(const ProbeCombo&) const = default;
};

enum class VerdictKind {
  kAccepted,
  kRejected,
  kNoResponse,
  kNetworkError,
  kCookieChallenged,
  kGroupMismatch,
};

std::string_view VerdictKindName(VerdictKind kind);
std::optional<VerdictKind> ParseVerdictKind(std::string_view name);

// Rejected code for an IKE_AUTH answer that reached the EAP stage without
// selecting the offered child SA. Outside the 16-bit notify space.
inline constexpr std::uint32_t kEapStageNoSa = 0x10000;

struct Verdict {
  VerdictKind kind = VerdictKind::kNoResponse;
  ike::Suite selected;    // kAccepted
  std::uint32_t code = 0;  // kRejected
  std::uint16_t group = 0;  // kGroupMismatch
  std::string detail;      // kNetworkError

  static Verdict Accepted(ike::Suite selected);
  static Verdict Rejected(std::uint32_t code);
  static Verdict NoResponse();
  static Verdict NetworkError(std::string detail);
  static Verdict CookieChallenged();
  static Verdict GroupMismatch(std::uint16_t group);

  // Anything except NoResponse and NetworkError.
  bool definitive() const;
  std::string ToString() const;
  bool operator==(const Verdict&) const = default;
};

struct Datagram {
  bool sent = true;
  std::uint16_t port = 0;
  Bytes data;  // without the NAT-T non-ESP marker
};

// IKE SA established by a probe; kept so transcripts can be decrypted.
struct IkeSaState {
  ike::Spi spi_i{};
  ike::Spi spi_r{};
  ike::Suite suite;
  crypto::KeyMaterial keys;
  bool nat_detected = false;
};

struct ProbeOutcome {
  ProbeCombo combo;
  Verdict verdict;
  double rtt_ms = 0;
  std::vector<Datagram> transcript;
  std::optional<IkeSaState> ike_sa;
};

struct ProbeOptions {
  std::chrono::milliseconds timeout{5000};
  // Retransmissions after the initial send.
  int retries = 2;
  std::uint16_t ike_port = 500;
  std::uint16_t natt_port = 4500;
  RateLimiter* rate_limiter = nullptr;
  bool keep_transcript = false;
  crypto::RandomSource* rng = nullptr;  // DefaultRandom() when null
};

// Sends IKE_SA_INIT offering exactly `combo`. Socket failures become a
// NetworkError verdict.
ProbeOutcome ProbeL1(const std::string& address, const ProbeCombo& combo,
                     const ProbeOptions& opts);

// Establishes a fresh IKE SA with the L1 combo of `l1` and sends an
// IKE_AUTH offering exactly `esp`, identifying as `nai`. Throws
// ProbeError(kPrerequisiteMissing) unless `l1` is an Accepted L1 outcome.
ProbeOutcome ProbeL2(const std::string& address, const ProbeOutcome& l1, const ProbeCombo& esp,
                     const std::string& nai, const ProbeOptions& opts);

}  // namespace vowifi::probe

#endif  // VOWIFI_PROBE_PROBER_H_
