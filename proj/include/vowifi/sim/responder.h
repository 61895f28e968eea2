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

#ifndef VOWIFI_SIM_RESPONDER_H_
#define VOWIFI_SIM_RESPONDER_H_

#include <chrono>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vowifi/crypto/keys.h"
#include "vowifi/crypto/random.h"
#include "vowifi/ike/payloads.h"
#include "vowifi/sim/policy.h"

namespace vowifi::sim {

enum class SessionState { kSaInitDone, kAuthStage, kClosed };

struct TranscriptEntry {
  bool inbound = true;
  std::chrono::steady_clock::time_point at;
  std::string peer;  // address:port
  Bytes data;        // IKE message, NAT-T marker removed
};

struct PeerInfo {
  std::string address;
  std::uint16_t port = 0;
  std::string local_address;
  std::uint16_t local_port = 0;
};

struct SessionRecord {
  ike::Spi spi_i{};
  ike::Spi spi_r{};
  SessionState state = SessionState::kSaInitDone;
  ike::Suite suite;
  crypto::KeyMaterial keys;
  std::string peer;
  std::optional<ike::Suite> child_suite;  // ESP tuple selected at IKE_AUTH
  std::vector<TranscriptEntry> transcript;
};

// Responder logic without sockets. All methods are thread-safe.
class Responder {
 public:
  explicit Responder(EpdgPolicy policy, crypto::RandomSource* rng = nullptr);

  // Processes one IKE datagram; nullopt means no reply. Undecodable input
  // and integrity failures are dropped.
  std::optional<Bytes> HandleDatagram(ByteView datagram, const PeerInfo& peer);

  // IKE_SA_INIT request to response (COOKIE, INVALID_KE_PAYLOAD,
  // NO_PROPOSAL_CHOSEN or SA/KE/Nonce). Creates the session on success.
  std::optional<ike::IkeMessage> HandleSaInit(const ike::IkeMessage& request, ByteView raw,
                                              const PeerInfo& peer);

  // Protected IKE_AUTH request to sealed response.
  std::optional<Bytes> HandleIkeAuth(ByteView raw, const PeerInfo& peer);

  std::vector<SessionRecord> Sessions() const;
  // Every inbound datagram with its arrival time, matched or not.
  std::vector<TranscriptEntry> Log() const;

  EpdgPolicy policy() const;
  void SetPolicy(EpdgPolicy policy);

 private:
  using SessionKey = std::pair<ike::Spi, ike::Spi>;

  struct Session {
    SessionRecord record;
    Bytes last_request;
    std::optional<Bytes> last_response;
  };

  Bytes CookieFor(const ike::IkeMessage& request, const PeerInfo& peer) const;
  std::optional<ike::IkeMessage> SaInitLocked(const ike::IkeMessage& request, ByteView raw,
                                              const PeerInfo& peer);
  std::optional<Bytes> IkeAuthLocked(ByteView raw, const PeerInfo& peer);

  mutable std::mutex mu_;
  EpdgPolicy policy_;
  crypto::RandomSource* rng_;
  Bytes cookie_secret_;
  std::map<SessionKey, Session> sessions_;
  std::map<ike::Spi, SessionKey> by_initiator_;
  std::vector<TranscriptEntry> log_;
};

// EAP-Request/AKA-Identity with AT_PERMANENT_ID_REQ.
Bytes EapAkaIdentityRequest(std::uint8_t identifier);

}  // namespace vowifi::sim

#endif  // VOWIFI_SIM_RESPONDER_H_
