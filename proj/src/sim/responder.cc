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

#include "vowifi/sim/responder.h"

#include <algorithm>

#include "vowifi/crypto/dh.h"
#include "vowifi/crypto/primitives.h"
#include "vowifi/crypto/seal.h"
#include "vowifi/ike/proposals.h"
#include "vowifi/ike/wire.h"

namespace vowifi::sim {
namespace {

using Clock = std::chrono::steady_clock;
using ike::IkeMessage;
using ike::NotifyPayload;
using ike::ProtocolId;
using ike::TransformType;

constexpr std::size_t kNonceSize = 32;
constexpr std::string_view kResponderId = "epdg.sim.invalid";
constexpr std::string_view kAuthPlaceholder = "vowifi-audit simulator placeholder AUTH";

std::string PeerString(const PeerInfo& peer) {
  return peer.address + ":" + std::to_string(peer.port);
}

bool IsZero(const ike::Spi& spi) {
  return std::all_of(spi.begin(), spi.end(), [](std::uint8_t b) { return b == 0; });
}

IkeMessage ReplyTo(const IkeMessage& request) {
  IkeMessage r;
  r.header = request.header;
  r.header.flags = ike::kFlagResponse;
  return r;
}

IkeMessage NotifyReply(const IkeMessage& request, std::uint16_t type, Bytes data = {}) {
  IkeMessage r = ReplyTo(request);
  r.payloads.push_back(NotifyPayload{ProtocolId::kNone, type, {}, std::move(data)});
  return r;
}

Bytes GroupBytes(std::uint16_t group) {
  return {static_cast<std::uint8_t>(group >> 8), static_cast<std::uint8_t>(group)};
}

Bytes NatHash(const ike::IkeHeader& h, const std::string& address, std::uint16_t port) {
  std::array<std::uint8_t, 4> ip{};
  unsigned a = 0, b = 0, c = 0, d = 0;
  if (std::sscanf(address.c_str(), "%u.%u.%u.%u", &a, &b, &c, &d) == 4) {
    ip = {static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b), static_cast<std::uint8_t>(c),
          static_cast<std::uint8_t>(d)};
  }
  return ike::NatDetectionHash(h.initiator_spi, h.responder_spi, ip, port);
}

}  // namespace

Bytes EapAkaIdentityRequest(std::uint8_t identifier) {
  // Code=Request, Type=AKA(23), Subtype=AKA-Identity(5), AT_PERMANENT_ID_REQ.
  return {1, identifier, 0, 12, 23, 5, 0, 0, 10, 1, 0, 0};
}

Responder::Responder(EpdgPolicy policy, crypto::RandomSource* rng)
    : policy_(std::move(policy)), rng_(rng != nullptr ? rng : &crypto::DefaultRandom()) {
  policy_.Validate();
  cookie_secret_ = rng_->Generate(32);
}

EpdgPolicy Responder::policy() const {
  std::lock_guard<std::mutex> lock(mu_);
  return policy_;
}

void Responder::SetPolicy(EpdgPolicy policy) {
  policy.Validate();
  std::lock_guard<std::mutex> lock(mu_);
  policy_ = std::move(policy);
}

std::vector<SessionRecord> Responder::Sessions() const {
  std::lock_guard<std::mutex> lock(mu_);
  std::vector<SessionRecord> out;
  for (const auto& [key, s] : sessions_) out.push_back(s.record);
  return out;
}

std::vector<TranscriptEntry> Responder::Log() const {
  std::lock_guard<std::mutex> lock(mu_);
  return log_;
}

Bytes Responder::CookieFor(const IkeMessage& request, const PeerInfo& peer) const {
  const auto* ni = request.Find<ike::NoncePayload>();
  Bytes input = ni != nullptr ? ni->data : Bytes{};
  Append(input, ToBytes(peer.address));
  Append(input, request.header.initiator_spi);
  return crypto::HmacSha256(cookie_secret_, input);
}

std::optional<Bytes> Responder::HandleDatagram(ByteView datagram, const PeerInfo& peer) {
  std::lock_guard<std::mutex> lock(mu_);
  log_.push_back(TranscriptEntry{true, Clock::now(), PeerString(peer), Bytes(datagram.begin(), datagram.end())});
  if (policy_.behavior == Behavior::kSilentDrop) return std::nullopt;
  ike::IkeHeader header;
  try {
    header = ike::DecodeHeader(datagram);
  } catch (const ike::WireError&) {
    return std::nullopt;
  }
  if (header.response()) return std::nullopt;
  if (header.exchange_type == ike::ExchangeType::kIkeSaInit) {
    IkeMessage request;
    try {
      request = ike::DecodeMessage(datagram);
    } catch (const ike::WireError&) {
      return std::nullopt;
    }
    auto reply = SaInitLocked(request, datagram, peer);
    if (!reply) return std::nullopt;
    Bytes wire = ike::EncodeMessage(*reply);
    auto key = std::make_pair(reply->header.initiator_spi, reply->header.responder_spi);
    if (auto it = sessions_.find(key); it != sessions_.end()) {
      it->second.last_response = wire;
      it->second.record.transcript.push_back(TranscriptEntry{false, Clock::now(), PeerString(peer), wire});
    }
    return wire;
  }
  if (header.exchange_type == ike::ExchangeType::kIkeAuth) return IkeAuthLocked(datagram, peer);
  return std::nullopt;
}

std::optional<IkeMessage> Responder::HandleSaInit(const IkeMessage& request, ByteView raw,
                                                  const PeerInfo& peer) {
  std::lock_guard<std::mutex> lock(mu_);
  return SaInitLocked(request, raw, peer);
}

std::optional<IkeMessage> Responder::SaInitLocked(const IkeMessage& request, ByteView raw,
                                                  const PeerInfo& peer) {
  if (policy_.behavior == Behavior::kSilentDrop) return std::nullopt;
  const ike::IkeHeader& h = request.header;
  if (!h.initiator() || h.message_id != 0 || !IsZero(h.responder_spi) || IsZero(h.initiator_spi)) {
    return std::nullopt;
  }
  // Retransmitted request: same answer.
  if (auto idx = by_initiator_.find(h.initiator_spi); idx != by_initiator_.end()) {
    auto it = sessions_.find(idx->second);
    if (it != sessions_.end() && std::equal(raw.begin(), raw.end(), it->second.last_request.begin(),
                                            it->second.last_request.end())) {
      return ike::DecodeMessage(*it->second.last_response);
    }
  }
  const auto* sa = request.Find<ike::SaPayload>();
  const auto* ke = request.Find<ike::KePayload>();
  const auto* ni = request.Find<ike::NoncePayload>();
  if (sa == nullptr || ke == nullptr || ni == nullptr) {
    return NotifyReply(request, ike::notify::kInvalidSyntax);
  }

  if (policy_.behavior == Behavior::kCookieFirst) {
    const Bytes expected = CookieFor(request, peer);
    const auto* echoed = request.FindNotify(ike::notify::kCookie);
    if (echoed == nullptr || !crypto::Equal(echoed->data, expected)) {
      return NotifyReply(request, ike::notify::kCookie, expected);
    }
  }
  if (policy_.behavior == Behavior::kDemandGroup && ke->dh_group != policy_.demand_group) {
    return NotifyReply(request, ike::notify::kInvalidKePayload, GroupBytes(policy_.demand_group));
  }

  const ike::TransformPolicy l1{ProtocolId::kIke, policy_.l1_allowed};
  const auto chosen = ike::SelectProposal(*sa, l1);
  if (!chosen) {
    // Acceptable apart from the DH group: ask for the group we would take.
    for (const ike::Suite& allowed : policy_.l1_allowed) {
      ike::Suite variant = allowed;
      variant.Set({TransformType::kDh, ke->dh_group, 0});
      if (ike::SelectProposal(*sa, ike::TransformPolicy{ProtocolId::kIke, {variant}})) {
        return NotifyReply(request, ike::notify::kInvalidKePayload,
                           GroupBytes(allowed.Get(TransformType::kDh)->id));
      }
    }
    return NotifyReply(request, ike::notify::kNoProposalChosen);
  }
  const std::uint16_t group_id = chosen->suite.Get(TransformType::kDh)->id;
  if (ke->dh_group != group_id) {
    return NotifyReply(request, ike::notify::kInvalidKePayload, GroupBytes(group_id));
  }

  const crypto::DhGroup group = crypto::DhGroup::ForId(group_id);
  const crypto::DhKeyPair dh = crypto::DhGenerate(group, *rng_);
  Bytes gir;
  try {
    gir = crypto::DhShared(dh.private_value, ke->public_value, group);
  } catch (const crypto::CryptoError&) {
    return NotifyReply(request, ike::notify::kInvalidSyntax);
  }
  const Bytes nr = rng_->Generate(kNonceSize);
  ike::Spi spi_r{};
  do {
    rng_->Fill(spi_r);
  } while (IsZero(spi_r) || sessions_.count({h.initiator_spi, spi_r}) != 0);

  IkeMessage reply = ReplyTo(request);
  reply.header.responder_spi = spi_r;
  reply.payloads.push_back(ike::SelectedSa(*chosen, {}));
  reply.payloads.push_back(ike::KePayload{group_id, dh.public_value});
  reply.payloads.push_back(ike::NoncePayload{nr});
  Bytes nat_src = NatHash(reply.header, peer.local_address, peer.local_port);
  Bytes nat_dst = NatHash(reply.header, peer.address, peer.port);
  if (policy_.simulate_nat) {
    nat_src = rng_->Generate(nat_src.size());
    nat_dst = rng_->Generate(nat_dst.size());
  }
  reply.payloads.push_back(
      NotifyPayload{ProtocolId::kNone, ike::notify::kNatDetectionSourceIp, {}, nat_src});
  reply.payloads.push_back(
      NotifyPayload{ProtocolId::kNone, ike::notify::kNatDetectionDestinationIp, {}, nat_dst});

  Session s;
  s.record.spi_i = h.initiator_spi;
  s.record.spi_r = spi_r;
  s.record.suite = chosen->suite;
  s.record.peer = PeerString(peer);
  s.record.keys = crypto::DeriveIkeKeys(ni->data, nr, gir, h.initiator_spi, spi_r,
                                        chosen->suite.Get(TransformType::kPrf)->id,
                                        crypto::KeyLengths::ForSuite(chosen->suite));
  s.record.transcript.push_back(TranscriptEntry{true, Clock::now(), PeerString(peer),
                                                Bytes(raw.begin(), raw.end())});
  s.last_request.assign(raw.begin(), raw.end());
  s.last_response = ike::EncodeMessage(reply);
  const SessionKey key{h.initiator_spi, spi_r};
  if (auto old = by_initiator_.find(h.initiator_spi); old != by_initiator_.end()) {
    sessions_.erase(old->second);
  }
  sessions_[key] = std::move(s);
  by_initiator_[h.initiator_spi] = key;
  return reply;
}

std::optional<Bytes> Responder::HandleIkeAuth(ByteView raw, const PeerInfo& peer) {
  std::lock_guard<std::mutex> lock(mu_);
  return IkeAuthLocked(raw, peer);
}

std::optional<Bytes> Responder::IkeAuthLocked(ByteView raw, const PeerInfo& peer) {
  ike::IkeHeader h;
  try {
    h = ike::DecodeHeader(raw);
  } catch (const ike::WireError&) {
    return std::nullopt;
  }
  auto it = sessions_.find({h.initiator_spi, h.responder_spi});
  if (it == sessions_.end()) return std::nullopt;
  Session& s = it->second;
  SessionRecord& rec = s.record;
  rec.transcript.push_back(TranscriptEntry{true, Clock::now(), PeerString(peer), Bytes(raw.begin(), raw.end())});
  if (rec.state != SessionState::kSaInitDone) {
    if (rec.state == SessionState::kAuthStage &&
        std::equal(raw.begin(), raw.end(), s.last_request.begin(), s.last_request.end())) {
      return s.last_response;
    }
    return std::nullopt;
  }
  if (policy_.behavior == Behavior::kIgnoreIkeAuth) return std::nullopt;

  IkeMessage request;
  std::optional<crypto::SealContext> seal;
  try {
    const auto open = crypto::SealContext::ForSender(rec.suite, rec.keys, crypto::Role::kInitiator);
    request = ike::DecodeMessage(raw, &open);
    seal.emplace(crypto::SealContext::ForSender(rec.suite, rec.keys, crypto::Role::kResponder, rng_));
  } catch (const ike::WireError&) {
    return std::nullopt;
  } catch (const crypto::CryptoError&) {
    return std::nullopt;
  }
  if (!h.initiator() || h.message_id != 1) return std::nullopt;

  IkeMessage reply = ReplyTo(request);
  ike::EncryptedPayload sk;
  const auto* offered = request.Find<ike::SaPayload>();
  if (policy_.eap_mode == EapMode::kRejectIdentity) {
    sk.inner.push_back(NotifyPayload{ProtocolId::kNone, ike::notify::kAuthenticationFailed, {}, {}});
  } else if (offered == nullptr) {
    sk.inner.push_back(NotifyPayload{ProtocolId::kNone, ike::notify::kInvalidSyntax, {}, {}});
  } else {
    const auto chosen =
        ike::SelectProposal(*offered, ike::TransformPolicy{ProtocolId::kEsp, policy_.l2_allowed});
    if (policy_.eap_mode == EapMode::kEapWithoutSa) {
      sk.inner.push_back(ike::IdPayload{ike::Side::kResponder, ike::id_type::kFqdn, ToBytes(kResponderId)});
      sk.inner.push_back(ike::EapPayload{EapAkaIdentityRequest(1)});
    } else if (chosen) {
      const std::uint16_t prf_id = rec.suite.Get(TransformType::kPrf)->id;
      sk.inner.push_back(ike::IdPayload{ike::Side::kResponder, ike::id_type::kFqdn, ToBytes(kResponderId)});
      sk.inner.push_back(ike::AuthPayload{ike::auth_method::kSharedKeyMic,
                                          crypto::Prf(prf_id, rec.keys.sk_pr, ToBytes(kAuthPlaceholder))});
      sk.inner.push_back(ike::EapPayload{EapAkaIdentityRequest(1)});
      sk.inner.push_back(ike::SelectedSa(*chosen, rng_->Generate(4)));
      sk.inner.push_back(ike::TsPayload{ike::Side::kInitiator, {ike::TrafficSelector::WildcardIpv4()}});
      sk.inner.push_back(ike::TsPayload{ike::Side::kResponder, {ike::TrafficSelector::WildcardIpv4()}});
      rec.child_suite = chosen->suite;
    } else {
      sk.inner.push_back(NotifyPayload{ProtocolId::kNone, ike::notify::kNoProposalChosen, {}, {}});
    }
  }
  reply.payloads.push_back(std::move(sk));
  Bytes wire = ike::EncodeMessage(reply, &*seal);
  rec.state = SessionState::kAuthStage;
  s.last_request.assign(raw.begin(), raw.end());
  s.last_response = wire;
  rec.transcript.push_back(TranscriptEntry{false, Clock::now(), PeerString(peer), wire});
  return wire;
}

}  // namespace vowifi::sim
