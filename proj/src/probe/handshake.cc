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

#include "handshake.h"

#include <algorithm>
#include <chrono>

#include "vowifi/crypto/dh.h"
#include "vowifi/crypto/primitives.h"
#include "vowifi/ike/proposals.h"
#include "vowifi/ike/wire.h"
#include "vowifi/probe/errors.h"

namespace vowifi::probe::internal {
namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint8_t kNonEspMarker[4] = {0, 0, 0, 0};
constexpr std::size_t kNonceSize = 32;

bool Matches(ByteView data, const ike::Spi& spi_i, std::uint32_t message_id) {
  try {
    const ike::IkeHeader h = ike::DecodeHeader(data);
    return h.initiator_spi == spi_i && h.message_id == message_id && h.response();
  } catch (const ike::WireError&) {
    // Unparseable but addressed to us: hand it up so it is reported.
    return data.size() >= 8 && std::equal(spi_i.begin(), spi_i.end(), data.begin());
  }
}

Bytes NatHash(const ike::IkeHeader& h, const std::string& address, std::uint16_t port) {
  const auto ip = ParseIpv4(address);
  if (!ip) return {};
  return ike::NatDetectionHash(h.initiator_spi, h.responder_spi, *ip, port);
}

}  // namespace

Channel::Channel(UdpSocket socket, bool natt, const ProbeOptions& opts,
                 std::vector<Datagram>* transcript)
    : socket_(std::move(socket)), natt_(natt), opts_(opts), transcript_(transcript) {}

void Channel::Record(bool sent, ByteView data) {
  if (transcript_ != nullptr) {
    transcript_->push_back(Datagram{sent, socket_.peer_port(), Bytes(data.begin(), data.end())});
  }
}

std::optional<Bytes> Channel::RoundTrip(ByteView request, const ike::Spi& spi_i,
                                        std::uint32_t message_id) {
  Bytes wire;
  if (natt_) Append(wire, kNonEspMarker);
  Append(wire, request);
  const int attempts = 1 + std::max(0, opts_.retries);
  for (int attempt = 0; attempt < attempts; ++attempt) {
    if (opts_.rate_limiter != nullptr) opts_.rate_limiter->Acquire(socket_.peer_address());
    const auto sent_at = Clock::now();
    socket_.Send(wire);
    Record(true, request);
    const auto deadline = sent_at + opts_.timeout;
    for (;;) {
      const auto left = std::chrono::ceil<std::chrono::milliseconds>(deadline - Clock::now());
      if (left.count() <= 0) break;
      std::optional<Bytes> reply = socket_.Receive(left);
      if (!reply) break;
      ByteView body(*reply);
      if (natt_) {
        if (body.size() < 4 || !std::equal(body.begin(), body.begin() + 4, kNonEspMarker)) continue;
        body = body.subspan(4);
      }
      if (!Matches(body, spi_i, message_id)) continue;
      last_rtt_ms_ = std::chrono::duration<double, std::milli>(Clock::now() - sent_at).count();
      Record(false, body);
      return Bytes(body.begin(), body.end());
    }
  }
  return std::nullopt;
}

SaInitResult RunSaInit(Channel& channel, const ike::Suite& suite, const ProbeOptions& opts,
                       crypto::RandomSource& rng) {
  const auto dh_alg = suite.Get(ike::TransformType::kDh);
  const auto prf_alg = suite.Get(ike::TransformType::kPrf);
  if (!dh_alg || !prf_alg) return {Verdict::NetworkError("L1 combo lacks DH or PRF"), {}};
  if (!crypto::IsSupportedGroup(dh_alg->id)) {
    return {Verdict::NetworkError("DH group " + std::to_string(dh_alg->id) + " not implemented"),
            {}};
  }
  const crypto::DhGroup group = crypto::DhGroup::ForId(dh_alg->id);
  const crypto::DhKeyPair dh = crypto::DhGenerate(group, rng);
  const Bytes ni = rng.Generate(kNonceSize);

  ike::IkeMessage request;
  ike::Spi spi_i{};
  do {
    rng.Fill(spi_i);
  } while (std::all_of(spi_i.begin(), spi_i.end(), [](std::uint8_t b) { return b == 0; }));
  request.header.initiator_spi = spi_i;
  request.header.exchange_type = ike::ExchangeType::kIkeSaInit;
  request.header.flags = ike::kFlagInitiator;
  request.payloads.push_back(
      ike::BuildSaPayload({ike::ProposalSpec::FromSuite(ike::ProtocolId::kIke, suite)}));
  request.payloads.push_back(ike::KePayload{dh_alg->id, dh.public_value});
  request.payloads.push_back(ike::NoncePayload{ni});
  const UdpSocket& sock = channel.socket();
  request.payloads.push_back(ike::NotifyPayload{
      ike::ProtocolId::kNone, ike::notify::kNatDetectionSourceIp, {},
      NatHash(request.header, sock.local_address(), sock.local_port())});
  request.payloads.push_back(ike::NotifyPayload{
      ike::ProtocolId::kNone, ike::notify::kNatDetectionDestinationIp, {},
      NatHash(request.header, sock.peer_address(), sock.peer_port())});

  for (int cookie_round = 0; cookie_round < 2; ++cookie_round) {
    const std::optional<Bytes> raw = channel.RoundTrip(ike::EncodeMessage(request), spi_i, 0);
    if (!raw) return {Verdict::NoResponse(), {}};
    ike::IkeMessage reply;
    try {
      reply = ike::DecodeMessage(*raw);
    } catch (const ike::WireError& e) {
      return {Verdict::NetworkError(std::string("malformed IKE_SA_INIT response: ") + e.what()),
              {}};
    }
    if (reply.header.exchange_type != ike::ExchangeType::kIkeSaInit) {
      return {Verdict::NetworkError("unexpected exchange type in IKE_SA_INIT response"), {}};
    }
    if (const auto* cookie = reply.FindNotify(ike::notify::kCookie)) {
      if (cookie_round == 1) return {Verdict::CookieChallenged(), {}};
      request.payloads.insert(request.payloads.begin(),
                              ike::NotifyPayload{ike::ProtocolId::kNone, ike::notify::kCookie,
                                                 {}, cookie->data});
      continue;
    }
    if (const auto* ke_err = reply.FindNotify(ike::notify::kInvalidKePayload)) {
      if (ke_err->data.size() < 2) return {Verdict::NetworkError("INVALID_KE_PAYLOAD without group"), {}};
      return {Verdict::GroupMismatch(
                  static_cast<std::uint16_t>((ke_err->data[0] << 8) | ke_err->data[1])),
              {}};
    }
    for (const ike::Payload* p : reply.Flatten()) {
      const auto* n = p->As<ike::NotifyPayload>();
      if (n != nullptr && ike::notify::IsError(n->type)) return {Verdict::Rejected(n->type), {}};
    }
    const auto* sa = reply.Find<ike::SaPayload>();
    const auto* ke = reply.Find<ike::KePayload>();
    const auto* nr = reply.Find<ike::NoncePayload>();
    if (sa == nullptr || ke == nullptr || nr == nullptr) {
      return {Verdict::NetworkError("IKE_SA_INIT response lacks SA, KE or Nonce"), {}};
    }
    const auto selected = ike::ReadSelection(*sa);
    if (!selected || selected->protocol != ike::ProtocolId::kIke || selected->suite != suite) {
      return {Verdict::NetworkError("responder selected transforms outside the offer"), {}};
    }
    if (ke->dh_group != dh_alg->id) {
      return {Verdict::NetworkError("KE group differs from the selected group"), {}};
    }
    const ike::Spi spi_r = reply.header.responder_spi;
    if (std::all_of(spi_r.begin(), spi_r.end(), [](std::uint8_t b) { return b == 0; })) {
      return {Verdict::NetworkError("zero responder SPI"), {}};
    }
    IkeSaState state;
    state.spi_i = spi_i;
    state.spi_r = spi_r;
    state.suite = suite;
    try {
      const Bytes gir = crypto::DhShared(dh.private_value, ke->public_value, group);
      state.keys = crypto::DeriveIkeKeys(ni, nr->data, gir, spi_i, spi_r, prf_alg->id,
                                         crypto::KeyLengths::ForSuite(suite));
    } catch (const crypto::CryptoError& e) {
      return {Verdict::NetworkError(std::string("key agreement failed: ") + e.what()), {}};
    }
    const auto* nat_src = reply.FindNotify(ike::notify::kNatDetectionSourceIp);
    const auto* nat_dst = reply.FindNotify(ike::notify::kNatDetectionDestinationIp);
    if (nat_src != nullptr && nat_dst != nullptr) {
      state.nat_detected =
          nat_dst->data != NatHash(reply.header, sock.local_address(), sock.local_port()) ||
          nat_src->data != NatHash(reply.header, sock.peer_address(), opts.ike_port);
    }
    return {Verdict::Accepted(suite), std::move(state)};
  }
  return {Verdict::CookieChallenged(), {}};
}

}  // namespace vowifi::probe::internal
