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

#include "vowifi/probe/prober.h"

#include <chrono>

#include "handshake.h"
#include "vowifi/crypto/primitives.h"
#include "vowifi/crypto/seal.h"
#include "vowifi/ike/proposals.h"
#include "vowifi/ike/wire.h"
#include "vowifi/probe/errors.h"

namespace vowifi::probe {
namespace {

constexpr std::uint32_t kAuthMessageId = 1;
constexpr std::string_view kResponderIdentity = "ims";

crypto::RandomSource& RngFor(const ProbeOptions& opts) {
  return opts.rng != nullptr ? *opts.rng : crypto::DefaultRandom();
}

void CheckShape(const ProbeCombo& combo) {
  const auto protocol = combo.layer == Layer::kL1 ? ike::ProtocolId::kIke : ike::ProtocolId::kEsp;
  for (ike::TransformType t : ike::RequiredTypes(protocol)) {
    if (!combo.suite.Get(t)) {
      throw ProbeError(ProbeErrc::kInvalidPlan,
                       "combo " + combo.key() + " lacks " + std::string(ike::TransformTypeName(t)));
    }
  }
}

Verdict InterpretAuthReply(const ike::IkeMessage& reply, const ProbeCombo& esp) {
  if (reply.header.exchange_type != ike::ExchangeType::kIkeAuth) {
    return Verdict::NetworkError("unexpected exchange type in IKE_AUTH response");
  }
  if (const auto* sa = reply.Find<ike::SaPayload>()) {
    const auto selected = ike::ReadSelection(*sa);
    if (selected && selected->protocol == ike::ProtocolId::kEsp && selected->suite == esp.suite) {
      return Verdict::Accepted(selected->suite);
    }
    return Verdict::NetworkError("responder selected child SA transforms outside the offer");
  }
  for (const ike::Payload* p : reply.Flatten()) {
    const auto* n = p->As<ike::NotifyPayload>();
    if (n != nullptr && ike::notify::IsError(n->type)) return Verdict::Rejected(n->type);
  }
  if (reply.Find<ike::EapPayload>() != nullptr) return Verdict::Rejected(kEapStageNoSa);
  return Verdict::NetworkError("IKE_AUTH response carries neither SA, error nor EAP");
}

}  // namespace

ProbeCombo ProbeCombo::L1(const ike::Suite& suite) { return {Layer::kL1, suite}; }
ProbeCombo ProbeCombo::L2(const ike::Suite& suite) { return {Layer::kL2, suite}; }

std::string_view VerdictKindName(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::kAccepted: return "Accepted";
    case VerdictKind::kRejected: return "Rejected";
    case VerdictKind::kNoResponse: return "NoResponse";
    case VerdictKind::kNetworkError: return "NetworkError";
    case VerdictKind::kCookieChallenged: return "CookieChallenged";
    case VerdictKind::kGroupMismatch: return "GroupMismatch";
  }
  return "?";
}

std::optional<VerdictKind> ParseVerdictKind(std::string_view name) {
  for (VerdictKind k : {VerdictKind::kAccepted, VerdictKind::kRejected, VerdictKind::kNoResponse,
                        VerdictKind::kNetworkError, VerdictKind::kCookieChallenged,
                        VerdictKind::kGroupMismatch}) {
    if (VerdictKindName(k) == name) return k;
  }
  return std::nullopt;
}

Verdict Verdict::Accepted(ike::Suite selected) {
  Verdict v;
  v.kind = VerdictKind::kAccepted;
  v.selected = std::move(selected);
  return v;
}

Verdict Verdict::Rejected(std::uint32_t code) {
  Verdict v;
  v.kind = VerdictKind::kRejected;
  v.code = code;
  return v;
}

Verdict Verdict::NoResponse() { return Verdict{}; }

Verdict Verdict::NetworkError(std::string detail) {
  Verdict v;
  v.kind = VerdictKind::kNetworkError;
  v.detail = std::move(detail);
  return v;
}

Verdict Verdict::CookieChallenged() {
  Verdict v;
  v.kind = VerdictKind::kCookieChallenged;
  return v;
}

Verdict Verdict::GroupMismatch(std::uint16_t group) {
  Verdict v;
  v.kind = VerdictKind::kGroupMismatch;
  v.group = group;
  return v;
}

bool Verdict::definitive() const {
  return kind != VerdictKind::kNoResponse && kind != VerdictKind::kNetworkError;
}

std::string Verdict::ToString() const {
  std::string out(VerdictKindName(kind));
  switch (kind) {
    case VerdictKind::kAccepted: return out + "(" + selected.ToString() + ")";
    case VerdictKind::kRejected:
      return out + "(" +
             (code == kEapStageNoSa ? std::string("EAP_STAGE_NO_SA")
                                    : std::string(ike::NotifyName(static_cast<std::uint16_t>(code)))) +
             ")";
    case VerdictKind::kGroupMismatch: return out + "(" + std::to_string(group) + ")";
    case VerdictKind::kNetworkError: return out + "(" + detail + ")";
    default: return out;
  }
}

ProbeOutcome ProbeL1(const std::string& address, const ProbeCombo& combo,
                     const ProbeOptions& opts) {
  if (combo.layer != Layer::kL1) throw ProbeError(ProbeErrc::kInvalidPlan, "ProbeL1 needs an L1 combo");
  CheckShape(combo);
  ProbeOutcome out;
  out.combo = combo;
  try {
    internal::Channel channel(UdpSocket::Connect(address, opts.ike_port), false, opts,
                              &out.transcript);
    internal::SaInitResult r = internal::RunSaInit(channel, combo.suite, opts, RngFor(opts));
    out.verdict = std::move(r.verdict);
    out.ike_sa = std::move(r.sa);
    out.rtt_ms = channel.last_rtt_ms();
  } catch (const ProbeError& e) {
    out.verdict = Verdict::NetworkError(e.what());
  }
  if (!opts.keep_transcript) out.transcript.clear();
  return out;
}

ProbeOutcome ProbeL2(const std::string& address, const ProbeOutcome& l1, const ProbeCombo& esp,
                     const std::string& nai, const ProbeOptions& opts) {
  if (l1.combo.layer != Layer::kL1 || l1.verdict.kind != VerdictKind::kAccepted) {
    throw ProbeError(ProbeErrc::kPrerequisiteMissing,
                     "L2 probing needs an accepted L1 combo, got " + l1.verdict.ToString());
  }
  if (esp.layer != Layer::kL2) throw ProbeError(ProbeErrc::kInvalidPlan, "ProbeL2 needs an L2 combo");
  CheckShape(esp);
  crypto::RandomSource& rng = RngFor(opts);
  ProbeOutcome out;
  out.combo = esp;
  try {
    internal::Channel init(UdpSocket::Connect(address, opts.ike_port), false, opts,
                           &out.transcript);
    internal::SaInitResult r = internal::RunSaInit(init, l1.combo.suite, opts, rng);
    if (r.verdict.kind != VerdictKind::kAccepted) {
      out.verdict = r.verdict.kind == VerdictKind::kNoResponse
                        ? r.verdict
                        : Verdict::NetworkError("IKE_SA_INIT no longer accepted: " +
                                                r.verdict.ToString());
      if (!opts.keep_transcript) out.transcript.clear();
      return out;
    }
    const IkeSaState& sa = *r.sa;
    out.ike_sa = sa;

    ike::IkeMessage request;
    request.header.initiator_spi = sa.spi_i;
    request.header.responder_spi = sa.spi_r;
    request.header.exchange_type = ike::ExchangeType::kIkeAuth;
    request.header.flags = ike::kFlagInitiator;
    request.header.message_id = kAuthMessageId;
    ike::EncryptedPayload sk;
    sk.inner.push_back(ike::IdPayload{ike::Side::kInitiator, ike::id_type::kRfc822Addr, ToBytes(nai)});
    sk.inner.push_back(
        ike::IdPayload{ike::Side::kResponder, ike::id_type::kFqdn, ToBytes(kResponderIdentity)});
    sk.inner.push_back(ike::BuildSaPayload(
        {ike::ProposalSpec::FromSuite(ike::ProtocolId::kEsp, esp.suite, rng.Generate(4))}));
    sk.inner.push_back(ike::TsPayload{ike::Side::kInitiator, {ike::TrafficSelector::WildcardIpv4()}});
    sk.inner.push_back(ike::TsPayload{ike::Side::kResponder, {ike::TrafficSelector::WildcardIpv4()}});
    request.payloads.push_back(std::move(sk));

    const auto seal =
        crypto::SealContext::ForSender(sa.suite, sa.keys, crypto::Role::kInitiator, &rng);
    const auto open = crypto::SealContext::ForSender(sa.suite, sa.keys, crypto::Role::kResponder);
    const Bytes wire = ike::EncodeMessage(request, &seal);

    std::optional<internal::Channel> natt;
    internal::Channel* channel = &init;
    if (sa.nat_detected) {
      natt.emplace(UdpSocket::Connect(address, opts.natt_port), true, opts, &out.transcript);
      channel = &*natt;
    }
    const std::optional<Bytes> raw = channel->RoundTrip(wire, sa.spi_i, kAuthMessageId);
    out.rtt_ms = channel->last_rtt_ms();
    if (!raw) {
      out.verdict = Verdict::NoResponse();
    } else {
      try {
        out.verdict = InterpretAuthReply(ike::DecodeMessage(*raw, &open), esp);
      } catch (const ike::WireError& e) {
        out.verdict = Verdict::NetworkError(e.code() == ike::WireErrc::kIntegrityFailure
                                                ? std::string("IntegrityFailure")
                                                : std::string("malformed IKE_AUTH response: ") +
                                                      e.what());
      }
    }
  } catch (const ProbeError& e) {
    out.verdict = Verdict::NetworkError(e.what());
  } catch (const crypto::CryptoError& e) {
    out.verdict = Verdict::NetworkError(e.what());
  }
  if (!opts.keep_transcript) out.transcript.clear();
  return out;
}

}  // namespace vowifi::probe
