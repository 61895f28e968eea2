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

#include "vowifi/ike/wire.h"

#include <algorithm>

#include "vowifi/crypto/primitives.h"

namespace vowifi::ike {

std::string_view WireErrcName(WireErrc code) {
  switch (code) {
    case WireErrc::kTruncated: return "Truncated";
    case WireErrc::kBadVersion: return "BadVersion";
    case WireErrc::kIntegrityFailure: return "IntegrityFailure";
    case WireErrc::kUnknownCriticalPayload: return "UnknownCriticalPayload";
    case WireErrc::kMalformed: return "Malformed";
    case WireErrc::kInvariantViolation: return "InvariantViolation";
    case WireErrc::kMissingSealContext: return "MissingSealContext";
  }
  return "Unknown";
}

namespace {

constexpr std::size_t kGenericHeaderSize = 4;
constexpr std::uint8_t kCriticalBit = 0x80;
constexpr std::uint8_t kMoreProposals = 2;
constexpr std::uint8_t kMoreTransforms = 3;

[[noreturn]] void Violation(const std::string& what) {
  throw WireError(WireErrc::kInvariantViolation, what);
}
[[noreturn]] void Malformed(const std::string& what) {
  throw WireError(WireErrc::kMalformed, what);
}

bool IsFirstClass(std::uint8_t type) {
  switch (static_cast<PayloadType>(type)) {
    case PayloadType::kSa:
    case PayloadType::kKe:
    case PayloadType::kIdi:
    case PayloadType::kIdr:
    case PayloadType::kAuth:
    case PayloadType::kNonce:
    case PayloadType::kNotify:
    case PayloadType::kVendor:
    case PayloadType::kTsi:
    case PayloadType::kTsr:
    case PayloadType::kSk:
    case PayloadType::kEap:
      return true;
    default:
      return false;
  }
}

// Registered but carried opaquely.
bool IsKnownOpaque(std::uint8_t type) {
  switch (static_cast<PayloadType>(type)) {
    case PayloadType::kCert:
    case PayloadType::kCertReq:
    case PayloadType::kDelete:
    case PayloadType::kCp:
      return true;
    default:
      return false;
  }
}

// ---------------------------------------------------------------- encoding

void CheckSpiSize(std::size_t n) {
  if (n != 0 && n != 4 && n != 8) Violation("SPI size must be 0, 4 or 8");
}

void EncodeSa(ByteWriter& w, const SaPayload& sa) {
  if (sa.proposals.empty()) Violation("SA payload without proposals");
  int previous = 0;
  for (std::size_t i = 0; i < sa.proposals.size(); ++i) {
    const Proposal& p = sa.proposals[i];
    if (p.number == 0 || p.number <= previous) Violation("proposal numbers must increase from 1");
    previous = p.number;
    if (p.transforms.empty()) Violation("proposal without transforms");
    if (p.transforms.size() > 255) Violation("too many transforms");
    CheckSpiSize(p.spi.size());

    const std::size_t start = w.size();
    w.U8(i + 1 < sa.proposals.size() ? kMoreProposals : 0);
    w.U8(0);
    w.U16(0);
    w.U8(p.number);
    w.U8(static_cast<std::uint8_t>(p.protocol));
    w.U8(static_cast<std::uint8_t>(p.spi.size()));
    w.U8(static_cast<std::uint8_t>(p.transforms.size()));
    w.Raw(p.spi);
    for (std::size_t t = 0; t < p.transforms.size(); ++t) {
      const Transform& tr = p.transforms[t];
      const std::size_t tstart = w.size();
      w.U8(t + 1 < p.transforms.size() ? kMoreTransforms : 0);
      w.U8(0);
      w.U16(0);
      w.U8(static_cast<std::uint8_t>(tr.type));
      w.U8(0);
      w.U16(tr.id);
      for (const Attribute& a : tr.attributes) {
        if (a.type > 0x7fff) Violation("attribute type out of range");
        if (const auto* tv = std::get_if<std::uint16_t>(&a.value)) {
          w.U16(static_cast<std::uint16_t>(0x8000 | a.type));
          w.U16(*tv);
        } else {
          const Bytes& v = std::get<Bytes>(a.value);
          if (v.size() > 0xffff) Violation("attribute too long");
          w.U16(a.type);
          w.U16(static_cast<std::uint16_t>(v.size()));
          w.Raw(v);
        }
      }
      const std::size_t tlen = w.size() - tstart;
      if (tlen > 0xffff) Violation("transform too long");
      w.PatchU16(tstart + 2, static_cast<std::uint16_t>(tlen));
    }
    const std::size_t plen = w.size() - start;
    if (plen > 0xffff) Violation("proposal too long");
    w.PatchU16(start + 2, static_cast<std::uint16_t>(plen));
  }
}

void EncodeTs(ByteWriter& w, const TsPayload& ts) {
  if (ts.selectors.empty() || ts.selectors.size() > 255) Violation("TS payload selector count");
  w.U8(static_cast<std::uint8_t>(ts.selectors.size()));
  w.Zeros(3);
  for (const TrafficSelector& s : ts.selectors) {
    if (s.start_address.size() != s.end_address.size()) Violation("TS address sizes differ");
    w.U8(s.ts_type);
    w.U8(s.ip_protocol);
    w.U16(static_cast<std::uint16_t>(8 + 2 * s.start_address.size()));
    w.U16(s.start_port);
    w.U16(s.end_port);
    w.Raw(s.start_address);
    w.Raw(s.end_address);
  }
}

void EncodeBody(ByteWriter& w, const Payload& p) {
  struct Visitor {
    ByteWriter& w;
    void operator()(const SaPayload& v) const { EncodeSa(w, v); }
    void operator()(const KePayload& v) const {
      w.U16(v.dh_group);
      w.U16(0);
      w.Raw(v.public_value);
    }
    void operator()(const NoncePayload& v) const {
      if (v.data.size() < 16 || v.data.size() > 256) Violation("nonce length outside [16, 256]");
      w.Raw(v.data);
    }
    void operator()(const NotifyPayload& v) const {
      if (v.spi.size() > 255) Violation("notify SPI too long");
      w.U8(static_cast<std::uint8_t>(v.protocol));
      w.U8(static_cast<std::uint8_t>(v.spi.size()));
      w.U16(v.type);
      w.Raw(v.spi);
      w.Raw(v.data);
    }
    void operator()(const IdPayload& v) const {
      w.U8(v.id_type);
      w.Zeros(3);
      w.Raw(v.data);
    }
    void operator()(const AuthPayload& v) const {
      w.U8(v.method);
      w.Zeros(3);
      w.Raw(v.data);
    }
    void operator()(const TsPayload& v) const { EncodeTs(w, v); }
    void operator()(const EapPayload& v) const { w.Raw(v.data); }
    void operator()(const VendorPayload& v) const { w.Raw(v.data); }
    void operator()(const OpaquePayload& v) const {
      if (IsFirstClass(v.type) || v.type == 0) Violation("opaque payload shadows a known type");
      w.Raw(v.body);
    }
    void operator()(const EncryptedPayload&) const { Violation("SK payload cannot be nested"); }
  };
  std::visit(Visitor{w}, p.body);
}

bool IsCritical(const Payload& p) {
  if (const auto* o = p.As<OpaquePayload>()) return o->critical;
  return false;
}

// Encodes a payload chain (no SK) into `w`; the last payload points at
// `final_next`.
void EncodeChain(ByteWriter& w, std::span<const Payload> chain, std::uint8_t final_next = 0) {
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const Payload& p = chain[i];
    if (p.As<EncryptedPayload>() != nullptr) Violation("SK payload must be last and unnested");
    const std::uint8_t next =
        i + 1 < chain.size() ? static_cast<std::uint8_t>(chain[i + 1].type()) : final_next;
    const std::size_t start = w.size();
    w.U8(next);
    w.U8(IsCritical(p) ? kCriticalBit : 0);
    w.U16(0);
    EncodeBody(w, p);
    const std::size_t len = w.size() - start;
    if (len > 0xffff) Violation("payload exceeds 65535 octets");
    w.PatchU16(start + 2, static_cast<std::uint16_t>(len));
  }
}

void EncodeHeader(ByteWriter& w, const IkeHeader& h, std::uint8_t first) {
  if (h.major_version != 2 || h.minor_version != 0) Violation("version must be 2.0");
  w.Raw(h.initiator_spi);
  w.Raw(h.responder_spi);
  w.U8(first);
  w.U8(static_cast<std::uint8_t>((h.major_version << 4) | h.minor_version));
  w.U8(static_cast<std::uint8_t>(h.exchange_type));
  w.U8(h.flags);
  w.U32(h.message_id);
  w.U32(0);
}

// ---------------------------------------------------------------- decoding

Attribute DecodeAttribute(ByteReader& r) {
  const std::uint16_t word = r.U16();
  Attribute a;
  a.type = word & 0x7fff;
  if ((word & 0x8000) != 0) {
    a.value = r.U16();
  } else {
    const std::uint16_t len = r.U16();
    a.value = r.TakeBytes(len);
  }
  return a;
}

SaPayload DecodeSa(ByteReader& r) {
  SaPayload sa;
  bool more = true;
  while (more) {
    if (r.empty()) Malformed("proposal chain ends early");
    const std::uint8_t last = r.U8();
    r.Skip(1);
    const std::uint16_t len = r.U16();
    if (last != 0 && last != kMoreProposals) Malformed("bad proposal substructure marker");
    if (len < 8 || len - 4u > r.remaining()) Malformed("bad proposal length");
    ByteReader pr(r.Take(len - 4u));
    Proposal p;
    p.number = pr.U8();
    p.protocol = static_cast<ProtocolId>(pr.U8());
    const std::uint8_t spi_size = pr.U8();
    const std::uint8_t count = pr.U8();
    p.spi = pr.TakeBytes(spi_size);
    for (std::uint8_t t = 0; t < count; ++t) {
      const std::uint8_t tlast = pr.U8();
      pr.Skip(1);
      const std::uint16_t tlen = pr.U16();
      if (tlast != 0 && tlast != kMoreTransforms) Malformed("bad transform marker");
      if ((tlast == 0) != (t + 1 == count)) Malformed("transform count mismatch");
      if (tlen < 8 || tlen - 4u > pr.remaining()) Malformed("bad transform length");
      ByteReader tr(pr.Take(tlen - 4u));
      Transform x;
      x.type = static_cast<TransformType>(tr.U8());
      tr.Skip(1);
      x.id = tr.U16();
      while (!tr.empty()) x.attributes.push_back(DecodeAttribute(tr));
      p.transforms.push_back(std::move(x));
    }
    if (!pr.empty()) Malformed("trailing bytes in proposal");
    sa.proposals.push_back(std::move(p));
    more = last == kMoreProposals;
  }
  if (!r.empty()) Malformed("trailing bytes after last proposal");
  return sa;
}

TsPayload DecodeTs(ByteReader& r, Side side) {
  TsPayload ts;
  ts.side = side;
  const std::uint8_t count = r.U8();
  r.Skip(3);
  for (std::uint8_t i = 0; i < count; ++i) {
    TrafficSelector s;
    s.ts_type = r.U8();
    s.ip_protocol = r.U8();
    const std::uint16_t len = r.U16();
    if (len < 8 || (len - 8) % 2 != 0) Malformed("bad traffic selector length");
    s.start_port = r.U16();
    s.end_port = r.U16();
    const std::size_t addr = (len - 8u) / 2;
    s.start_address = r.TakeBytes(addr);
    s.end_address = r.TakeBytes(addr);
    ts.selectors.push_back(std::move(s));
  }
  if (!r.empty()) Malformed("trailing bytes in TS payload");
  return ts;
}

Payload DecodeBody(std::uint8_t type, bool critical, ByteView body) {
  ByteReader r(body);
  try {
    switch (static_cast<PayloadType>(type)) {
      case PayloadType::kSa:
        return DecodeSa(r);
      case PayloadType::kKe: {
        KePayload ke;
        ke.dh_group = r.U16();
        r.Skip(2);
        ke.public_value = r.TakeBytes(r.remaining());
        return ke;
      }
      case PayloadType::kNonce:
        if (body.size() < 16 || body.size() > 256) Malformed("nonce length outside [16, 256]");
        return NoncePayload{Bytes(body.begin(), body.end())};
      case PayloadType::kNotify: {
        NotifyPayload n;
        n.protocol = static_cast<ProtocolId>(r.U8());
        const std::uint8_t spi_size = r.U8();
        n.type = r.U16();
        n.spi = r.TakeBytes(spi_size);
        n.data = r.TakeBytes(r.remaining());
        return n;
      }
      case PayloadType::kIdi:
      case PayloadType::kIdr: {
        IdPayload id;
        id.side = type == static_cast<std::uint8_t>(PayloadType::kIdi) ? Side::kInitiator
                                                                        : Side::kResponder;
        id.id_type = r.U8();
        r.Skip(3);
        id.data = r.TakeBytes(r.remaining());
        return id;
      }
      case PayloadType::kAuth: {
        AuthPayload a;
        a.method = r.U8();
        r.Skip(3);
        a.data = r.TakeBytes(r.remaining());
        return a;
      }
      case PayloadType::kTsi:
        return DecodeTs(r, Side::kInitiator);
      case PayloadType::kTsr:
        return DecodeTs(r, Side::kResponder);
      case PayloadType::kEap:
        return EapPayload{Bytes(body.begin(), body.end())};
      case PayloadType::kVendor:
        return VendorPayload{Bytes(body.begin(), body.end())};
      default:
        if (critical && !IsKnownOpaque(type)) {
          throw WireError(WireErrc::kUnknownCriticalPayload,
                          "critical payload type " + std::to_string(type));
        }
        return OpaquePayload{type, critical, Bytes(body.begin(), body.end())};
    }
  } catch (const ShortRead&) {
    Malformed("payload type " + std::to_string(type) + " body too short");
  }
}

// Walks a chain starting at `first`. When an SK payload is met and
// `allow_sk`, it is handled by the caller-provided `on_sk`, which receives
// the payload's absolute offset and must be the last in the message.
template <typename SkHandler>
std::vector<Payload> DecodeChain(ByteView data, std::size_t offset, std::uint8_t first,
                                 bool allow_sk, SkHandler&& on_sk) {
  std::vector<Payload> out;
  std::uint8_t type = first;
  while (type != 0) {
    if (data.size() - offset < kGenericHeaderSize) {
      throw WireError(WireErrc::kTruncated, "payload header at offset " + std::to_string(offset));
    }
    const std::uint8_t next = data[offset];
    const bool critical = (data[offset + 1] & kCriticalBit) != 0;
    const std::size_t len = (std::size_t{data[offset + 2]} << 8) | data[offset + 3];
    if (len < kGenericHeaderSize) Malformed("payload length below 4");
    if (len > data.size() - offset) {
      throw WireError(WireErrc::kTruncated, "payload at offset " + std::to_string(offset));
    }
    if (type == static_cast<std::uint8_t>(PayloadType::kSk)) {
      if (!allow_sk) Malformed("nested SK payload");
      if (offset + len != data.size()) Malformed("SK payload is not last");
      out.push_back(on_sk(offset, len, next));
      return out;
    }
    out.push_back(DecodeBody(type, critical, data.subspan(offset + 4, len - 4)));
    offset += len;
    type = next;
  }
  if (offset != data.size()) Malformed("trailing bytes after payload chain");
  return out;
}

}  // namespace

Bytes EncodeMessage(const IkeMessage& msg, const crypto::SealContext* seal) {
  const auto& payloads = msg.payloads;
  const EncryptedPayload* sk = nullptr;
  for (std::size_t i = 0; i < payloads.size(); ++i) {
    if (const auto* e = payloads[i].As<EncryptedPayload>()) {
      if (i + 1 != payloads.size()) Violation("SK payload must be last");
      sk = e;
    }
  }
  if (sk != nullptr && seal == nullptr) {
    throw WireError(WireErrc::kMissingSealContext, "message carries an SK payload");
  }

  ByteWriter w;
  const std::uint8_t first =
      payloads.empty() ? 0 : static_cast<std::uint8_t>(payloads.front().type());
  EncodeHeader(w, msg.header, first);

  std::span<const Payload> plain(payloads.data(), payloads.size() - (sk != nullptr ? 1 : 0));
  EncodeChain(w, plain, sk != nullptr ? static_cast<std::uint8_t>(PayloadType::kSk) : 0);

  if (sk == nullptr) {
    w.PatchU32(24, static_cast<std::uint32_t>(w.size()));
    return w.Take();
  }

  for (const auto& p : sk->inner) {
    if (p.As<EncryptedPayload>() != nullptr) Violation("SK payload cannot be nested");
  }
  ByteWriter inner;
  EncodeChain(inner, sk->inner);
  const std::uint8_t inner_first =
      sk->inner.empty() ? 0 : static_cast<std::uint8_t>(sk->inner.front().type());
  const std::size_t total = w.size() + seal->SealedPayloadSize(inner.size());
  w.PatchU32(24, static_cast<std::uint32_t>(total));
  Bytes sealed = crypto::SkSeal(inner.bytes(), *seal, inner_first, w.bytes());
  w.Raw(sealed);
  return w.Take();
}

IkeHeader DecodeHeader(ByteView data) {
  if (data.size() < kHeaderSize) {
    throw WireError(WireErrc::kTruncated, "datagram shorter than IKE header");
  }
  ByteReader r(data);
  IkeHeader h;
  auto spi_i = r.Take(8);
  auto spi_r = r.Take(8);
  std::copy(spi_i.begin(), spi_i.end(), h.initiator_spi.begin());
  std::copy(spi_r.begin(), spi_r.end(), h.responder_spi.begin());
  r.Skip(1);
  const std::uint8_t version = r.U8();
  h.major_version = version >> 4;
  h.minor_version = version & 0x0f;
  if (h.major_version != 2) {
    throw WireError(WireErrc::kBadVersion, "major version " + std::to_string(h.major_version));
  }
  h.exchange_type = static_cast<ExchangeType>(r.U8());
  h.flags = r.U8();
  h.message_id = r.U32();
  return h;
}

IkeMessage DecodeMessage(ByteView data, const crypto::SealContext* open) {
  IkeMessage msg;
  msg.header = DecodeHeader(data);
  const std::size_t length = (std::size_t{data[24]} << 24) | (std::size_t{data[25]} << 16) |
                             (std::size_t{data[26]} << 8) | data[27];
  if (length > data.size()) throw WireError(WireErrc::kTruncated, "header length exceeds datagram");
  if (length < kHeaderSize) Malformed("header length below 28");
  if (length != data.size()) Malformed("datagram longer than header length");

  auto on_sk = [&](std::size_t offset, std::size_t len, std::uint8_t inner_first) -> Payload {
    EncryptedPayload sk;
    ByteView payload = data.subspan(offset, len);
    if (open == nullptr) {
      sk.sealed.assign(payload.begin() + 4, payload.end());
      return sk;
    }
    Bytes inner;
    try {
      inner = crypto::SkOpen(payload, *open, data.first(offset));
    } catch (const crypto::CryptoError& e) {
      if (e.code() == crypto::CryptoErrc::kIntegrityFailure) {
        throw WireError(WireErrc::kIntegrityFailure, e.what());
      }
      Malformed(e.what());
    }
    sk.inner = DecodeChain(inner, 0, inner_first, false,
                           [](std::size_t, std::size_t, std::uint8_t) -> Payload {
                             Malformed("nested SK payload");
                           });
    return sk;
  };
  msg.payloads = DecodeChain(data, kHeaderSize, data[16], true, on_sk);
  return msg;
}

}  // namespace vowifi::ike
