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

#include "vowifi/ike/payloads.h"

#include "vowifi/crypto/primitives.h"

namespace vowifi::ike {

std::optional<std::uint16_t> Transform::key_bits() const {
  for (const auto& a : attributes) {
    if (a.type == kAttrKeyLength) {
      if (const auto* v = std::get_if<std::uint16_t>(&a.value)) return *v;
    }
  }
  return std::nullopt;
}

Algorithm Transform::algorithm() const { return Algorithm{type, id, key_bits().value_or(0)}; }

TrafficSelector TrafficSelector::WildcardIpv4() {
  TrafficSelector ts;
  ts.ts_type = kTsIpv4AddrRange;
  ts.ip_protocol = 0;
  ts.start_port = 0;
  ts.end_port = 0xffff;
  ts.start_address = {0, 0, 0, 0};
  ts.end_address = {255, 255, 255, 255};
  return ts;
}

bool EncryptedPayload::operator==(const EncryptedPayload& other) const {
  return inner == other.inner && sealed == other.sealed;
}

PayloadType Payload::type() const {
  struct Visitor {
    PayloadType operator()(const SaPayload&) const { return PayloadType::kSa; }
    PayloadType operator()(const KePayload&) const { return PayloadType::kKe; }
    PayloadType operator()(const NoncePayload&) const { return PayloadType::kNonce; }
    PayloadType operator()(const NotifyPayload&) const { return PayloadType::kNotify; }
    PayloadType operator()(const IdPayload& p) const {
      return p.side == Side::kInitiator ? PayloadType::kIdi : PayloadType::kIdr;
    }
    PayloadType operator()(const AuthPayload&) const { return PayloadType::kAuth; }
    PayloadType operator()(const TsPayload& p) const {
      return p.side == Side::kInitiator ? PayloadType::kTsi : PayloadType::kTsr;
    }
    PayloadType operator()(const EapPayload&) const { return PayloadType::kEap; }
    PayloadType operator()(const VendorPayload&) const { return PayloadType::kVendor; }
    PayloadType operator()(const OpaquePayload& p) const {
      return static_cast<PayloadType>(p.type);
    }
    PayloadType operator()(const EncryptedPayload&) const { return PayloadType::kSk; }
  };
  return std::visit(Visitor{}, body);
}

std::vector<const Payload*> IkeMessage::Flatten() const {
  std::vector<const Payload*> out;
  for (const auto& p : payloads) {
    if (const auto* sk = p.As<EncryptedPayload>()) {
      for (const auto& q : sk->inner) out.push_back(&q);
    } else {
      out.push_back(&p);
    }
  }
  return out;
}

const NotifyPayload* IkeMessage::FindNotify(std::uint16_t type) const {
  for (const Payload* p : Flatten()) {
    if (const auto* n = p->As<NotifyPayload>(); n != nullptr && n->type == type) return n;
  }
  return nullptr;
}

Bytes NatDetectionHash(const Spi& spi_i, const Spi& spi_r, const std::array<std::uint8_t, 4>& ip,
                       std::uint16_t port) {
  const std::uint8_t port_be[2] = {static_cast<std::uint8_t>(port >> 8),
                                   static_cast<std::uint8_t>(port)};
  return crypto::Sha1(Concat({spi_i, spi_r, ip, port_be}));
}

}  // namespace vowifi::ike
