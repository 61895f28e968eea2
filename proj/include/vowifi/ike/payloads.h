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

#ifndef VOWIFI_IKE_PAYLOADS_H_
#define VOWIFI_IKE_PAYLOADS_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "vowifi/core/bytes.h"
#include "vowifi/ike/registry.h"

namespace vowifi::ike {

using Spi = std::array<std::uint8_t, 8>;

inline constexpr std::uint8_t kFlagInitiator = 0x08;
inline constexpr std::uint8_t kFlagVersion = 0x10;
inline constexpr std::uint8_t kFlagResponse = 0x20;
inline constexpr std::size_t kHeaderSize = 28;

// The wire length field is not stored: encode_message recomputes it and
// decode_message checks it against the datagram size.
struct IkeHeader {
  Spi initiator_spi{};
  Spi responder_spi{};
  std::uint8_t major_version = 2;
  std::uint8_t minor_version = 0;
  ExchangeType exchange_type = ExchangeType::kIkeSaInit;
  std::uint8_t flags = 0;
  std::uint32_t message_id = 0;

  bool initiator() const { return (flags & kFlagInitiator) != 0; }
  bool response() const { return (flags & kFlagResponse) != 0; }

  bool operator==(const IkeHeader&) const = default;
};

// Transform attribute. Key length is always emitted in TV form; TLV
// attributes received from peers are preserved with their raw value.
struct Attribute {
  std::uint16_t type = 0;
  std::variant<std::uint16_t, Bytes> value;

  bool operator==(const Attribute&) const = default;
};

struct Transform {
  TransformType type = TransformType::kEncr;
  std::uint16_t id = 0;
  std::vector<Attribute> attributes;

  std::optional<std::uint16_t> key_bits() const;
  Algorithm algorithm() const;

  bool operator==(const Transform&) const = default;
};

struct Proposal {
  std::uint8_t number = 1;
  ProtocolId protocol = ProtocolId::kIke;
  Bytes spi;
  std::vector<Transform> transforms;

  bool operator==(const Proposal&) const = default;
};

struct SaPayload {
  std::vector<Proposal> proposals;
  bool operator==(const SaPayload&) const = default;
};

struct KePayload {
  std::uint16_t dh_group = 0;
  Bytes public_value;
  bool operator==(const KePayload&) const = default;
};

struct NoncePayload {
  Bytes data;
  bool operator==(const NoncePayload&) const = default;
};

struct NotifyPayload {
  ProtocolId protocol = ProtocolId::kNone;
  std::uint16_t type = 0;
  Bytes spi;
  Bytes data;
  bool operator==(const NotifyPayload&) const = default;
};

enum class Side : std::uint8_t { kInitiator, kResponder };

struct IdPayload {
  Side side = Side::kInitiator;  // IDi or IDr
  std::uint8_t id_type = id_type::kRfc822Addr;
  Bytes data;
  bool operator==(const IdPayload&) const = default;
};

struct AuthPayload {
  std::uint8_t method = auth_method::kSharedKeyMic;
  Bytes data;
  bool operator==(const AuthPayload&) const = default;
};

struct TrafficSelector {
  std::uint8_t ts_type = kTsIpv4AddrRange;
  std::uint8_t ip_protocol = 0;
  std::uint16_t start_port = 0;
  std::uint16_t end_port = 0xffff;
  Bytes start_address;
  Bytes end_address;

  // 0.0.0.0-255.255.255.255, all ports, any protocol.
  static TrafficSelector WildcardIpv4();
  bool operator==(const TrafficSelector&) const = default;
};

struct TsPayload {
  Side side = Side::kInitiator;  // TSi or TSr
  std::vector<TrafficSelector> selectors;
  bool operator==(const TsPayload&) const = default;
};

struct EapPayload {
  Bytes data;
  bool operator==(const EapPayload&) const = default;
};

struct VendorPayload {
  Bytes data;
  bool operator==(const VendorPayload&) const = default;
};

// Any payload type without first-class support (CERT, CP, Delete, ...).
struct OpaquePayload {
  std::uint8_t type = 0;
  bool critical = false;
  Bytes body;
  bool operator==(const OpaquePayload&) const = default;
};

struct Payload;

// SK payload. After decoding with a SealContext `inner` holds the opened
// chain; without one, `sealed` keeps the raw IV | ciphertext | ICV.
struct EncryptedPayload {
  std::vector<Payload> inner;
  Bytes sealed;
  bool operator==(const EncryptedPayload& other) const;
};

struct Payload {
  using Body = std::variant<SaPayload, KePayload, NoncePayload, NotifyPayload, IdPayload,
                            AuthPayload, TsPayload, EapPayload, VendorPayload, OpaquePayload,
                            EncryptedPayload>;
  Body body;

  Payload() = default;
  template <typename T>
    requires(!std::is_same_v<std::decay_t<T>, Payload>)
  Payload(T value) : body(std::move(value)) {}  // NOLINT(google-explicit-constructor)

  PayloadType type() const;

  template <typename T>
  const T* As() const {
    return std::get_if<T>(&body);
  }

  bool operator==(const Payload&) const = default;
};

struct IkeMessage {
  IkeHeader header;
  std::vector<Payload> payloads;

  // First payload of the given kind, searching inside SK as well.
  template <typename T>
  const T* Find() const;
  // First Notify of the given type, searching inside SK as well.
  const NotifyPayload* FindNotify(std::uint16_t type) const;
  // All payloads, with the contents of an opened SK flattened in place.
  std::vector<const Payload*> Flatten() const;

  bool operator==(const IkeMessage&) const = default;
};

template <typename T>
const T* IkeMessage::Find() const {
  for (const Payload* p : Flatten()) {
    if (const T* v = p->As<T>()) return v;
  }
  return nullptr;
}

// NAT_DETECTION_*_IP data: SHA1(SPIi | SPIr | IPv4 | port).
Bytes NatDetectionHash(const Spi& spi_i, const Spi& spi_r, const std::array<std::uint8_t, 4>& ip,
                       std::uint16_t port);

}  // namespace vowifi::ike

#endif  // VOWIFI_IKE_PAYLOADS_H_
