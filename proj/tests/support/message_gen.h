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

#ifndef VOWIFI_TESTS_SUPPORT_MESSAGE_GEN_H_
#define VOWIFI_TESTS_SUPPORT_MESSAGE_GEN_H_

#include <algorithm>

#include "support/seeded_random.h"
#include "vowifi/ike/payloads.h"

namespace vowifi::testing {

// Random structurally valid IKE messages for round-trip properties.
class MessageGenerator {
 public:
  explicit MessageGenerator(std::uint64_t seed) : rng_(seed) {}

  ike::IkeMessage Next(bool with_sk) {
    ike::IkeMessage m;
    rng_.Fill(m.header.initiator_spi);
    rng_.Fill(m.header.responder_spi);
    static constexpr ike::ExchangeType kTypes[] = {
        ike::ExchangeType::kIkeSaInit, ike::ExchangeType::kIkeAuth,
        ike::ExchangeType::kCreateChildSa, ike::ExchangeType::kInformational};
    m.header.exchange_type = kTypes[Below(4)];
    m.header.flags = static_cast<std::uint8_t>(
        (Below(2) ? ike::kFlagInitiator : 0) | (Below(2) ? ike::kFlagResponse : 0));
    m.header.message_id = static_cast<std::uint32_t>(rng_.Next());
    const std::size_t count = Below(7);
    for (std::size_t i = 0; i < count; ++i) m.payloads.push_back(RandomPayload());
    if (with_sk) {
      ike::EncryptedPayload sk;
      const std::size_t inner = Below(5);
      for (std::size_t i = 0; i < inner; ++i) sk.inner.push_back(RandomPayload());
      m.payloads.push_back(std::move(sk));
    }
    return m;
  }

  SeededRandom& rng() { return rng_; }

 private:
  std::size_t Below(std::size_t n) { return static_cast<std::size_t>(rng_.Next() % n); }
  Bytes RandomBytes(std::size_t max) { return rng_.Generate(Below(max + 1)); }
  Bytes Spi() {
    static constexpr std::size_t kSizes[] = {0, 4, 8};
    return rng_.Generate(kSizes[Below(3)]);
  }

  ike::SaPayload RandomSa() {
    ike::SaPayload sa;
    const std::size_t n = 1 + Below(3);
    for (std::size_t i = 0; i < n; ++i) {
      ike::Proposal p;
      p.number = static_cast<std::uint8_t>(i + 1);
      p.protocol = Below(2) ? ike::ProtocolId::kIke : ike::ProtocolId::kEsp;
      p.spi = Spi();
      const std::size_t t = 1 + Below(5);
      for (std::size_t j = 0; j < t; ++j) {
        ike::Transform tr;
        tr.type = static_cast<ike::TransformType>(1 + Below(5));
        tr.id = static_cast<std::uint16_t>(Below(20));
        if (Below(3) == 0) {
          tr.attributes.push_back(ike::Attribute{ike::kAttrKeyLength,
                                                 static_cast<std::uint16_t>(128 + 64 * Below(3))});
        }
        if (Below(8) == 0) {
          tr.attributes.push_back(
              ike::Attribute{static_cast<std::uint16_t>(1 + Below(100)), RandomBytes(12)});
        }
        p.transforms.push_back(std::move(tr));
      }
      sa.proposals.push_back(std::move(p));
    }
    return sa;
  }

  ike::Payload RandomPayload() {
    switch (Below(11)) {
      case 0: return RandomSa();
      case 1: return ike::KePayload{static_cast<std::uint16_t>(Below(32)), RandomBytes(300)};
      case 2: return ike::NoncePayload{rng_.Generate(16 + Below(241))};
      case 3: {
        ike::NotifyPayload n;
        n.protocol = static_cast<ike::ProtocolId>(Below(4));
        n.type = static_cast<std::uint16_t>(rng_.Next());
        n.spi = Spi();
        n.data = RandomBytes(40);
        return n;
      }
      case 4:
        return ike::IdPayload{Below(2) ? ike::Side::kInitiator : ike::Side::kResponder,
                              static_cast<std::uint8_t>(1 + Below(11)), RandomBytes(64)};
      case 5: return ike::AuthPayload{static_cast<std::uint8_t>(1 + Below(14)), RandomBytes(64)};
      case 6: {
        ike::TsPayload ts;
        ts.side = Below(2) ? ike::Side::kInitiator : ike::Side::kResponder;
        const std::size_t n = 1 + Below(3);
        for (std::size_t i = 0; i < n; ++i) {
          ike::TrafficSelector s;
          const bool v6 = Below(4) == 0;
          s.ts_type = v6 ? 8 : ike::kTsIpv4AddrRange;
          s.ip_protocol = static_cast<std::uint8_t>(Below(256));
          s.start_port = static_cast<std::uint16_t>(rng_.Next());
          s.end_port = static_cast<std::uint16_t>(rng_.Next());
          s.start_address = rng_.Generate(v6 ? 16 : 4);
          s.end_address = rng_.Generate(v6 ? 16 : 4);
          ts.selectors.push_back(std::move(s));
        }
        return ts;
      }
      case 7: return ike::EapPayload{RandomBytes(80)};
      case 8: return ike::VendorPayload{RandomBytes(32)};
      case 9: {
        static constexpr std::uint8_t kKnown[] = {37, 38, 42, 47};
        return ike::OpaquePayload{kKnown[Below(4)], Below(2) == 0, RandomBytes(50)};
      }
      default:
        // Unregistered, non-critical: kept opaque.
        return ike::OpaquePayload{static_cast<std::uint8_t>(128 + Below(100)), false,
                                  RandomBytes(50)};
    }
  }

  SeededRandom rng_;
};

}  // namespace vowifi::testing

#endif  // VOWIFI_TESTS_SUPPORT_MESSAGE_GEN_H_
