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

#ifndef VOWIFI_IKE_REGISTRY_H_
#define VOWIFI_IKE_REGISTRY_H_

// IKEv2 code points used across the toolkit. Values mirror the IANA
// "Internet Key Exchange Version 2 (IKEv2) Parameters" registry.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vowifi::ike {

enum class ExchangeType : std::uint8_t {
  kIkeSaInit = 34,
  kIkeAuth = 35,
  kCreateChildSa = 36,
  kInformational = 37,
};

enum class PayloadType : std::uint8_t {
  kNone = 0,
  kSa = 33,
  kKe = 34,
  kIdi = 35,
  kIdr = 36,
  kCert = 37,
  kCertReq = 38,
  kAuth = 39,
  kNonce = 40,
  kNotify = 41,
  kDelete = 42,
  kVendor = 43,
  kTsi = 44,
  kTsr = 45,
  kSk = 46,
  kCp = 47,
  kEap = 48,
};

enum class ProtocolId : std::uint8_t {
  kNone = 0,
  kIke = 1,
  kAh = 2,
  kEsp = 3,
};

enum class TransformType : std::uint8_t {
  kEncr = 1,
  kPrf = 2,
  kInteg = 3,
  kDh = 4,
  kEsn = 5,
};

namespace encr {
inline constexpr std::uint16_t kDes = 2;
inline constexpr std::uint16_t k3Des = 3;
inline constexpr std::uint16_t kNull = 11;
inline constexpr std::uint16_t kAesCbc = 12;
}  // namespace encr

namespace prf {
inline constexpr std::uint16_t kHmacMd5 = 1;
inline constexpr std::uint16_t kHmacSha1 = 2;
inline constexpr std::uint16_t kHmacSha2_256 = 5;
}  // namespace prf

namespace integ {
inline constexpr std::uint16_t kNone = 0;
inline constexpr std::uint16_t kHmacSha1_96 = 2;
inline constexpr std::uint16_t kHmacSha2_256_128 = 12;
}  // namespace integ

namespace dh {
inline constexpr std::uint16_t kModp1024 = 2;
inline constexpr std::uint16_t kModp2048 = 14;
inline constexpr std::uint16_t kEcp256 = 19;
}  // namespace dh

namespace esn {
inline constexpr std::uint16_t kNoEsn = 0;
inline constexpr std::uint16_t kEsn = 1;
}  // namespace esn

// Transform attribute types.
inline constexpr std::uint16_t kAttrKeyLength = 14;

namespace notify {
// Error types (< 16384).
inline constexpr std::uint16_t kUnsupportedCriticalPayload = 1;
inline constexpr std::uint16_t kInvalidIkeSpi = 4;
inline constexpr std::uint16_t kInvalidMajorVersion = 5;
inline constexpr std::uint16_t kInvalidSyntax = 7;
inline constexpr std::uint16_t kInvalidMessageId = 9;
inline constexpr std::uint16_t kInvalidSpi = 11;
inline constexpr std::uint16_t kNoProposalChosen = 14;
inline constexpr std::uint16_t kInvalidKePayload = 17;
inline constexpr std::uint16_t kAuthenticationFailed = 24;
inline constexpr std::uint16_t kTsUnacceptable = 38;
inline constexpr std::uint16_t kTemporaryFailure = 43;
// Status types.
inline constexpr std::uint16_t kInitialContact = 16384;
inline constexpr std::uint16_t kNatDetectionSourceIp = 16388;
inline constexpr std::uint16_t kNatDetectionDestinationIp = 16389;
inline constexpr std::uint16_t kCookie = 16390;

inline constexpr bool IsError(std::uint16_t type) { return type < 16384; }
}  // namespace notify

namespace id_type {
inline constexpr std::uint8_t kIpv4Addr = 1;
inline constexpr std::uint8_t kFqdn = 2;
inline constexpr std::uint8_t kRfc822Addr = 3;
inline constexpr std::uint8_t kKeyId = 11;
}  // namespace id_type

namespace auth_method {
inline constexpr std::uint8_t kSharedKeyMic = 2;
}  // namespace auth_method

inline constexpr std::uint8_t kTsIpv4AddrRange = 7;

// One negotiable algorithm: a transform id plus, for variable-length
// ciphers, the key length in bits (0 otherwise).
struct Algorithm {
  TransformType type = TransformType::kEncr;
  std::uint16_t id = 0;
  std::uint16_t key_bits = 0;

  auto operator<=>(const Algorithm&) const = default;
};

// True when the ENCR id carries a mandatory key-length attribute.
bool RequiresKeyLength(std::uint16_t encr_id);

// Canonical name, e.g. "ENCR_AES_CBC_256", "PRF_HMAC_SHA2_256", "MODP_2048".
// Unregistered ids render as "<TYPE>_<id>".
std::string AlgorithmName(const Algorithm& alg);
std::optional<Algorithm> ParseAlgorithm(std::string_view name);

std::string_view TransformTypeName(TransformType type);
std::string NotifyName(std::uint16_t type);

// Every algorithm the toolkit can negotiate end to end.
const std::vector<Algorithm>& SupportedAlgorithms();

// A complete choice of at most one algorithm per transform type, kept
// sorted by type.
class Suite {
 public:
  Suite() = default;
  explicit Suite(std::vector<Algorithm> algorithms);

  const std::vector<Algorithm>& algorithms() const { return algorithms_; }
  std::optional<Algorithm> Get(TransformType type) const;
  bool Has(TransformType type) const { return Get(type).has_value(); }
  // Replaces or inserts the algorithm for its type.
  void Set(const Algorithm& alg);

  // "ENCR_NULL+PRF_HMAC_SHA1+AUTH_HMAC_SHA1_96+MODP_2048"
  std::string ToString() const;
  // Throws std::invalid_argument on unknown names or duplicate types.
  static Suite Parse(std::string_view text);

  auto operator<=>(const Suite&) const = default;

 private:
  std::vector<Algorithm> algorithms_;
};

}  // namespace vowifi::ike

#endif  // VOWIFI_IKE_REGISTRY_H_
