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

#include "vowifi/ike/registry.h"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace vowifi::ike {
namespace {

struct Entry {
  TransformType type;
  std::uint16_t id;
  std::string_view name;
};

constexpr std::array<Entry, 16> kEntries = {{
    {TransformType::kEncr, encr::kDes, "ENCR_DES"},
    {TransformType::kEncr, encr::k3Des, "ENCR_3DES"},
    {TransformType::kEncr, encr::kNull, "ENCR_NULL"},
    {TransformType::kEncr, encr::kAesCbc, "ENCR_AES_CBC"},
    {TransformType::kPrf, prf::kHmacMd5, "PRF_HMAC_MD5"},
    {TransformType::kPrf, prf::kHmacSha1, "PRF_HMAC_SHA1"},
    {TransformType::kPrf, prf::kHmacSha2_256, "PRF_HMAC_SHA2_256"},
    {TransformType::kInteg, integ::kNone, "AUTH_NONE"},
    {TransformType::kInteg, integ::kHmacSha1_96, "AUTH_HMAC_SHA1_96"},
    {TransformType::kInteg, integ::kHmacSha2_256_128, "AUTH_HMAC_SHA2_256_128"},
    {TransformType::kDh, dh::kModp1024, "MODP_1024"},
    {TransformType::kDh, dh::kModp2048, "MODP_2048"},
    {TransformType::kDh, dh::kEcp256, "ECP_256"},
    {TransformType::kEsn, esn::kNoEsn, "NO_ESN"},
    {TransformType::kEsn, esn::kEsn, "ESN"},
    {TransformType::kEncr, 1, "ENCR_DES_IV64"},
}};

}  // namespace

bool RequiresKeyLength(std::uint16_t encr_id) { return encr_id == encr::kAesCbc; }

std::string_view TransformTypeName(TransformType type) {
  switch (type) {
    case TransformType::kEncr: return "ENCR";
    case TransformType::kPrf: return "PRF";
    case TransformType::kInteg: return "INTEG";
    case TransformType::kDh: return "DH";
    case TransformType::kEsn: return "ESN";
  }
  return "UNKNOWN";
}

std::string AlgorithmName(const Algorithm& alg) {
  for (const auto& e : kEntries) {
    if (e.type == alg.type && e.id == alg.id) {
      std::string name(e.name);
      if (alg.key_bits != 0) name += "_" + std::to_string(alg.key_bits);
      return name;
    }
  }
  std::string name = std::string(TransformTypeName(alg.type)) + "_" + std::to_string(alg.id);
  if (alg.key_bits != 0) name += "_" + std::to_string(alg.key_bits);
  return name;
}

std::optional<Algorithm> ParseAlgorithm(std::string_view name) {
  for (const auto& e : kEntries) {
    if (name == e.name) {
      if (e.type == TransformType::kEncr && RequiresKeyLength(e.id)) return std::nullopt;
      return Algorithm{e.type, e.id, 0};
    }
    if (e.type == TransformType::kEncr && RequiresKeyLength(e.id) &&
        name.size() > e.name.size() + 1 && name.substr(0, e.name.size()) == e.name &&
        name[e.name.size()] == '_') {
      auto bits = name.substr(e.name.size() + 1);
      if (bits == "128") return Algorithm{e.type, e.id, 128};
      if (bits == "192") return Algorithm{e.type, e.id, 192};
      if (bits == "256") return Algorithm{e.type, e.id, 256};
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::string NotifyName(std::uint16_t type) {
  switch (type) {
    case notify::kUnsupportedCriticalPayload: return "UNSUPPORTED_CRITICAL_PAYLOAD";
    case notify::kInvalidIkeSpi: return "INVALID_IKE_SPI";
    case notify::kInvalidMajorVersion: return "INVALID_MAJOR_VERSION";
    case notify::kInvalidSyntax: return "INVALID_SYNTAX";
    case notify::kInvalidMessageId: return "INVALID_MESSAGE_ID";
    case notify::kInvalidSpi: return "INVALID_SPI";
    case notify::kNoProposalChosen: return "NO_PROPOSAL_CHOSEN";
    case notify::kInvalidKePayload: return "INVALID_KE_PAYLOAD";
    case notify::kAuthenticationFailed: return "AUTHENTICATION_FAILED";
    case notify::kTsUnacceptable: return "TS_UNACCEPTABLE";
    case notify::kTemporaryFailure: return "TEMPORARY_FAILURE";
    case notify::kInitialContact: return "INITIAL_CONTACT";
    case notify::kNatDetectionSourceIp: return "NAT_DETECTION_SOURCE_IP";
    case notify::kNatDetectionDestinationIp: return "NAT_DETECTION_DESTINATION_IP";
    case notify::kCookie: return "COOKIE";
    default: return "NOTIFY_" + std::to_string(type);
  }
}

const std::vector<Algorithm>& SupportedAlgorithms() {
  static const std::vector<Algorithm> kSupported = {
      {TransformType::kEncr, encr::kNull, 0},
      {TransformType::kEncr, encr::kDes, 0},
      {TransformType::kEncr, encr::k3Des, 0},
      {TransformType::kEncr, encr::kAesCbc, 128},
      {TransformType::kEncr, encr::kAesCbc, 256},
      {TransformType::kPrf, prf::kHmacSha1, 0},
      {TransformType::kPrf, prf::kHmacSha2_256, 0},
      {TransformType::kInteg, integ::kHmacSha1_96, 0},
      {TransformType::kInteg, integ::kHmacSha2_256_128, 0},
      {TransformType::kDh, dh::kModp1024, 0},
      {TransformType::kDh, dh::kModp2048, 0},
      {TransformType::kEsn, esn::kNoEsn, 0},
      {TransformType::kEsn, esn::kEsn, 0},
  };
  return kSupported;
}

Suite::Suite(std::vector<Algorithm> algorithms) {
  for (const auto& a : algorithms) {
    if (Has(a.type)) throw std::invalid_argument("duplicate transform type in suite");
    Set(a);
  }
}

std::optional<Algorithm> Suite::Get(TransformType type) const {
  for (const auto& a : algorithms_) {
    if (a.type == type) return a;
  }
  return std::nullopt;
}

void Suite::Set(const Algorithm& alg) {
  auto it = std::find_if(algorithms_.begin(), algorithms_.end(),
                         [&](const Algorithm& a) { return a.type == alg.type; });
  if (it != algorithms_.end()) {
    *it = alg;
    return;
  }
  algorithms_.push_back(alg);
  std::sort(algorithms_.begin(), algorithms_.end(),
            [](const Algorithm& a, const Algorithm& b) { return a.type < b.type; });
}

std::string Suite::ToString() const {
  std::string out;
  for (const auto& a : algorithms_) {
    if (!out.empty()) out += "+";
    out += AlgorithmName(a);
  }
  return out;
}

Suite Suite::Parse(std::string_view text) {
  std::vector<Algorithm> algs;
  while (!text.empty()) {
    auto plus = text.find('+');
    auto token = text.substr(0, plus);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    auto alg = ParseAlgorithm(token);
    if (!alg) throw std::invalid_argument("unknown algorithm '" + std::string(token) + "'");
    algs.push_back(*alg);
    if (plus == std::string_view::npos) break;
    text.remove_prefix(plus + 1);
  }
  return Suite(std::move(algs));
}

}  // namespace vowifi::ike
