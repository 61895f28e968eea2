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

#ifndef VOWIFI_CRYPTO_PRIMITIVES_H_
#define VOWIFI_CRYPTO_PRIMITIVES_H_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "vowifi/core/bytes.h"

namespace vowifi::crypto {

enum class CryptoErrc {
  kUnsupportedAlgorithm,
  kUnsupportedGroup,
  kInvalidPeerValue,
  kInvalidKey,
  kIntegrityFailure,
  kBadPadding,
  kBackend,
};

class CryptoError : public std::runtime_error {
 public:
  CryptoError(CryptoErrc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  CryptoErrc code() const { return code_; }

 private:
  CryptoErrc code_;
};

Bytes Sha1(ByteView data);
Bytes HmacSha1(ByteView key, ByteView data);
Bytes HmacSha256(ByteView key, ByteView data);

// Negotiated-algorithm sizes, in octets. Throw kUnsupportedAlgorithm for
// ids outside the supported set.
std::size_t PrfOutputLength(std::uint16_t prf_id);
std::size_t IntegKeyLength(std::uint16_t integ_id);
std::size_t IntegIcvLength(std::uint16_t integ_id);
std::size_t EncrKeyLength(std::uint16_t encr_id, std::uint16_t key_bits);
std::size_t EncrBlockSize(std::uint16_t encr_id);
std::size_t EncrIvLength(std::uint16_t encr_id);

// True when DES and 3DES were compiled in.
bool AuditCiphersEnabled();

Bytes Prf(std::uint16_t prf_id, ByteView key, ByteView data);
// prf+ (K, S) = T1 | T2 | ... truncated to `length` octets, where
// T1 = prf(K, S | 0x01) and Tn = prf(K, Tn-1 | S | n).
Bytes PrfPlus(std::uint16_t prf_id, ByteView key, ByteView seed, std::size_t length);
// Truncated integrity checksum.
Bytes Integ(std::uint16_t integ_id, ByteView key, ByteView data);

// Raw CBC over whole blocks (no padding). NULL is the identity.
Bytes CbcEncrypt(std::uint16_t encr_id, ByteView key, ByteView iv, ByteView plaintext);
Bytes CbcDecrypt(std::uint16_t encr_id, ByteView key, ByteView iv, ByteView ciphertext);

// Constant-time comparison.
bool Equal(ByteView a, ByteView b);

}  // namespace vowifi::crypto

#endif  // VOWIFI_CRYPTO_PRIMITIVES_H_
