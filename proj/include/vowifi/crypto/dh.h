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

#ifndef VOWIFI_CRYPTO_DH_H_
#define VOWIFI_CRYPTO_DH_H_

#include <cstdint>

#include "vowifi/core/bytes.h"
#include "vowifi/crypto/random.h"

namespace vowifi::crypto {

// Finite-field Diffie-Hellman group. Registered groups are MODP-1024 (2)
// and MODP-2048 (14); Custom() exists for small test groups.
class DhGroup {
 public:
  // Throws CryptoError(kUnsupportedGroup).
  static DhGroup ForId(std::uint16_t id);
  static DhGroup Custom(Bytes prime, std::uint32_t generator);

  std::uint16_t id() const { return id_; }
  const Bytes& prime() const { return prime_; }
  std::uint32_t generator() const { return generator_; }
  std::size_t value_length() const { return prime_.size(); }
  // Bits of private exponent drawn by DhGenerate.
  std::size_t private_bits() const { return private_bits_; }

 private:
  DhGroup(std::uint16_t id, Bytes prime, std::uint32_t generator, std::size_t private_bits)
      : id_(id), prime_(std::move(prime)), generator_(generator), private_bits_(private_bits) {}

  std::uint16_t id_;
  Bytes prime_;
  std::uint32_t generator_;
  std::size_t private_bits_;
};

bool IsSupportedGroup(std::uint16_t id);

struct DhKeyPair {
  Bytes private_value;  // big-endian exponent
  Bytes public_value;   // g^x mod p, left-padded to the prime length
};

DhKeyPair DhGenerate(const DhGroup& group, RandomSource& rng = DefaultRandom());

// Throws CryptoError(kInvalidPeerValue) unless 2 <= peer <= p-2 and the
// encoding is exactly the prime length.
Bytes DhShared(ByteView private_value, ByteView peer_public, const DhGroup& group);

}  // namespace vowifi::crypto

#endif  // VOWIFI_CRYPTO_DH_H_
