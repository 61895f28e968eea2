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

#ifndef VOWIFI_CRYPTO_KEYS_H_
#define VOWIFI_CRYPTO_KEYS_H_

#include <cstdint>

#include "vowifi/core/bytes.h"
#include "vowifi/ike/registry.h"

namespace vowifi::crypto {

// Per-key lengths in octets. SK_d, SK_pi and SK_pr take the PRF output size.
struct KeyLengths {
  std::size_t integ = 0;
  std::size_t encr = 0;

  // Sizes implied by a negotiated IKE suite (needs ENCR and INTEG).
  static KeyLengths ForSuite(const ike::Suite& suite);
};

struct KeyMaterial {
  Bytes sk_d;
  Bytes sk_ai;
  Bytes sk_ar;
  Bytes sk_ei;
  Bytes sk_er;
  Bytes sk_pi;
  Bytes sk_pr;

  std::size_t total_size() const {
    return sk_d.size() + sk_ai.size() + sk_ar.size() + sk_ei.size() + sk_er.size() +
           sk_pi.size() + sk_pr.size();
  }
  bool operator==(const KeyMaterial&) const = default;
};

// SKEYSEED = prf(Ni | Nr, g^ir)
// {SK_d | SK_ai | SK_ar | SK_ei | SK_er | SK_pi | SK_pr}
//     = prf+(SKEYSEED, Ni | Nr | SPIi | SPIr)
KeyMaterial DeriveIkeKeys(ByteView nonce_i, ByteView nonce_r, ByteView shared_secret,
                          ByteView spi_i, ByteView spi_r, std::uint16_t prf_id,
                          const KeyLengths& lengths);

}  // namespace vowifi::crypto

#endif  // VOWIFI_CRYPTO_KEYS_H_
