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

#include "vowifi/crypto/keys.h"

#include "vowifi/crypto/primitives.h"

namespace vowifi::crypto {

KeyLengths KeyLengths::ForSuite(const ike::Suite& suite) {
  auto encr = suite.Get(ike::TransformType::kEncr);
  auto integ = suite.Get(ike::TransformType::kInteg);
  if (!encr || !integ) {
    throw CryptoError(CryptoErrc::kUnsupportedAlgorithm, "suite lacks ENCR or INTEG");
  }
  return KeyLengths{IntegKeyLength(integ->id), EncrKeyLength(encr->id, encr->key_bits)};
}

KeyMaterial DeriveIkeKeys(ByteView nonce_i, ByteView nonce_r, ByteView shared_secret,
                          ByteView spi_i, ByteView spi_r, std::uint16_t prf_id,
                          const KeyLengths& lengths) {
  if (nonce_i.size() < 16 || nonce_i.size() > 256 || nonce_r.size() < 16 ||
      nonce_r.size() > 256) {
    throw CryptoError(CryptoErrc::kInvalidKey, "nonce length outside [16, 256]");
  }
  if (spi_i.size() != 8 || spi_r.size() != 8) {
    throw CryptoError(CryptoErrc::kInvalidKey, "IKE SPIs must be 8 octets");
  }
  const std::size_t prf_len = PrfOutputLength(prf_id);
  Bytes nonces = Concat({nonce_i, nonce_r});
  Bytes skeyseed = Prf(prf_id, nonces, shared_secret);
  Bytes seed = Concat({nonce_i, nonce_r, spi_i, spi_r});

  const std::size_t total = 3 * prf_len + 2 * lengths.integ + 2 * lengths.encr;
  Bytes stream = PrfPlus(prf_id, skeyseed, seed, total);

  std::size_t pos = 0;
  auto take = [&](std::size_t n) {
    Bytes out(stream.begin() + static_cast<std::ptrdiff_t>(pos),
              stream.begin() + static_cast<std::ptrdiff_t>(pos + n));
    pos += n;
    return out;
  };
  KeyMaterial keys;
  keys.sk_d = take(prf_len);
  keys.sk_ai = take(lengths.integ);
  keys.sk_ar = take(lengths.integ);
  keys.sk_ei = take(lengths.encr);
  keys.sk_er = take(lengths.encr);
  keys.sk_pi = take(prf_len);
  keys.sk_pr = take(prf_len);
  return keys;
}

}  // namespace vowifi::crypto
