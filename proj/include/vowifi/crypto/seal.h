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

#ifndef VOWIFI_CRYPTO_SEAL_H_
#define VOWIFI_CRYPTO_SEAL_H_

#include <cstdint>

#include "vowifi/core/bytes.h"
#include "vowifi/crypto/keys.h"
#include "vowifi/crypto/random.h"
#include "vowifi/ike/registry.h"

namespace vowifi::crypto {

enum class Role { kInitiator, kResponder };

// Keys and algorithms protecting SK payloads sent by one side of an IKE SA.
// Messages from the initiator use SK_ei/SK_ai, from the responder SK_er/SK_ar.
// NULL encryption has a zero-length key, zero-length IV and block size 1.
class SealContext {
 public:
  // Throws CryptoError(kInvalidKey) when key sizes do not match.
  SealContext(ike::Algorithm encr, Bytes encr_key, std::uint16_t integ_id, Bytes integ_key,
              Role sender, RandomSource* iv_source = nullptr);

  static SealContext ForSender(const ike::Suite& suite, const KeyMaterial& keys, Role sender,
                               RandomSource* iv_source = nullptr);

  const ike::Algorithm& encr() const { return encr_; }
  std::uint16_t integ_id() const { return integ_id_; }
  const Bytes& encr_key() const { return encr_key_; }
  const Bytes& integ_key() const { return integ_key_; }
  Role sender() const { return sender_; }

  std::size_t block_size() const { return block_; }
  std::size_t iv_length() const { return iv_len_; }
  std::size_t icv_length() const { return icv_len_; }
  // Size of the complete SK payload (generic header included) for an
  // inner chain of `inner_len` octets.
  std::size_t SealedPayloadSize(std::size_t inner_len) const;

  RandomSource& iv_source() const { return *iv_source_; }

 private:
  ike::Algorithm encr_;
  Bytes encr_key_;
  std::uint16_t integ_id_;
  Bytes integ_key_;
  Role sender_;
  RandomSource* iv_source_;
  std::size_t block_;
  std::size_t iv_len_;
  std::size_t icv_len_;
};

// Builds the complete SK payload: generic header, IV, CBC ciphertext of
// inner | padding | pad-length, and the integrity checksum over
// message_prefix | SK payload up to the checksum. `message_prefix` is the
// IKE header and any preceding payloads, already carrying final lengths.
Bytes SkSeal(ByteView inner, const SealContext& ctx, std::uint8_t next_payload,
             ByteView message_prefix);

// Verifies the checksum first, then decrypts and strips padding. Returns
// the inner payload chain. Throws kIntegrityFailure or kBadPadding.
Bytes SkOpen(ByteView sk_payload, const SealContext& ctx, ByteView message_prefix);

}  // namespace vowifi::crypto

#endif  // VOWIFI_CRYPTO_SEAL_H_
