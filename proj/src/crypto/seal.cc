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

#include "vowifi/crypto/seal.h"

#include "vowifi/crypto/primitives.h"

namespace vowifi::crypto {

SealContext::SealContext(ike::Algorithm encr, Bytes encr_key, std::uint16_t integ_id,
                         Bytes integ_key, Role sender, RandomSource* iv_source)
    : encr_(encr),
      encr_key_(std::move(encr_key)),
      integ_id_(integ_id),
      integ_key_(std::move(integ_key)),
      sender_(sender),
      iv_source_(iv_source != nullptr ? iv_source : &DefaultRandom()),
      block_(EncrBlockSize(encr.id)),
      iv_len_(EncrIvLength(encr.id)),
      icv_len_(IntegIcvLength(integ_id)) {
  if (encr_key_.size() != EncrKeyLength(encr.id, encr.key_bits)) {
    throw CryptoError(CryptoErrc::kInvalidKey, "encryption key size mismatch");
  }
  if (integ_key_.size() != IntegKeyLength(integ_id)) {
    throw CryptoError(CryptoErrc::kInvalidKey, "integrity key size mismatch");
  }
}

SealContext SealContext::ForSender(const ike::Suite& suite, const KeyMaterial& keys, Role sender,
                                   RandomSource* iv_source) {
  auto encr = suite.Get(ike::TransformType::kEncr);
  auto integ = suite.Get(ike::TransformType::kInteg);
  if (!encr || !integ) {
    throw CryptoError(CryptoErrc::kUnsupportedAlgorithm, "suite lacks ENCR or INTEG");
  }
  const bool init = sender == Role::kInitiator;
  return SealContext(*encr, init ? keys.sk_ei : keys.sk_er, integ->id,
                     init ? keys.sk_ai : keys.sk_ar, sender, iv_source);
}

std::size_t SealContext::SealedPayloadSize(std::size_t inner_len) const {
  std::size_t padded = (inner_len + 1 + block_ - 1) / block_ * block_;
  return 4 + iv_len_ + padded + icv_len_;
}

Bytes SkSeal(ByteView inner, const SealContext& ctx, std::uint8_t next_payload,
             ByteView message_prefix) {
  const std::size_t total = ctx.SealedPayloadSize(inner.size());
  if (total > 0xffff) throw CryptoError(CryptoErrc::kInvalidKey, "SK payload too large");

  Bytes plain(inner.begin(), inner.end());
  const std::size_t padded = total - 4 - ctx.iv_length() - ctx.icv_length();
  const std::size_t pad_len = padded - inner.size() - 1;
  plain.insert(plain.end(), pad_len, 0);
  plain.push_back(static_cast<std::uint8_t>(pad_len));

  Bytes iv = ctx.iv_source().Generate(ctx.iv_length());
  Bytes cipher = CbcEncrypt(ctx.encr().id, ctx.encr_key(), iv, plain);

  Bytes payload;
  payload.reserve(total);
  payload.push_back(next_payload);
  payload.push_back(0);
  payload.push_back(static_cast<std::uint8_t>(total >> 8));
  payload.push_back(static_cast<std::uint8_t>(total));
  Append(payload, iv);
  Append(payload, cipher);

  Bytes signed_part = Concat({message_prefix, payload});
  Bytes icv = Integ(ctx.integ_id(), ctx.integ_key(), signed_part);
  Append(payload, icv);
  return payload;
}

Bytes SkOpen(ByteView sk_payload, const SealContext& ctx, ByteView message_prefix) {
  const std::size_t min = 4 + ctx.iv_length() + ctx.icv_length();
  if (sk_payload.size() < min) {
    throw CryptoError(CryptoErrc::kIntegrityFailure, "SK payload shorter than checksum");
  }
  const std::size_t body_end = sk_payload.size() - ctx.icv_length();
  Bytes signed_part = Concat({message_prefix, sk_payload.first(body_end)});
  Bytes expected = Integ(ctx.integ_id(), ctx.integ_key(), signed_part);
  if (!Equal(expected, sk_payload.subspan(body_end))) {
    throw CryptoError(CryptoErrc::kIntegrityFailure, "SK checksum mismatch");
  }
  auto iv = sk_payload.subspan(4, ctx.iv_length());
  auto cipher = sk_payload.subspan(4 + ctx.iv_length(), body_end - 4 - ctx.iv_length());
  if (cipher.empty() || cipher.size() % ctx.block_size() != 0) {
    throw CryptoError(CryptoErrc::kBadPadding, "ciphertext is not whole blocks");
  }
  Bytes plain = CbcDecrypt(ctx.encr().id, ctx.encr_key(), iv, cipher);
  const std::size_t pad_len = plain.back();
  if (pad_len + 1 > plain.size()) {
    throw CryptoError(CryptoErrc::kBadPadding, "pad length exceeds plaintext");
  }
  plain.resize(plain.size() - pad_len - 1);
  return plain;
}

}  // namespace vowifi::crypto
