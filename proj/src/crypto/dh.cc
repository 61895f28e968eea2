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

#include "vowifi/crypto/dh.h"

#include <openssl/bn.h>

#include <memory>

#include "vowifi/crypto/primitives.h"
#include "vowifi/ike/registry.h"

namespace vowifi::crypto {
namespace {

struct BnDeleter {
  void operator()(BIGNUM* b) const { BN_clear_free(b); }
};
struct BnCtxDeleter {
  void operator()(BN_CTX* c) const { BN_CTX_free(c); }
};
using Bn = std::unique_ptr<BIGNUM, BnDeleter>;

Bn FromBytes(ByteView b) {
  Bn out(BN_bin2bn(b.data(), static_cast<int>(b.size()), nullptr));
  if (!out) throw CryptoError(CryptoErrc::kBackend, "BN_bin2bn failed");
  return out;
}

Bytes ToPadded(const BIGNUM* v, std::size_t width) {
  Bytes out(width);
  if (BN_bn2binpad(v, out.data(), static_cast<int>(width)) < 0) {
    throw CryptoError(CryptoErrc::kBackend, "BN_bn2binpad failed");
  }
  return out;
}

Bytes PrimeBytes(BIGNUM* (*getter)(BIGNUM*)) {
  Bn p(getter(nullptr));
  Bytes out(static_cast<std::size_t>(BN_num_bytes(p.get())));
  BN_bn2bin(p.get(), out.data());
  return out;
}

Bytes ModExp(const BIGNUM* base, ByteView exponent, const DhGroup& group) {
  std::unique_ptr<BN_CTX, BnCtxDeleter> ctx(BN_CTX_new());
  Bn p = FromBytes(group.prime());
  Bn e = FromBytes(exponent);
  Bn r(BN_new());
  if (!ctx || !r || BN_mod_exp(r.get(), base, e.get(), p.get(), ctx.get()) != 1) {
    throw CryptoError(CryptoErrc::kBackend, "BN_mod_exp failed");
  }
  return ToPadded(r.get(), group.value_length());
}

}  // namespace

bool IsSupportedGroup(std::uint16_t id) {
  return id == ike::dh::kModp1024 || id == ike::dh::kModp2048;
}

DhGroup DhGroup::ForId(std::uint16_t id) {
  // Private exponents follow the usual twice-the-security-strength sizing.
  switch (id) {
    case ike::dh::kModp1024:
      return DhGroup(id, PrimeBytes(BN_get_rfc2409_prime_1024), 2, 160);
    case ike::dh::kModp2048:
      return DhGroup(id, PrimeBytes(BN_get_rfc3526_prime_2048), 2, 256);
    default:
      throw CryptoError(CryptoErrc::kUnsupportedGroup,
                        "unsupported DH group " + std::to_string(id));
  }
}

DhGroup DhGroup::Custom(Bytes prime, std::uint32_t generator) {
  std::size_t bits = prime.size() * 8;
  return DhGroup(0, std::move(prime), generator, bits);
}

DhKeyPair DhGenerate(const DhGroup& group, RandomSource& rng) {
  Bn p = FromBytes(group.prime());
  Bn upper(BN_dup(p.get()));
  BN_sub_word(upper.get(), 3);  // exponent range [2, p-2]
  Bn x(BN_new());
  std::size_t nbytes = (group.private_bits() + 7) / 8;
  do {
    Bytes raw = rng.Generate(nbytes);
    BN_bin2bn(raw.data(), static_cast<int>(raw.size()), x.get());
    if (BN_cmp(x.get(), upper.get()) > 0) {
      std::unique_ptr<BN_CTX, BnCtxDeleter> ctx(BN_CTX_new());
      BN_mod(x.get(), x.get(), upper.get(), ctx.get());
    }
    BN_add_word(x.get(), 2);
  } while (BN_cmp(x.get(), p.get()) >= 0);

  Bn g(BN_new());
  BN_set_word(g.get(), group.generator());
  DhKeyPair pair;
  pair.private_value = ToPadded(x.get(), static_cast<std::size_t>(BN_num_bytes(x.get())));
  pair.public_value = ModExp(g.get(), pair.private_value, group);
  return pair;
}

Bytes DhShared(ByteView private_value, ByteView peer_public, const DhGroup& group) {
  if (peer_public.size() != group.value_length()) {
    throw CryptoError(CryptoErrc::kInvalidPeerValue, "peer public value has wrong length");
  }
  Bn p = FromBytes(group.prime());
  Bn y = FromBytes(peer_public);
  Bn p_minus_1(BN_dup(p.get()));
  BN_sub_word(p_minus_1.get(), 1);
  if (BN_cmp(y.get(), BN_value_one()) <= 0 || BN_cmp(y.get(), p_minus_1.get()) >= 0) {
    throw CryptoError(CryptoErrc::kInvalidPeerValue, "peer public value out of range");
  }
  return ModExp(y.get(), private_value, group);
}

}  // namespace vowifi::crypto
