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

#include "vowifi/crypto/primitives.h"

#include <openssl/crypto.h>
#include <openssl/evp.h>
#include <openssl/hmac.h>
#include <openssl/provider.h>

#include <memory>
#include <mutex>

#include "vowifi/ike/registry.h"

namespace vowifi::crypto {
namespace {

namespace reg = vowifi::ike;

[[noreturn]] void Unsupported(const char* kind, std::uint16_t id) {
  throw CryptoError(CryptoErrc::kUnsupportedAlgorithm,
                    std::string("unsupported ") + kind + " id " + std::to_string(id));
}

Bytes Hmac(const EVP_MD* md, ByteView key, ByteView data) {
  Bytes out(EVP_MAX_MD_SIZE);
  unsigned int len = 0;
  // HMAC() rejects a null key pointer even for zero length.
  static const std::uint8_t kEmpty = 0;
  const std::uint8_t* k = key.empty() ? &kEmpty : key.data();
  if (HMAC(md, k, static_cast<int>(key.size()), data.data(), data.size(), out.data(), &len) ==
      nullptr) {
    throw CryptoError(CryptoErrc::kBackend, "HMAC failed");
  }
  out.resize(len);
  return out;
}

#ifdef VOWIFI_AUDIT_CIPHERS
// Single DES lives in the OpenSSL legacy provider, so audit ciphers are
// fetched from a private library context with legacy+default loaded.
struct LegacyContext {
  OSSL_LIB_CTX* ctx = nullptr;
  EVP_CIPHER* des = nullptr;
  EVP_CIPHER* des3 = nullptr;

  LegacyContext() {
    ctx = OSSL_LIB_CTX_new();
    if (ctx == nullptr) return;
    OSSL_PROVIDER_load(ctx, "legacy");
    OSSL_PROVIDER_load(ctx, "default");
    des = EVP_CIPHER_fetch(ctx, "DES-CBC", nullptr);
    des3 = EVP_CIPHER_fetch(ctx, "DES-EDE3-CBC", nullptr);
  }
};

const LegacyContext& Legacy() {
  static const LegacyContext* instance = new LegacyContext();
  return *instance;
}
#endif

const EVP_CIPHER* CipherFor(std::uint16_t encr_id, std::size_t key_len) {
  switch (encr_id) {
    case reg::encr::kAesCbc:
      if (key_len == 16) return EVP_aes_128_cbc();
      if (key_len == 24) return EVP_aes_192_cbc();
      if (key_len == 32) return EVP_aes_256_cbc();
      throw CryptoError(CryptoErrc::kInvalidKey, "bad AES key length");
#ifdef VOWIFI_AUDIT_CIPHERS
    case reg::encr::kDes:
      if (Legacy().des == nullptr) {
        throw CryptoError(CryptoErrc::kBackend, "DES-CBC unavailable (legacy provider)");
      }
      return Legacy().des;
    case reg::encr::k3Des:
      if (Legacy().des3 == nullptr) {
        throw CryptoError(CryptoErrc::kBackend, "DES-EDE3-CBC unavailable");
      }
      return Legacy().des3;
#endif
    default:
      Unsupported("ENCR", encr_id);
  }
}

struct CipherCtxDeleter {
  void operator()(EVP_CIPHER_CTX* c) const { EVP_CIPHER_CTX_free(c); }
};

Bytes CbcRun(bool encrypt, std::uint16_t encr_id, ByteView key, ByteView iv, ByteView in) {
  if (encr_id == reg::encr::kNull) return Bytes(in.begin(), in.end());
  const std::size_t block = EncrBlockSize(encr_id);
  if (in.size() % block != 0) {
    throw CryptoError(CryptoErrc::kBadPadding, "CBC input is not a whole number of blocks");
  }
  if (iv.size() != block) throw CryptoError(CryptoErrc::kInvalidKey, "bad IV length");
  const EVP_CIPHER* cipher = CipherFor(encr_id, key.size());
  if (static_cast<std::size_t>(EVP_CIPHER_get_key_length(cipher)) != key.size()) {
    throw CryptoError(CryptoErrc::kInvalidKey, "bad key length");
  }
  std::unique_ptr<EVP_CIPHER_CTX, CipherCtxDeleter> ctx(EVP_CIPHER_CTX_new());
  if (!ctx || EVP_CipherInit_ex(ctx.get(), cipher, nullptr, key.data(), iv.data(),
                                encrypt ? 1 : 0) != 1) {
    throw CryptoError(CryptoErrc::kBackend, "cipher init failed");
  }
  EVP_CIPHER_CTX_set_padding(ctx.get(), 0);
  Bytes out(in.size() + block);
  int len = 0;
  int total = 0;
  if (!in.empty() &&
      EVP_CipherUpdate(ctx.get(), out.data(), &len, in.data(), static_cast<int>(in.size())) != 1) {
    throw CryptoError(CryptoErrc::kBackend, "cipher update failed");
  }
  total = len;
  if (EVP_CipherFinal_ex(ctx.get(), out.data() + total, &len) != 1) {
    throw CryptoError(CryptoErrc::kBackend, "cipher final failed");
  }
  total += len;
  out.resize(static_cast<std::size_t>(total));
  return out;
}

}  // namespace

Bytes Sha1(ByteView data) {
  Bytes out(20);
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha1(), nullptr) != 1) {
    throw CryptoError(CryptoErrc::kBackend, "SHA1 failed");
  }
  return out;
}

Bytes HmacSha1(ByteView key, ByteView data) { return Hmac(EVP_sha1(), key, data); }
Bytes HmacSha256(ByteView key, ByteView data) { return Hmac(EVP_sha256(), key, data); }

std::size_t PrfOutputLength(std::uint16_t prf_id) {
  switch (prf_id) {
    case reg::prf::kHmacSha1: return 20;
    case reg::prf::kHmacSha2_256: return 32;
    default: Unsupported("PRF", prf_id);
  }
}

std::size_t IntegKeyLength(std::uint16_t integ_id) {
  switch (integ_id) {
    case reg::integ::kHmacSha1_96: return 20;
    case reg::integ::kHmacSha2_256_128: return 32;
    default: Unsupported("INTEG", integ_id);
  }
}

std::size_t IntegIcvLength(std::uint16_t integ_id) {
  switch (integ_id) {
    case reg::integ::kHmacSha1_96: return 12;
    case reg::integ::kHmacSha2_256_128: return 16;
    default: Unsupported("INTEG", integ_id);
  }
}

std::size_t EncrKeyLength(std::uint16_t encr_id, std::uint16_t key_bits) {
  switch (encr_id) {
    case reg::encr::kNull: return 0;
    case reg::encr::kAesCbc:
      if (key_bits != 128 && key_bits != 192 && key_bits != 256) {
        throw CryptoError(CryptoErrc::kInvalidKey, "AES-CBC needs 128/192/256-bit key");
      }
      return key_bits / 8;
#ifdef VOWIFI_AUDIT_CIPHERS
    case reg::encr::kDes: return 8;
    case reg::encr::k3Des: return 24;
#endif
    default: Unsupported("ENCR", encr_id);
  }
}

std::size_t EncrBlockSize(std::uint16_t encr_id) {
  switch (encr_id) {
    case reg::encr::kNull: return 1;
    case reg::encr::kAesCbc: return 16;
#ifdef VOWIFI_AUDIT_CIPHERS
    case reg::encr::kDes:
    case reg::encr::k3Des: return 8;
#endif
    default: Unsupported("ENCR", encr_id);
  }
}

std::size_t EncrIvLength(std::uint16_t encr_id) {
  return encr_id == reg::encr::kNull ? 0 : EncrBlockSize(encr_id);
}

bool AuditCiphersEnabled() {
#ifdef VOWIFI_AUDIT_CIPHERS
  return true;
#else
  return false;
#endif
}

Bytes Prf(std::uint16_t prf_id, ByteView key, ByteView data) {
  switch (prf_id) {
    case reg::prf::kHmacSha1: return HmacSha1(key, data);
    case reg::prf::kHmacSha2_256: return HmacSha256(key, data);
    default: Unsupported("PRF", prf_id);
  }
}

Bytes PrfPlus(std::uint16_t prf_id, ByteView key, ByteView seed, std::size_t length) {
  const std::size_t block = PrfOutputLength(prf_id);
  if (length > block * 255) {
    throw CryptoError(CryptoErrc::kInvalidKey, "prf+ output limited to 255 blocks");
  }
  Bytes out;
  out.reserve(length + block);
  Bytes previous;
  for (std::uint8_t counter = 1; out.size() < length; ++counter) {
    Bytes input = previous;
    Append(input, seed);
    input.push_back(counter);
    previous = Prf(prf_id, key, input);
    Append(out, previous);
  }
  out.resize(length);
  return out;
}

Bytes Integ(std::uint16_t integ_id, ByteView key, ByteView data) {
  Bytes mac;
  switch (integ_id) {
    case reg::integ::kHmacSha1_96: mac = HmacSha1(key, data); break;
    case reg::integ::kHmacSha2_256_128: mac = HmacSha256(key, data); break;
    default: Unsupported("INTEG", integ_id);
  }
  mac.resize(IntegIcvLength(integ_id));
  return mac;
}

Bytes CbcEncrypt(std::uint16_t encr_id, ByteView key, ByteView iv, ByteView plaintext) {
  return CbcRun(true, encr_id, key, iv, plaintext);
}

Bytes CbcDecrypt(std::uint16_t encr_id, ByteView key, ByteView iv, ByteView ciphertext) {
  return CbcRun(false, encr_id, key, iv, ciphertext);
}

bool Equal(ByteView a, ByteView b) {
  return a.size() == b.size() && CRYPTO_memcmp(a.data(), b.data(), a.size()) == 0;
}

}  // namespace vowifi::crypto
