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

#ifndef VOWIFI_TESTS_SUPPORT_SHA256_ORACLE_H_
#define VOWIFI_TESTS_SUPPORT_SHA256_ORACLE_H_

// Straight-line FIPS 180-4 SHA-256 and RFC 2104 HMAC, written independently
// of the library's OpenSSL-backed primitives so key derivation can be
// checked against a second implementation.

#include <array>
#include <cstdint>
#include <vector>

namespace vowifi::testing {

class Sha256Oracle {
 public:
  static std::vector<std::uint8_t> Digest(const std::vector<std::uint8_t>& msg) {
    static constexpr std::array<std::uint32_t, 64> k = {
        0x428a2f98, 0x71374491, 0xb5c0fbcf, 0xe9b5dba5, 0x3956c25b, 0x59f111f1, 0x923f82a4,
        0xab1c5ed5, 0xd807aa98, 0x12835b01, 0x243185be, 0x550c7dc3, 0x72be5d74, 0x80deb1fe,
        0x9bdc06a7, 0xc19bf174, 0xe49b69c1, 0xefbe4786, 0x0fc19dc6, 0x240ca1cc, 0x2de92c6f,
        0x4a7484aa, 0x5cb0a9dc, 0x76f988da, 0x983e5152, 0xa831c66d, 0xb00327c8, 0xbf597fc7,
        0xc6e00bf3, 0xd5a79147, 0x06ca6351, 0x14292967, 0x27b70a85, 0x2e1b2138, 0x4d2c6dfc,
        0x53380d13, 0x650a7354, 0x766a0abb, 0x81c2c92e, 0x92722c85, 0xa2bfe8a1, 0xa81a664b,
        0xc24b8b70, 0xc76c51a3, 0xd192e819, 0xd6990624, 0xf40e3585, 0x106aa070, 0x19a4c116,
        0x1e376c08, 0x2748774c, 0x34b0bcb5, 0x391c0cb3, 0x4ed8aa4a, 0x5b9cca4f, 0x682e6ff3,
        0x748f82ee, 0x78a5636f, 0x84c87814, 0x8cc70208, 0x90befffa, 0xa4506ceb, 0xbef9a3f7,
        0xc67178f2};
    std::array<std::uint32_t, 8> h = {0x6a09e667, 0xbb67ae85, 0x3c6ef372, 0xa54ff53a,
                                      0x510e527f, 0x9b05688c, 0x1f83d9ab, 0x5be0cd19};
    std::vector<std::uint8_t> m = msg;
    const std::uint64_t bit_len = static_cast<std::uint64_t>(msg.size()) * 8;
    m.push_back(0x80);
    while (m.size() % 64 != 56) m.push_back(0);
    for (int i = 7; i >= 0; --i) m.push_back(static_cast<std::uint8_t>(bit_len >> (i * 8)));

    auto rotr = [](std::uint32_t x, int n) { return (x >> n) | (x << (32 - n)); };
    for (std::size_t off = 0; off < m.size(); off += 64) {
      std::array<std::uint32_t, 64> w{};
      for (int i = 0; i < 16; ++i) {
        w[i] = (std::uint32_t{m[off + 4 * i]} << 24) | (std::uint32_t{m[off + 4 * i + 1]} << 16) |
               (std::uint32_t{m[off + 4 * i + 2]} << 8) | m[off + 4 * i + 3];
      }
      for (int i = 16; i < 64; ++i) {
        std::uint32_t s0 = rotr(w[i - 15], 7) ^ rotr(w[i - 15], 18) ^ (w[i - 15] >> 3);
        std::uint32_t s1 = rotr(w[i - 2], 17) ^ rotr(w[i - 2], 19) ^ (w[i - 2] >> 10);
        w[i] = w[i - 16] + s0 + w[i - 7] + s1;
      }
      auto a = h;
      for (int i = 0; i < 64; ++i) {
        std::uint32_t S1 = rotr(a[4], 6) ^ rotr(a[4], 11) ^ rotr(a[4], 25);
        std::uint32_t ch = (a[4] & a[5]) ^ (~a[4] & a[6]);
        std::uint32_t t1 = a[7] + S1 + ch + k[i] + w[i];
        std::uint32_t S0 = rotr(a[0], 2) ^ rotr(a[0], 13) ^ rotr(a[0], 22);
        std::uint32_t maj = (a[0] & a[1]) ^ (a[0] & a[2]) ^ (a[1] & a[2]);
        std::uint32_t t2 = S0 + maj;
        a = {t1 + t2, a[0], a[1], a[2], a[3] + t1, a[4], a[5], a[6]};
      }
      for (int i = 0; i < 8; ++i) h[i] += a[i];
    }
    std::vector<std::uint8_t> out;
    for (std::uint32_t v : h) {
      for (int i = 3; i >= 0; --i) out.push_back(static_cast<std::uint8_t>(v >> (i * 8)));
    }
    return out;
  }

  static std::vector<std::uint8_t> Hmac(std::vector<std::uint8_t> key,
                                        const std::vector<std::uint8_t>& data) {
    if (key.size() > 64) key = Digest(key);
    key.resize(64, 0);
    std::vector<std::uint8_t> inner(64), outer(64);
    for (int i = 0; i < 64; ++i) {
      inner[i] = key[i] ^ 0x36;
      outer[i] = key[i] ^ 0x5c;
    }
    inner.insert(inner.end(), data.begin(), data.end());
    auto ih = Digest(inner);
    outer.insert(outer.end(), ih.begin(), ih.end());
    return Digest(outer);
  }
};

}  // namespace vowifi::testing

#endif  // VOWIFI_TESTS_SUPPORT_SHA256_ORACLE_H_
