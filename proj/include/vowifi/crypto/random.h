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

#ifndef VOWIFI_CRYPTO_RANDOM_H_
#define VOWIFI_CRYPTO_RANDOM_H_

#include <cstdint>
#include <span>

#include "vowifi/core/bytes.h"

namespace vowifi::crypto {

// Source of nonces, SPIs, IVs and DH private values. Production code uses
// SystemRandom; tests inject a seeded implementation.
class RandomSource {
 public:
  virtual ~RandomSource() = default;
  virtual void Fill(std::span<std::uint8_t> out) = 0;

  Bytes Generate(std::size_t n) {
    Bytes out(n);
    Fill(out);
    return out;
  }
};

// Platform CSPRNG. Thread-safe.
class SystemRandom final : public RandomSource {
 public:
  void Fill(std::span<std::uint8_t> out) override;
};

SystemRandom& DefaultRandom();

}  // namespace vowifi::crypto

#endif  // VOWIFI_CRYPTO_RANDOM_H_
