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

#include "vowifi/crypto/random.h"

#include <openssl/rand.h>

#include "vowifi/crypto/primitives.h"

namespace vowifi::crypto {

void SystemRandom::Fill(std::span<std::uint8_t> out) {
  if (out.empty()) return;
  if (RAND_bytes(out.data(), static_cast<int>(out.size())) != 1) {
    throw CryptoError(CryptoErrc::kBackend, "RAND_bytes failed");
  }
}

SystemRandom& DefaultRandom() {
  static SystemRandom instance;
  return instance;
}

}  // namespace vowifi::crypto
