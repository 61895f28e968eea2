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

#ifndef VOWIFI_PROBE_MATRIX_H_
#define VOWIFI_PROBE_MATRIX_H_

#include <string_view>
#include <vector>

#include "vowifi/probe/prober.h"

namespace vowifi::probe {

struct ProbeMatrix {
  std::vector<ProbeCombo> l1;
  std::vector<ProbeCombo> l2;
  // Re-probe an L1 combo with the responder's suggested group after
  // GroupMismatch, as a separate outcome.
  bool group_fallback = true;

  // ENCR {NULL, DES, 3DES, AES-CBC-128, AES-CBC-256} x PRF {HMAC-SHA1,
  // HMAC-SHA2-256} x INTEG HMAC-SHA1-96 x MODP-2048 at L1, and the same
  // ciphers x HMAC-SHA1-96 x no ESN at L2.
  static ProbeMatrix Default();

  const std::vector<ProbeCombo>& layer(Layer l) const { return l == Layer::kL1 ? l1 : l2; }
};

// Encryption transforms of the default matrix, in probing order.
const std::vector<ike::Algorithm>& DefaultCiphers();

// Text form: "l1 = <suite>" and "l2 = <suite>" lines, '#' comments,
// "group_fallback = false" to disable re-probing. Throws
// ProbeError(kInvalidPlan).
ProbeMatrix ParseMatrix(std::string_view text);

}  // namespace vowifi::probe

#endif  // VOWIFI_PROBE_MATRIX_H_
