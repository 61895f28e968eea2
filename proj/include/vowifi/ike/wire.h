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

#ifndef VOWIFI_IKE_WIRE_H_
#define VOWIFI_IKE_WIRE_H_

#include <stdexcept>
#include <string>

#include "vowifi/core/bytes.h"
#include "vowifi/crypto/seal.h"
#include "vowifi/ike/payloads.h"

namespace vowifi::ike {

enum class WireErrc {
  kTruncated,
  kBadVersion,
  kIntegrityFailure,
  kUnknownCriticalPayload,
  kMalformed,
  kInvariantViolation,
  kMissingSealContext,
};

std::string_view WireErrcName(WireErrc code);

class WireError : public std::runtime_error {
 public:
  WireError(WireErrc code, const std::string& what)
      : std::runtime_error(std::string(WireErrcName(code)) + ": " + what), code_(code) {}
  WireErrc code() const { return code_; }

 private:
  WireErrc code_;
};

// Serializes `msg`. An SK payload must be last and requires `seal`; its
// inner chain is encrypted and integrity-protected with that context.
// Throws WireError(kInvariantViolation | kMissingSealContext).
Bytes EncodeMessage(const IkeMessage& msg, const crypto::SealContext* seal = nullptr);

// Parses a datagram (non-ESP marker already stripped). With `open`, SK
// contents are verified and decrypted before the inner chain is parsed.
// Throws WireError on any structural problem.
IkeMessage DecodeMessage(ByteView data, const crypto::SealContext* open = nullptr);

// Header-only parse used for dispatch before keys are known.
IkeHeader DecodeHeader(ByteView data);

}  // namespace vowifi::ike

#endif  // VOWIFI_IKE_WIRE_H_
