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

#ifndef VOWIFI_IKE_PROPOSALS_H_
#define VOWIFI_IKE_PROPOSALS_H_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vowifi/ike/payloads.h"

namespace vowifi::ike {

enum class ProposalErrc { kEmptySpec, kMissingRequiredTransformType, kInvalidSpec };

class ProposalError : public std::invalid_argument {
 public:
  ProposalError(ProposalErrc code, const std::string& what)
      : std::invalid_argument(what), code_(code) {}
  ProposalErrc code() const { return code_; }

 private:
  ProposalErrc code_;
};

// Transform types every proposal of a protocol must carry. IKE needs
// ENCR, PRF, INTEG and DH; ESP needs ENCR and ESN (INTEG optional).
std::vector<TransformType> RequiredTypes(ProtocolId protocol);

struct ProposalSpec {
  ProtocolId protocol = ProtocolId::kIke;
  Bytes spi;
  // One or more algorithms per transform type, in offer order.
  std::vector<Algorithm> algorithms;

  static ProposalSpec FromSuite(ProtocolId protocol, const Suite& suite, Bytes spi = {});
};

// Numbers proposals 1..n in input order and attaches key-length attributes
// where the cipher needs one.
SaPayload BuildSaPayload(const std::vector<ProposalSpec>& specs);

Transform MakeTransform(const Algorithm& alg);

// Responder policy: acceptable suites, most preferred first.
struct TransformPolicy {
  ProtocolId protocol = ProtocolId::kIke;
  std::vector<Suite> allowed;

  // Cross product of per-type preference lists, ordered so that earlier
  // entries in each list win (ENCR most significant).
  static TransformPolicy FromPreferences(
      ProtocolId protocol, const std::map<TransformType, std::vector<Algorithm>>& prefs);
};

struct SelectedProposal {
  std::uint8_t number = 0;
  ProtocolId protocol = ProtocolId::kIke;
  Bytes spi;
  Suite suite;

  bool operator==(const SelectedProposal&) const = default;
};

// Picks the lowest-numbered offered proposal that some allowed suite fits
// (same transform types, every component offered), using the most
// preferred such suite. Never returns an algorithm the peer did not offer.
std::optional<SelectedProposal> SelectProposal(const SaPayload& offered,
                                               const TransformPolicy& policy);

// The single-proposal SA a responder sends back; `spi` replaces the
// offered SPI (responder's own SPI for ESP).
SaPayload SelectedSa(const SelectedProposal& selected, Bytes spi);

// Reads a responder's single-proposal SA back into a suite.
std::optional<SelectedProposal> ReadSelection(const SaPayload& sa);

}  // namespace vowifi::ike

#endif  // VOWIFI_IKE_PROPOSALS_H_
