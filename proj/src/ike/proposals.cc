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

#include "vowifi/ike/proposals.h"

#include <algorithm>
#include <set>

namespace vowifi::ike {

std::vector<TransformType> RequiredTypes(ProtocolId protocol) {
  switch (protocol) {
    case ProtocolId::kIke:
      return {TransformType::kEncr, TransformType::kPrf, TransformType::kInteg,
              TransformType::kDh};
    case ProtocolId::kEsp:
      return {TransformType::kEncr, TransformType::kEsn};
    default:
      throw ProposalError(ProposalErrc::kInvalidSpec, "unsupported protocol");
  }
}

ProposalSpec ProposalSpec::FromSuite(ProtocolId protocol, const Suite& suite, Bytes spi) {
  return ProposalSpec{protocol, std::move(spi), suite.algorithms()};
}

Transform MakeTransform(const Algorithm& alg) {
  Transform t;
  t.type = alg.type;
  t.id = alg.id;
  if (alg.type == TransformType::kEncr && RequiresKeyLength(alg.id)) {
    if (alg.key_bits == 0) {
      throw ProposalError(ProposalErrc::kInvalidSpec,
                          AlgorithmName(alg) + " requires a key length");
    }
    t.attributes.push_back(Attribute{kAttrKeyLength, alg.key_bits});
  } else if (alg.key_bits != 0) {
    throw ProposalError(ProposalErrc::kInvalidSpec,
                        AlgorithmName(alg) + " does not take a key length");
  }
  return t;
}

SaPayload BuildSaPayload(const std::vector<ProposalSpec>& specs) {
  if (specs.empty()) throw ProposalError(ProposalErrc::kEmptySpec, "no proposals");
  if (specs.size() > 255) throw ProposalError(ProposalErrc::kInvalidSpec, "too many proposals");
  SaPayload sa;
  std::uint8_t number = 1;
  for (const ProposalSpec& spec : specs) {
    for (TransformType required : RequiredTypes(spec.protocol)) {
      bool found = std::any_of(spec.algorithms.begin(), spec.algorithms.end(),
                               [&](const Algorithm& a) { return a.type == required; });
      if (!found) {
        throw ProposalError(ProposalErrc::kMissingRequiredTransformType,
                            "proposal lacks " + std::string(TransformTypeName(required)));
      }
    }
    Proposal p;
    p.number = number++;
    p.protocol = spec.protocol;
    p.spi = spec.spi;
    // Transforms grouped by type, offer order kept within a type.
    std::vector<Algorithm> ordered = spec.algorithms;
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const Algorithm& a, const Algorithm& b) { return a.type < b.type; });
    for (const Algorithm& a : ordered) p.transforms.push_back(MakeTransform(a));
    sa.proposals.push_back(std::move(p));
  }
  return sa;
}

TransformPolicy TransformPolicy::FromPreferences(
    ProtocolId protocol, const std::map<TransformType, std::vector<Algorithm>>& prefs) {
  TransformPolicy policy;
  policy.protocol = protocol;
  std::vector<Suite> acc{Suite{}};
  for (const auto& [type, list] : prefs) {
    if (list.empty()) continue;
    std::vector<Suite> next;
    for (const Suite& base : acc) {
      for (const Algorithm& a : list) {
        Suite s = base;
        s.Set(a);
        next.push_back(std::move(s));
      }
    }
    acc = std::move(next);
  }
  // acc is ordered by the lowest type first; re-rank so that ENCR
  // preference dominates, then PRF, INTEG, DH, ESN.
  auto rank = [&](const Suite& s) {
    std::vector<std::size_t> r;
    for (const auto& [type, list] : prefs) {
      auto alg = s.Get(type);
      if (!alg) continue;
      r.push_back(static_cast<std::size_t>(std::find(list.begin(), list.end(), *alg) -
                                           list.begin()));
    }
    return r;
  };
  std::stable_sort(acc.begin(), acc.end(),
                   [&](const Suite& a, const Suite& b) { return rank(a) < rank(b); });
  if (acc.size() == 1 && acc.front().algorithms().empty()) acc.clear();
  policy.allowed = std::move(acc);
  return policy;
}

namespace {

bool Fits(const Suite& suite, const Proposal& p) {
  std::set<TransformType> offered_types;
  for (const Transform& t : p.transforms) offered_types.insert(t.type);
  std::set<TransformType> suite_types;
  for (const Algorithm& a : suite.algorithms()) suite_types.insert(a.type);
  if (offered_types != suite_types) return false;
  for (const Algorithm& a : suite.algorithms()) {
    bool offered = std::any_of(p.transforms.begin(), p.transforms.end(),
                               [&](const Transform& t) { return t.algorithm() == a; });
    if (!offered) return false;
  }
  return true;
}

bool HasRequired(const Proposal& p) {
  std::vector<TransformType> required;
  try {
    required = RequiredTypes(p.protocol);
  } catch (const ProposalError&) {
    return false;
  }
  return std::all_of(required.begin(), required.end(), [&](TransformType type) {
    return std::any_of(p.transforms.begin(), p.transforms.end(),
                       [&](const Transform& t) { return t.type == type; });
  });
}

}  // namespace

std::optional<SelectedProposal> SelectProposal(const SaPayload& offered,
                                               const TransformPolicy& policy) {
  std::vector<const Proposal*> order;
  for (const Proposal& p : offered.proposals) order.push_back(&p);
  std::stable_sort(order.begin(), order.end(),
                   [](const Proposal* a, const Proposal* b) { return a->number < b->number; });
  for (const Proposal* p : order) {
    if (p->protocol != policy.protocol || !HasRequired(*p)) continue;
    for (const Suite& suite : policy.allowed) {
      if (Fits(suite, *p)) return SelectedProposal{p->number, p->protocol, p->spi, suite};
    }
  }
  return std::nullopt;
}

SaPayload SelectedSa(const SelectedProposal& selected, Bytes spi) {
  Proposal p;
  p.number = selected.number;
  p.protocol = selected.protocol;
  p.spi = std::move(spi);
  for (const Algorithm& a : selected.suite.algorithms()) p.transforms.push_back(MakeTransform(a));
  return SaPayload{{std::move(p)}};
}

std::optional<SelectedProposal> ReadSelection(const SaPayload& sa) {
  if (sa.proposals.size() != 1) return std::nullopt;
  const Proposal& p = sa.proposals.front();
  SelectedProposal out;
  out.number = p.number;
  out.protocol = p.protocol;
  out.spi = p.spi;
  for (const Transform& t : p.transforms) {
    if (out.suite.Has(t.type)) return std::nullopt;  // responders pick one per type
    out.suite.Set(t.algorithm());
  }
  return out;
}

}  // namespace vowifi::ike
