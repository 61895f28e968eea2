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

#include "vowifi/probe/matrix.h"

#include <sstream>
#include <string>

#include "vowifi/ike/proposals.h"
#include "vowifi/probe/errors.h"

namespace vowifi::probe {
namespace {

using ike::Algorithm;
using ike::TransformType;

std::string Trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

const std::vector<Algorithm>& DefaultCiphers() {
  static const std::vector<Algorithm> kCiphers = {
      {TransformType::kEncr, ike::encr::kNull, 0},
      {TransformType::kEncr, ike::encr::kDes, 0},
      {TransformType::kEncr, ike::encr::k3Des, 0},
      {TransformType::kEncr, ike::encr::kAesCbc, 128},
      {TransformType::kEncr, ike::encr::kAesCbc, 256},
  };
  return kCiphers;
}

ProbeMatrix ProbeMatrix::Default() {
  ProbeMatrix m;
  const Algorithm integ{TransformType::kInteg, ike::integ::kHmacSha1_96, 0};
  for (const Algorithm& encr : DefaultCiphers()) {
    for (std::uint16_t prf : {ike::prf::kHmacSha1, ike::prf::kHmacSha2_256}) {
      m.l1.push_back(ProbeCombo::L1(ike::Suite({encr, {TransformType::kPrf, prf, 0}, integ,
                                                {TransformType::kDh, ike::dh::kModp2048, 0}})));
    }
  }
  for (const Algorithm& encr : DefaultCiphers()) {
    m.l2.push_back(
        ProbeCombo::L2(ike::Suite({encr, integ, {TransformType::kEsn, ike::esn::kNoEsn, 0}})));
  }
  return m;
}

ProbeMatrix ParseMatrix(std::string_view text) {
  ProbeMatrix m;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = Trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ProbeError(ProbeErrc::kInvalidPlan, "matrix line " + std::to_string(number) + ": expected key = value");
    }
    const std::string key = Trim(line.substr(0, eq));
    const std::string value = Trim(line.substr(eq + 1));
    try {
      if (key == "l1" || key == "l2") {
        const Layer layer = key == "l1" ? Layer::kL1 : Layer::kL2;
        const ike::Suite suite = ike::Suite::Parse(value);
        const auto protocol = layer == Layer::kL1 ? ike::ProtocolId::kIke : ike::ProtocolId::kEsp;
        for (TransformType t : ike::RequiredTypes(protocol)) {
          if (!suite.Get(t)) {
            throw std::invalid_argument("missing " + std::string(ike::TransformTypeName(t)));
          }
        }
        (layer == Layer::kL1 ? m.l1 : m.l2).push_back({layer, suite});
      } else if (key == "group_fallback") {
        m.group_fallback = value == "true";
      } else {
        throw std::invalid_argument("unknown key '" + key + "'");
      }
    } catch (const std::invalid_argument& e) {
      throw ProbeError(ProbeErrc::kInvalidPlan,
                       "matrix line " + std::to_string(number) + ": " + e.what());
    }
  }
  return m;
}

}  // namespace vowifi::probe
