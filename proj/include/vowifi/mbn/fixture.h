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


#ifndef VOWIFI_MBN_FIXTURE_H_
#define VOWIFI_MBN_FIXTURE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vowifi/mbn/document.h"

namespace vowifi::mbn {

struct FixtureItem {
  ItemKind kind;
  std::uint16_t attributes = 0;
  bool operator==(const FixtureItem&) const = default;
};

// Structural description of a container; what ParseMbn recovers modulo
// offsets and lengths.
struct McfgLayout {
  ContainerKind container_kind = ContainerKind::kRawMcfg;
  bool elf64 = false;
  std::uint16_t format_version = 3;
  std::uint16_t config_type = 1;
  std::uint32_t version = 0;
  std::vector<FixtureItem> items;
  Trailer trailer;
  bool operator==(const McfgLayout&) const = default;
};

struct FixtureSpec {
  McfgLayout layout;
  std::optional<std::size_t> truncate_at;  // keep only this many bytes
  bool bad_magic = false;
};

// Throws McfgError(kSpecInvalid).
Bytes BuildMbnFixture(const FixtureSpec& spec);
Bytes BuildMbnFixture(const McfgLayout& layout);

McfgLayout Project(const McfgDocument& doc);

// Offsets of each item header in the output of BuildMbnFixture(layout).
std::vector<std::size_t> ItemOffsets(const McfgLayout& layout);

}  // namespace vowifi::mbn

#endif  // VOWIFI_MBN_FIXTURE_H_
