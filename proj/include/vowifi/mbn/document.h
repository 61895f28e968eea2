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


#ifndef VOWIFI_MBN_DOCUMENT_H_
#define VOWIFI_MBN_DOCUMENT_H_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "vowifi/core/bytes.h"

// Carrier configuration containers ("MCFG", usually shipped as .mbn).
//
// Supported layout, all integers little-endian:
//
//   header   "MCFG" | u16 format_version | u16 config_type
//            | u32 item_count | u32 version
//   item     u32 payload_length | u16 type | u16 attributes | payload
//              type 1 (NV):  u16 nv_id | data
//              type 2 (EFS): u16 path_length | path NUL | content
//   trailer  "MCFG_TRL" | u16 name_length | name | u16 meta_length | meta
//
// The MCFG image may be wrapped in an ELF32/ELF64 file, in which case it is
// the first loadable segment whose bytes begin with "MCFG".
namespace vowifi::mbn {

enum class McfgErrc { kNotMcfg, kTruncated, kBadTrailer, kSpecInvalid, kRuleParseError };

const char* McfgErrcName(McfgErrc code);

class McfgError : public std::runtime_error {
 public:
  McfgError(McfgErrc code, const std::string& detail, std::size_t offset = 0);
  McfgErrc code() const { return code_; }
  // Byte offset for kTruncated, line number for kRuleParseError.
  std::size_t offset() const { return offset_; }

 private:
  McfgErrc code_;
  std::size_t offset_;
};

inline constexpr std::uint16_t kItemTypeNv = 1;
inline constexpr std::uint16_t kItemTypeEfs = 2;
inline constexpr std::size_t kHeaderSize = 16;
inline constexpr std::size_t kItemHeaderSize = 8;

enum class ContainerKind { kRawMcfg, kElfWrapped };

struct NvItem {
  std::uint16_t id = 0;
  Bytes data;
  bool operator==(const NvItem&) const = default;
};

struct EfsFile {
  std::string path;  // without the terminator
  Bytes content;
  bool operator==(const EfsFile&) const = default;
};

struct UnknownItem {
  std::uint16_t type = 0;
  Bytes raw;
  bool operator==(const UnknownItem&) const = default;
};

using ItemKind = std::variant<NvItem, EfsFile, UnknownItem>;

struct McfgItem {
  ItemKind kind;
  std::uint16_t attributes = 0;
  std::uint32_t length = 0;  // payload bytes after the item header
  std::size_t offset = 0;    // of the item header, in the parsed input
  bool operator==(const McfgItem&) const = default;
};

struct Trailer {
  std::string carrier_name;
  Bytes metadata;
  bool operator==(const Trailer&) const = default;
};

struct McfgDocument {
  ContainerKind container_kind = ContainerKind::kRawMcfg;
  bool elf64 = false;
  std::uint16_t format_version = 0;
  std::uint16_t config_type = 0;
  std::uint32_t version = 0;
  std::uint32_t item_count = 0;
  std::vector<McfgItem> items;
  Trailer trailer;
  bool operator==(const McfgDocument&) const = default;
};

// Throws McfgError; never reads outside `data`.
McfgDocument ParseMbn(ByteView data);

// All EFS items as (path, content), container order, duplicates kept.
std::vector<std::pair<std::string, Bytes>> ExtractEmbeddedFiles(const McfgDocument& doc);

// Trailer metadata as "key=value" pairs separated by newlines or ';'.
std::vector<std::pair<std::string, std::string>> MetadataPairs(const Trailer& trailer);

}  // namespace vowifi::mbn

#endif  // VOWIFI_MBN_DOCUMENT_H_
