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


#include <algorithm>
#include <cstring>
#include <optional>

#include "vowifi/mbn/document.h"

namespace vowifi::mbn {
namespace {

constexpr char kMagic[] = "MCFG";
constexpr char kTrailerMagic[] = "MCFG_TRL";

bool StartsWith(ByteView data, std::string_view magic) {
  return data.size() >= magic.size() && std::memcmp(data.data(), magic.data(), magic.size()) == 0;
}

[[noreturn]] void Truncated(std::size_t offset, const std::string& what) {
  throw McfgError(McfgErrc::kTruncated, what + " at offset " + std::to_string(offset), offset);
}

bool IsPrintablePath(ByteView path) {
  return std::all_of(path.begin(), path.end(), [](std::uint8_t c) { return c >= 0x20 && c < 0x7f; });
}

// NV and EFS payloads that do not fit the documented shape are kept raw.
ItemKind DecodePayload(std::uint16_t type, ByteView payload) {
  if (type == kItemTypeNv && payload.size() >= 2) {
    ByteReader r(payload);
    NvItem nv;
    nv.id = r.U16Le();
    nv.data = r.TakeBytes(r.remaining());
    return nv;
  }
  if (type == kItemTypeEfs && payload.size() >= 2) {
    ByteReader r(payload);
    const std::uint16_t path_len = r.U16Le();
    if (path_len >= 1 && path_len <= r.remaining()) {
      const ByteView path = r.Take(path_len);
      const ByteView name = path.first(path_len - 1);
      if (path.back() == 0 && IsPrintablePath(name)) {
        return EfsFile{std::string(name.begin(), name.end()), r.TakeBytes(r.remaining())};
      }
    }
  }
  return UnknownItem{type, Bytes(payload.begin(), payload.end())};
}

void ParseMcfg(ByteView image, std::size_t base, McfgDocument& doc) {
  ByteReader r(image, base);
  try {
    r.Skip(4);
    doc.format_version = r.U16Le();
    doc.config_type = r.U16Le();
    doc.item_count = r.U32Le();
    doc.version = r.U32Le();
  } catch (const ShortRead&) {
    Truncated(base, "MCFG header");
  }

  for (std::uint32_t i = 0; i < doc.item_count; ++i) {
    const std::size_t item_offset = r.offset();
    if (r.remaining() < kItemHeaderSize) Truncated(item_offset, "item " + std::to_string(i));
    McfgItem item;
    item.offset = item_offset;
    item.length = r.U32Le();
    const std::uint16_t type = r.U16Le();
    item.attributes = r.U16Le();
    if (item.length > r.remaining()) Truncated(item_offset, "item " + std::to_string(i));
    item.kind = DecodePayload(type, r.Take(item.length));
    doc.items.push_back(std::move(item));
  }

  const std::size_t trailer_offset = r.offset();
  const ByteView rest = r.Take(r.remaining());
  const std::size_t probe = std::min<std::size_t>(rest.size(), 8);
  if (std::memcmp(rest.data(), kTrailerMagic, probe) != 0) {
    throw McfgError(McfgErrc::kBadTrailer,
                    "no MCFG_TRL at offset " + std::to_string(trailer_offset), trailer_offset);
  }
  if (rest.size() < 8) Truncated(trailer_offset, "trailer");
  ByteReader t(rest.subspan(8), trailer_offset + 8);
  try {
    const std::uint16_t name_len = t.U16Le();
    const ByteView name = t.Take(name_len);
    doc.trailer.carrier_name.assign(name.begin(), name.end());
    const std::uint16_t meta_len = t.U16Le();
    doc.trailer.metadata = t.TakeBytes(meta_len);
  } catch (const ShortRead& e) {
    Truncated(e.offset(), "trailer");
  }
  if (!t.empty()) {
    throw McfgError(McfgErrc::kBadTrailer,
                    std::to_string(t.remaining()) + " stray bytes after trailer", t.offset());
  }
}

struct Segment {
  std::uint64_t offset;
  std::uint64_t size;
};

McfgDocument ParseElf(ByteView data) {
  if (data.size() < 16) Truncated(0, "ELF identification");
  const std::uint8_t elf_class = data[4];
  if (elf_class != 1 && elf_class != 2) {
    throw McfgError(McfgErrc::kNotMcfg, "unsupported ELF class " + std::to_string(elf_class));
  }
  if (data[5] != 1) throw McfgError(McfgErrc::kNotMcfg, "ELF file is not little-endian");
  const bool is64 = elf_class == 2;

  ByteReader r(data);
  std::uint64_t phoff = 0;
  std::uint16_t phentsize = 0, phnum = 0;
  try {
    r.Skip(16 + 2 + 2 + 4);
    if (is64) {
      r.Skip(8);
      phoff = r.U64Le();
      r.Skip(8 + 4 + 2);
    } else {
      r.Skip(4);
      phoff = r.U32Le();
      r.Skip(4 + 4 + 2);
    }
    phentsize = r.U16Le();
    phnum = r.U16Le();
  } catch (const ShortRead& e) {
    Truncated(e.offset(), "ELF header");
  }
  const std::size_t min_entry = is64 ? 56 : 32;
  if (phnum > 0 && phentsize < min_entry) {
    throw McfgError(McfgErrc::kNotMcfg, "ELF program header entries too small");
  }
  if (phoff > data.size() || std::uint64_t{phnum} * phentsize > data.size() - phoff) {
    Truncated(std::min<std::uint64_t>(phoff, data.size()), "ELF program headers");
  }

  std::vector<Segment> segments;
  for (std::uint16_t i = 0; i < phnum; ++i) {
    ByteReader ph(data.subspan(phoff + std::uint64_t{i} * phentsize, phentsize),
                  phoff + std::uint64_t{i} * phentsize);
    Segment s{};
    if (is64) {
      ph.Skip(8);
      s.offset = ph.U64Le();
      ph.Skip(16);
      s.size = ph.U64Le();
    } else {
      ph.Skip(4);
      s.offset = ph.U32Le();
      ph.Skip(8);
      s.size = ph.U32Le();
    }
    segments.push_back(s);
  }

  for (const Segment& s : segments) {
    if (s.offset >= data.size()) continue;
    const ByteView image = data.subspan(s.offset, std::min<std::uint64_t>(s.size, data.size() - s.offset));
    if (!StartsWith(image, kMagic)) continue;
    McfgDocument doc;
    doc.container_kind = ContainerKind::kElfWrapped;
    doc.elf64 = is64;
    ParseMcfg(image, s.offset, doc);
    return doc;
  }
  throw McfgError(McfgErrc::kNotMcfg, "no ELF segment holds an MCFG image");
}

}  // namespace

McfgDocument ParseMbn(ByteView data) {
  if (StartsWith(data, "\x7f" "ELF")) return ParseElf(data);
  if (StartsWith(data, kMagic)) {
    McfgDocument doc;
    ParseMcfg(data, 0, doc);
    return doc;
  }
  throw McfgError(McfgErrc::kNotMcfg, "neither ELF nor MCFG magic");
}

}  // namespace vowifi::mbn
