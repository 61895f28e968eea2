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


#include "vowifi/mbn/fixture.h"

#include <limits>
#include <variant>

namespace vowifi::mbn {
namespace {

constexpr std::size_t kMaxField = std::numeric_limits<std::uint16_t>::max();
constexpr std::size_t kHashSegmentSize = 40;

[[noreturn]] void Invalid(const std::string& what) { throw McfgError(McfgErrc::kSpecInvalid, what); }

std::uint16_t TypeOf(const ItemKind& kind) {
  if (std::holds_alternative<NvItem>(kind)) return kItemTypeNv;
  if (std::holds_alternative<EfsFile>(kind)) return kItemTypeEfs;
  return std::get<UnknownItem>(kind).type;
}

Bytes Payload(const ItemKind& kind) {
  ByteWriter w;
  if (const auto* nv = std::get_if<NvItem>(&kind)) {
    w.U16Le(nv->id);
    w.Raw(nv->data);
  } else if (const auto* efs = std::get_if<EfsFile>(&kind)) {
    w.U16Le(static_cast<std::uint16_t>(efs->path.size() + 1));
    w.Raw(ToBytes(efs->path));
    w.U8(0);
    w.Raw(efs->content);
  } else {
    w.Raw(std::get<UnknownItem>(kind).raw);
  }
  return w.Take();
}

void Validate(const McfgLayout& layout) {
  if (layout.container_kind == ContainerKind::kRawMcfg && layout.elf64) {
    Invalid("elf64 set on a raw container");
  }
  for (std::size_t i = 0; i < layout.items.size(); ++i) {
    const auto& kind = layout.items[i].kind;
    const std::string where = "item " + std::to_string(i) + ": ";
    if (const auto* efs = std::get_if<EfsFile>(&kind)) {
      if (efs->path.empty() || efs->path.size() >= kMaxField) Invalid(where + "bad EFS path length");
      for (char c : efs->path) {
        if (c < 0x20 || c >= 0x7f) Invalid(where + "EFS path must be printable ASCII");
      }
    } else if (const auto* u = std::get_if<UnknownItem>(&kind)) {
      if (u->type == kItemTypeNv || u->type == kItemTypeEfs) {
        Invalid(where + "unknown item uses a known type code");
      }
    }
  }
  if (layout.trailer.carrier_name.size() > kMaxField) Invalid("carrier name too long");
  if (layout.trailer.metadata.size() > kMaxField) Invalid("metadata too long");
}

Bytes BuildImage(const McfgLayout& layout) {
  ByteWriter w;
  w.Raw(ToBytes("MCFG"));
  w.U16Le(layout.format_version);
  w.U16Le(layout.config_type);
  w.U32Le(static_cast<std::uint32_t>(layout.items.size()));
  w.U32Le(layout.version);
  for (const auto& item : layout.items) {
    const Bytes payload = Payload(item.kind);
    w.U32Le(static_cast<std::uint32_t>(payload.size()));
    w.U16Le(TypeOf(item.kind));
    w.U16Le(item.attributes);
    w.Raw(payload);
  }
  w.Raw(ToBytes("MCFG_TRL"));
  w.U16Le(static_cast<std::uint16_t>(layout.trailer.carrier_name.size()));
  w.Raw(ToBytes(layout.trailer.carrier_name));
  w.U16Le(static_cast<std::uint16_t>(layout.trailer.metadata.size()));
  w.Raw(layout.trailer.metadata);
  return w.Take();
}

std::size_t Align(std::size_t v, std::size_t a) { return (v + a - 1) / a * a; }

// Where the MCFG image starts inside the wrapper.
std::size_t ImageOffset(const McfgLayout& layout) {
  if (layout.container_kind == ContainerKind::kRawMcfg) return 0;
  const std::size_t ehdr = layout.elf64 ? 64 : 52;
  const std::size_t phent = layout.elf64 ? 56 : 32;
  return Align(ehdr + 2 * phent + kHashSegmentSize, 16);
}

void ProgramHeader(ByteWriter& w, bool elf64, std::uint32_t type, std::uint32_t flags,
                   std::uint64_t offset, std::uint64_t size) {
  if (elf64) {
    w.U32Le(type);
    w.U32Le(flags);
    w.U64Le(offset);
    w.U64Le(0);
    w.U64Le(0);
    w.U64Le(size);
    w.U64Le(size);
    w.U64Le(16);
  } else {
    w.U32Le(type);
    w.U32Le(static_cast<std::uint32_t>(offset));
    w.U32Le(0);
    w.U32Le(0);
    w.U32Le(static_cast<std::uint32_t>(size));
    w.U32Le(static_cast<std::uint32_t>(size));
    w.U32Le(flags);
    w.U32Le(16);
  }
}

// ELF with a hash-style segment followed by the MCFG segment.
Bytes Wrap(const McfgLayout& layout, const Bytes& image) {
  const bool is64 = layout.elf64;
  const std::size_t ehdr = is64 ? 64 : 52;
  const std::size_t phent = is64 ? 56 : 32;
  const std::size_t hash_offset = ehdr + 2 * phent;
  const std::size_t image_offset = ImageOffset(layout);

  ByteWriter w;
  w.Raw(Bytes{0x7f, 'E', 'L', 'F', static_cast<std::uint8_t>(is64 ? 2 : 1), 1, 1, 0});
  w.Zeros(8);
  w.U16Le(2);      // ET_EXEC
  w.U16Le(0xa4);   // EM_QDSP6
  w.U32Le(1);
  if (is64) {
    w.U64Le(0);
    w.U64Le(ehdr);
    w.U64Le(0);
  } else {
    w.U32Le(0);
    w.U32Le(static_cast<std::uint32_t>(ehdr));
    w.U32Le(0);
  }
  w.U32Le(0);
  w.U16Le(static_cast<std::uint16_t>(ehdr));
  w.U16Le(static_cast<std::uint16_t>(phent));
  w.U16Le(2);
  w.U16Le(0);
  w.U16Le(0);
  w.U16Le(0);
  ProgramHeader(w, is64, 0, 0x02200000, hash_offset, kHashSegmentSize);
  ProgramHeader(w, is64, 1, 0x4, image_offset, image.size());
  w.Raw(Bytes(kHashSegmentSize, 0xa5));
  w.Zeros(image_offset - w.size());
  w.Raw(image);
  return w.Take();
}

}  // namespace

Bytes BuildMbnFixture(const McfgLayout& layout) {
  Validate(layout);
  const Bytes image = BuildImage(layout);
  return layout.container_kind == ContainerKind::kRawMcfg ? image : Wrap(layout, image);
}

Bytes BuildMbnFixture(const FixtureSpec& spec) {
  Bytes out = BuildMbnFixture(spec.layout);
  if (spec.bad_magic) out[ImageOffset(spec.layout) + 3] = 'X';
  if (spec.truncate_at) {
    if (*spec.truncate_at > out.size()) Invalid("truncate_at beyond the fixture size");
    out.resize(*spec.truncate_at);
  }
  return out;
}

McfgLayout Project(const McfgDocument& doc) {
  McfgLayout layout;
  layout.container_kind = doc.container_kind;
  layout.elf64 = doc.elf64;
  layout.format_version = doc.format_version;
  layout.config_type = doc.config_type;
  layout.version = doc.version;
  for (const auto& item : doc.items) layout.items.push_back({item.kind, item.attributes});
  layout.trailer = doc.trailer;
  return layout;
}

std::vector<std::size_t> ItemOffsets(const McfgLayout& layout) {
  std::vector<std::size_t> out;
  std::size_t at = ImageOffset(layout) + kHeaderSize;
  for (const auto& item : layout.items) {
    out.push_back(at);
    at += kItemHeaderSize + Payload(item.kind).size();
  }
  return out;
}

}  // namespace vowifi::mbn
