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

#ifndef VOWIFI_CORE_BYTES_H_
#define VOWIFI_CORE_BYTES_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vowifi {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

std::string ToHex(ByteView data);
// Throws std::invalid_argument on odd length or non-hex characters.
Bytes FromHex(std::string_view hex);

Bytes ToBytes(std::string_view text);

inline void Append(Bytes& out, ByteView data) {
  out.insert(out.end(), data.begin(), data.end());
}

Bytes Concat(std::initializer_list<ByteView> parts);

// Raised by ByteReader when a read runs past the end of its buffer.
class ShortRead : public std::out_of_range {
 public:
  explicit ShortRead(std::size_t offset)
      : std::out_of_range("short read at offset " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Big-endian writer used by the IKE codec.
class ByteWriter {
 public:
  void U8(std::uint8_t v) { buf_.push_back(v); }
  void U16(std::uint16_t v) {
    buf_.push_back(static_cast<std::uint8_t>(v >> 8));
    buf_.push_back(static_cast<std::uint8_t>(v));
  }
  void U32(std::uint32_t v) {
    U16(static_cast<std::uint16_t>(v >> 16));
    U16(static_cast<std::uint16_t>(v));
  }
  void U16Le(std::uint16_t v) {
    buf_.push_back(static_cast<std::uint8_t>(v));
    buf_.push_back(static_cast<std::uint8_t>(v >> 8));
  }
  void U32Le(std::uint32_t v) {
    U16Le(static_cast<std::uint16_t>(v));
    U16Le(static_cast<std::uint16_t>(v >> 16));
  }
  void U64Le(std::uint64_t v) {
    U32Le(static_cast<std::uint32_t>(v));
    U32Le(static_cast<std::uint32_t>(v >> 32));
  }
  void Raw(ByteView data) { Append(buf_, data); }
  void Zeros(std::size_t n) { buf_.insert(buf_.end(), n, 0); }

  // Overwrites a previously written big-endian u16 at `offset`.
  void PatchU16(std::size_t offset, std::uint16_t v) {
    buf_.at(offset) = static_cast<std::uint8_t>(v >> 8);
    buf_.at(offset + 1) = static_cast<std::uint8_t>(v);
  }
  void PatchU32(std::size_t offset, std::uint32_t v) {
    PatchU16(offset, static_cast<std::uint16_t>(v >> 16));
    PatchU16(offset + 2, static_cast<std::uint16_t>(v));
  }

  std::size_t size() const { return buf_.size(); }
  const Bytes& bytes() const { return buf_; }
  Bytes Take() { return std::move(buf_); }

 private:
  Bytes buf_;
};

// Bounds-checked reader. Endianness is chosen per call since the MCFG
// container is little-endian while IKE is network order.
class ByteReader {
 public:
  explicit ByteReader(ByteView data, std::size_t base_offset = 0)
      : data_(data), base_(base_offset) {}

  std::uint8_t U8() { return Take(1)[0]; }
  std::uint16_t U16() {
    auto b = Take(2);
    return static_cast<std::uint16_t>((b[0] << 8) | b[1]);
  }
  std::uint32_t U32() {
    auto b = Take(4);
    return (std::uint32_t{b[0]} << 24) | (std::uint32_t{b[1]} << 16) |
           (std::uint32_t{b[2]} << 8) | b[3];
  }
  std::uint16_t U16Le() {
    auto b = Take(2);
    return static_cast<std::uint16_t>(b[0] | (b[1] << 8));
  }
  std::uint32_t U32Le() {
    auto b = Take(4);
    return std::uint32_t{b[0]} | (std::uint32_t{b[1]} << 8) |
           (std::uint32_t{b[2]} << 16) | (std::uint32_t{b[3]} << 24);
  }
  std::uint64_t U64Le() {
    std::uint64_t lo = U32Le();
    std::uint64_t hi = U32Le();
    return lo | (hi << 32);
  }
  ByteView Take(std::size_t n) {
    if (n > remaining()) throw ShortRead(offset());
    auto out = data_.subspan(pos_, n);
    pos_ += n;
    return out;
  }
  Bytes TakeBytes(std::size_t n) {
    auto v = Take(n);
    return Bytes(v.begin(), v.end());
  }
  void Skip(std::size_t n) { Take(n); }

  std::size_t remaining() const { return data_.size() - pos_; }
  std::size_t position() const { return pos_; }
  // Absolute offset in the outermost buffer.
  std::size_t offset() const { return base_ + pos_; }
  bool empty() const { return remaining() == 0; }

 private:
  ByteView data_;
  std::size_t pos_ = 0;
  std::size_t base_;
};

}  // namespace vowifi

#endif  // VOWIFI_CORE_BYTES_H_
