// Copyright 2026 The PCC Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PCC_BITSTREAM_H_
#define PCC_BITSTREAM_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pcc/image_io.h"
#include "pcc/quant.h"

namespace pcc {

// MSB-first bit packer.
class BitWriter {
 public:
  void PutBit(bool bit);
  // Writes the low `count` bits of `value`, most significant first.
  void PutBits(uint64_t value, int count);
  // Order-0 exponential-Golomb. Values up to 2^62 - 1.
  void PutUe(uint64_t value);
  // Signed exp-Golomb: v <= 0 -> -2v, v > 0 -> 2v - 1.
  void PutSe(int64_t value);
  void PutByte(uint8_t byte) { PutBits(byte, 8); }

  std::size_t bit_count() const { return bit_count_; }
  // Pads to a byte boundary with zero bits and returns the buffer.
  std::vector<uint8_t> Finish() &&;
  // Bits written so far as '0'/'1' characters.
  std::string ToBitString() const;

 private:
  std::vector<uint8_t> bytes_;
  std::size_t bit_count_ = 0;
};

// MSB-first bit reader. Throws ParseError(kUnderflow) when exhausted.
class BitReader {
 public:
  explicit BitReader(std::span<const uint8_t> bytes) : bytes_(bytes) {}

  bool GetBit();
  uint64_t GetBits(int count);
  uint64_t GetUe();
  int64_t GetSe();

  std::size_t bit_position() const { return bit_pos_; }
  std::size_t byte_offset() const { return bit_pos_ / 8; }
  std::size_t bits_left() const { return bytes_.size() * 8 - bit_pos_; }

 private:
  std::span<const uint8_t> bytes_;
  std::size_t bit_pos_ = 0;
};

// Zigzag scan of an N x N block: element i is the row-major index of the
// i-th scanned coefficient.
const std::vector<int>& ZigzagOrder(int n);

// Flag bit 0 for an all-zero block. Otherwise flag 1, ue(last significant
// scan index), then se(level) for scan positions 0..last.
void EncodeCbLevels(const LevelBlock& block, BitWriter& out);
// Rejects a last index beyond the block and a zero level at the last index.
LevelBlock DecodeCbLevels(BitReader& in, int n);

enum class StreamMode : uint8_t { kUniform = 0, kPcc = 1 };

inline constexpr std::array<uint8_t, 4> kStreamMagic = {'P', 'C', 'C', '1'};
inline constexpr uint8_t kStreamVersion = 1;
inline constexpr std::size_t kHeaderBytes = 17;

struct StreamHeader {
  uint8_t version = kStreamVersion;
  uint32_t width = 0;
  uint32_t height = 0;
  uint8_t bit_depth = 8;
  uint8_t cu_size = 16;
  uint8_t iqp = 22;
  StreamMode mode = StreamMode::kPcc;

  uint32_t cu_cols() const { return (width + cu_size - 1) / cu_size; }
  uint32_t cu_rows() const { return (height + cu_size - 1) / cu_size; }
  std::size_t cu_count() const {
    return static_cast<std::size_t>(cu_cols()) * cu_rows();
  }

  friend bool operator==(const StreamHeader&, const StreamHeader&) = default;
};

// One coding unit: QP offsets relative to the header iqp and the quantized
// levels, both indexed by Channel (G, B, R).
struct CuRecord {
  std::array<int, kNumChannels> offsets{};
  std::array<LevelBlock, kNumChannels> blocks;

  friend bool operator==(const CuRecord&, const CuRecord&) = default;
};

// CU records are in raster order.
struct PccBitstream {
  StreamHeader header;
  std::vector<CuRecord> cus;

  friend bool operator==(const PccBitstream&, const PccBitstream&) = default;
};

// Serializes the container. Throws DomainError for a structurally invalid
// stream (bad header fields, wrong CU count, offsets in uniform mode...).
std::vector<uint8_t> WriteStream(const PccBitstream& stream);

// Parses only the 17-byte header.
StreamHeader ReadStreamHeader(std::span<const uint8_t> bytes);
// Parses the whole container; every accepted stream re-serializes to the
// same bytes.
PccBitstream ReadStream(std::span<const uint8_t> bytes);

}  // namespace pcc

#endif  // PCC_BITSTREAM_H_
