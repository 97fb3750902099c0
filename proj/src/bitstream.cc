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

#include "pcc/bitstream.h"

#include <algorithm>
#include <bit>
#include <limits>

#include "pcc/error.h"
#include "pcc/transform.h"

namespace pcc {

void BitWriter::PutBit(bool bit) {
  if (bit_count_ % 8 == 0) bytes_.push_back(0);
  if (bit) bytes_.back() |= static_cast<uint8_t>(0x80u >> (bit_count_ % 8));
  ++bit_count_;
}

void BitWriter::PutBits(uint64_t value, int count) {
  for (int i = count - 1; i >= 0; --i) PutBit((value >> i) & 1u);
}

void BitWriter::PutUe(uint64_t value) {
  if (value >= (uint64_t{1} << 62)) {
    throw DomainError("exp-Golomb value too large");
  }
  const uint64_t x = value + 1;
  const int len = std::bit_width(x);
  PutBits(0, len - 1);
  PutBits(x, len);
}

void BitWriter::PutSe(int64_t value) {
  if (value < -(int64_t{1} << 60) || value > (int64_t{1} << 60)) {
    throw DomainError("signed exp-Golomb value too large");
  }
  PutUe(value <= 0 ? static_cast<uint64_t>(-2 * value)
                   : static_cast<uint64_t>(2 * value - 1));
}

std::vector<uint8_t> BitWriter::Finish() && { return std::move(bytes_); }

std::string BitWriter::ToBitString() const {
  std::string s;
  s.reserve(bit_count_);
  for (std::size_t i = 0; i < bit_count_; ++i) {
    s.push_back((bytes_[i / 8] >> (7 - i % 8)) & 1 ? '1' : '0');
  }
  return s;
}

bool BitReader::GetBit() {
  if (bit_pos_ >= bytes_.size() * 8) {
    throw ParseError(ParseErrorKind::kUnderflow, byte_offset(),
                     "stream ended mid-symbol");
  }
  const bool bit = (bytes_[bit_pos_ / 8] >> (7 - bit_pos_ % 8)) & 1;
  ++bit_pos_;
  return bit;
}

uint64_t BitReader::GetBits(int count) {
  uint64_t v = 0;
  for (int i = 0; i < count; ++i) v = (v << 1) | (GetBit() ? 1u : 0u);
  return v;
}

uint64_t BitReader::GetUe() {
  int zeros = 0;
  while (!GetBit()) {
    if (++zeros > 62) {
      throw ParseError(ParseErrorKind::kBadCode, byte_offset(),
                       "exp-Golomb prefix too long");
    }
  }
  return ((uint64_t{1} << zeros) | GetBits(zeros)) - 1;
}

int64_t BitReader::GetSe() {
  const uint64_t k = GetUe();
  return (k & 1) ? static_cast<int64_t>((k + 1) / 2)
                 : -static_cast<int64_t>(k / 2);
}

namespace {

std::vector<int> MakeZigzag(int n) {
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n) * n);
  for (int s = 0; s <= 2 * (n - 1); ++s) {
    const int lo = std::max(0, s - (n - 1));
    const int hi = std::min(s, n - 1);
    if (s % 2 == 1) {
      for (int row = lo; row <= hi; ++row) order.push_back(row * n + (s - row));
    } else {
      for (int row = hi; row >= lo; --row) order.push_back(row * n + (s - row));
    }
  }
  return order;
}

void PutU32(BitWriter& w, uint32_t v) { w.PutBits(v, 32); }

}  // namespace

const std::vector<int>& ZigzagOrder(int n) {
  if (!IsSupportedBlockSize(n)) {
    throw DomainError("unsupported block size " + std::to_string(n));
  }
  static const std::array<std::vector<int>, 5> kOrders = {
      MakeZigzag(4), MakeZigzag(8), MakeZigzag(16), MakeZigzag(32),
      MakeZigzag(64)};
  return kOrders[std::countr_zero(static_cast<unsigned>(n)) - 2];
}

void EncodeCbLevels(const LevelBlock& block, BitWriter& out) {
  const auto& scan = ZigzagOrder(block.size);
  int last = -1;
  for (int i = static_cast<int>(scan.size()) - 1; i >= 0; --i) {
    if (block.levels[scan[i]] != 0) {
      last = i;
      break;
    }
  }
  if (last < 0) {
    out.PutBit(false);
    return;
  }
  out.PutBit(true);
  out.PutUe(static_cast<uint64_t>(last));
  for (int i = 0; i <= last; ++i) out.PutSe(block.levels[scan[i]]);
}

LevelBlock DecodeCbLevels(BitReader& in, int n) {
  const auto& scan = ZigzagOrder(n);
  LevelBlock block(n);
  if (!in.GetBit()) return block;
  const uint64_t last = in.GetUe();
  if (last >= scan.size()) {
    throw ParseError(ParseErrorKind::kIndexOverflow, in.byte_offset(),
                     "last index " + std::to_string(last) + " in a " +
                         std::to_string(n) + "x" + std::to_string(n) +
                         " block");
  }
  for (uint64_t i = 0; i <= last; ++i) {
    const int64_t v = in.GetSe();
    if (v < std::numeric_limits<int32_t>::min() ||
        v > std::numeric_limits<int32_t>::max()) {
      throw ParseError(ParseErrorKind::kBadCode, in.byte_offset(),
                       "coefficient level out of range");
    }
    block.levels[scan[i]] = static_cast<int32_t>(v);
  }
  if (block.levels[scan[last]] == 0) {
    throw ParseError(ParseErrorKind::kBadCode, in.byte_offset(),
                     "zero level at the last significant position");
  }
  return block;
}

namespace {

bool HeaderFieldsValid(const StreamHeader& h, std::string* why) {
  if (h.width == 0 || h.height == 0) {
    *why = "width and height must be at least 1";
  } else if (h.bit_depth != 8 && h.bit_depth != 10) {
    *why = "bit depth must be 8 or 10";
  } else if (h.cu_size != 8 && h.cu_size != 16 && h.cu_size != 32 &&
             h.cu_size != 64) {
    *why = "CU size must be 8, 16, 32 or 64";
  } else if (h.iqp > kMaxQp) {
    *why = "initial QP above 51";
  } else if (h.mode != StreamMode::kUniform && h.mode != StreamMode::kPcc) {
    *why = "unknown mode";
  } else {
    return true;
  }
  return false;
}

bool OffsetValid(const StreamHeader& h, int offset) {
  if (h.mode == StreamMode::kUniform && offset != 0) return false;
  const int qp = h.iqp + offset;
  return qp >= kMinQp && qp <= kMaxQp;
}

}  // namespace

std::vector<uint8_t> WriteStream(const PccBitstream& stream) {
  const StreamHeader& h = stream.header;
  std::string why;
  if (h.version != kStreamVersion) throw DomainError("unsupported version");
  if (!HeaderFieldsValid(h, &why)) throw DomainError(why);
  if (stream.cus.size() != h.cu_count()) {
    throw DomainError("CU count does not match the image grid");
  }

  BitWriter w;
  for (uint8_t m : kStreamMagic) w.PutByte(m);
  w.PutByte(h.version);
  PutU32(w, h.width);
  PutU32(w, h.height);
  w.PutByte(h.bit_depth);
  w.PutByte(h.cu_size);
  w.PutByte(h.iqp);
  w.PutByte(static_cast<uint8_t>(h.mode));

  for (const CuRecord& cu : stream.cus) {
    for (int c = 0; c < kNumChannels; ++c) {
      if (!OffsetValid(h, cu.offsets[c])) {
        throw DomainError("QP offset " + std::to_string(cu.offsets[c]) +
                          " invalid for this stream");
      }
      w.PutSe(cu.offsets[c]);
    }
    for (const LevelBlock& b : cu.blocks) {
      if (b.size != h.cu_size ||
          b.levels.size() != static_cast<std::size_t>(b.size) * b.size) {
        throw DomainError("coding block size does not match the header");
      }
      EncodeCbLevels(b, w);
    }
  }
  return std::move(w).Finish();
}

StreamHeader ReadStreamHeader(std::span<const uint8_t> bytes) {
  if (bytes.size() < kStreamMagic.size() ||
      !std::equal(kStreamMagic.begin(), kStreamMagic.end(), bytes.begin())) {
    throw ParseError(ParseErrorKind::kBadMagic, 0, "expected \"PCC1\"");
  }
  if (bytes.size() < kHeaderBytes) {
    throw ParseError(ParseErrorKind::kSizeMismatch, bytes.size(),
                     "header truncated");
  }
  BitReader r(bytes);
  r.GetBits(32);
  StreamHeader h;
  h.version = static_cast<uint8_t>(r.GetBits(8));
  if (h.version != kStreamVersion) {
    throw ParseError(ParseErrorKind::kVersionMismatch, 4,
                     "version " + std::to_string(h.version) + ", expected " +
                         std::to_string(kStreamVersion));
  }
  h.width = static_cast<uint32_t>(r.GetBits(32));
  h.height = static_cast<uint32_t>(r.GetBits(32));
  h.bit_depth = static_cast<uint8_t>(r.GetBits(8));
  h.cu_size = static_cast<uint8_t>(r.GetBits(8));
  h.iqp = static_cast<uint8_t>(r.GetBits(8));
  h.mode = static_cast<StreamMode>(r.GetBits(8));
  std::string why;
  if (!HeaderFieldsValid(h, &why)) {
    throw ParseError(ParseErrorKind::kInvalidHeader, 5, why);
  }
  return h;
}

PccBitstream ReadStream(std::span<const uint8_t> bytes) {
  PccBitstream stream;
  stream.header = ReadStreamHeader(bytes);
  const StreamHeader& h = stream.header;

  BitReader r(bytes.subspan(kHeaderBytes));
  auto at = [&] { return kHeaderBytes + r.byte_offset(); };
  const std::size_t count = h.cu_count();
  // Each CU needs at least six bits; reject absurd dimensions before
  // allocating.
  if (count > r.bits_left() / 6) {
    throw ParseError(ParseErrorKind::kSizeMismatch, kHeaderBytes,
                     "body too short for a " + std::to_string(h.width) + "x" +
                         std::to_string(h.height) + " image");
  }
  stream.cus.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    CuRecord cu;
    for (int c = 0; c < kNumChannels; ++c) {
      const int64_t off = r.GetSe();
      if (off < -kMaxQp || off > kMaxQp ||
          !OffsetValid(h, static_cast<int>(off))) {
        throw ParseError(ParseErrorKind::kInvalidOffset, at(),
                         "offset " + std::to_string(off) + " in CU " +
                             std::to_string(i));
      }
      cu.offsets[c] = static_cast<int>(off);
    }
    for (auto& b : cu.blocks) b = DecodeCbLevels(r, h.cu_size);
    stream.cus.push_back(std::move(cu));
  }

  // Only zero padding up to the next byte boundary may follow.
  const std::size_t pad = (8 - r.bit_position() % 8) % 8;
  if (r.GetBits(static_cast<int>(pad)) != 0) {
    throw ParseError(ParseErrorKind::kSizeMismatch, at(),
                     "non-zero padding bits");
  }
  if (r.bits_left() != 0) {
    throw ParseError(ParseErrorKind::kSizeMismatch, at(),
                     std::to_string(r.bits_left() / 8) + " trailing bytes");
  }
  return stream;
}

}  // namespace pcc
