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

#ifndef PCC_QUANT_H_
#define PCC_QUANT_H_

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "pcc/image_io.h"
#include "pcc/transform.h"

namespace pcc {

inline constexpr int kMinQp = 0;
inline constexpr int kMaxQp = 51;

// Rounding offset of the deadzone quantizer (intra convention).
inline constexpr double kDeadzoneOffset = 1.0 / 3.0;

// QStep = 2^((q - 4) / 6). Throws DomainError for q outside [0, 51].
double QstepFromQp(int q);

// round(6 * log2(s)) + 4, clamped to [0, 51]. Throws DomainError for s <= 0.
int QpFromQstep(double s);

// Per-channel QPs of one coding unit: a frame-level initial QP plus signed
// cumulative offsets, indexed by Channel (G, B, R).
struct QpState {
  int iqp = 0;
  std::array<int, kNumChannels> offsets{};

  int qp(int c) const { return std::clamp(iqp + offsets[c], kMinQp, kMaxQp); }
  double qstep(int c) const { return QstepFromQp(qp(c)); }
  // True when iqp + offset for channel c is outside [0, 51].
  bool clamped(int c) const {
    return iqp + offsets[c] < kMinQp || iqp + offsets[c] > kMaxQp;
  }

  friend bool operator==(const QpState&, const QpState&) = default;
};

// Quantizer output for one coding block, row-major.
struct LevelBlock {
  int size = 0;
  std::vector<int32_t> levels;

  LevelBlock() = default;
  explicit LevelBlock(int n)
      : size(n), levels(static_cast<std::size_t>(n) * n, 0) {}

  bool all_zero() const {
    return std::all_of(levels.begin(), levels.end(),
                       [](int32_t v) { return v == 0; });
  }

  friend bool operator==(const LevelBlock&, const LevelBlock&) = default;
};

// level = sign(c) * floor(|c| / s + 1/3)
LevelBlock QuantizeBlock(const CoeffBlock& coeffs, double qstep);
// c' = level * s
CoeffBlock DequantizeBlock(const LevelBlock& levels, double qstep);

}  // namespace pcc

#endif  // PCC_QUANT_H_
