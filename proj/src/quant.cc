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

#include "pcc/quant.h"

#include <cmath>
#include <string>

#include "pcc/error.h"

namespace pcc {

double QstepFromQp(int q) {
  if (q < kMinQp || q > kMaxQp) {
    throw DomainError("QP " + std::to_string(q) + " outside [0, 51]");
  }
  return std::exp2((q - 4) / 6.0);
}

int QpFromQstep(double s) {
  if (!(s > 0.0)) {
    throw DomainError("QStep must be positive");
  }
  const long q = std::lround(6.0 * std::log2(s)) + 4;
  return static_cast<int>(std::clamp<long>(q, kMinQp, kMaxQp));
}

LevelBlock QuantizeBlock(const CoeffBlock& coeffs, double qstep) {
  if (!(qstep > 0.0)) throw DomainError("QStep must be positive");
  LevelBlock out(coeffs.size);
  for (std::size_t i = 0; i < coeffs.values.size(); ++i) {
    const double c = coeffs.values[i];
    const auto mag =
        static_cast<int32_t>(std::floor(std::abs(c) / qstep + kDeadzoneOffset));
    out.levels[i] = c < 0 ? -mag : mag;
  }
  return out;
}

CoeffBlock DequantizeBlock(const LevelBlock& levels, double qstep) {
  if (!(qstep > 0.0)) throw DomainError("QStep must be positive");
  CoeffBlock out(levels.size);
  for (std::size_t i = 0; i < levels.levels.size(); ++i) {
    out.values[i] = levels.levels[i] * qstep;
  }
  return out;
}

}  // namespace pcc
