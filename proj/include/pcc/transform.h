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

#ifndef PCC_TRANSFORM_H_
#define PCC_TRANSFORM_H_

#include <span>
#include <vector>

namespace pcc {

// True for the supported square transform sizes 4, 8, 16, 32 and 64.
bool IsSupportedBlockSize(int n);

// N x N real coefficients, row-major. Row index is vertical frequency.
struct CoeffBlock {
  int size = 0;
  std::vector<double> values;

  CoeffBlock() = default;
  explicit CoeffBlock(int n)
      : size(n), values(static_cast<std::size_t>(n) * n, 0.0) {}

  double& at(int row, int col) { return values[row * size + col]; }
  double at(int row, int col) const { return values[row * size + col]; }
};

// Separable orthonormal DCT-II, rows then columns. `samples` is N x N
// row-major and already centered. Throws DomainError for unsupported N or a
// span of the wrong length.
CoeffBlock ForwardDct2d(std::span<const double> samples, int n);

// Exact inverse of ForwardDct2d (DCT-III with matching normalization).
std::vector<double> InverseDct2d(const CoeffBlock& coeffs);

}  // namespace pcc

#endif  // PCC_TRANSFORM_H_
