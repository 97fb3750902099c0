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

#include "pcc/transform.h"

#include <array>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "pcc/error.h"

namespace pcc {
namespace {

// basis[k * n + i] = alpha(k) * cos(pi * (2i + 1) * k / 2n)
std::vector<double> MakeBasis(int n) {
  std::vector<double> basis(static_cast<std::size_t>(n) * n);
  const double a0 = std::sqrt(1.0 / n);
  const double ak = std::sqrt(2.0 / n);
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      basis[k * n + i] =
          (k == 0 ? a0 : ak) *
          std::cos(std::numbers::pi * (2 * i + 1) * k / (2.0 * n));
    }
  }
  return basis;
}

const std::vector<double>& Basis(int n) {
  static const std::array<std::vector<double>, 5> kBases = {
      MakeBasis(4), MakeBasis(8), MakeBasis(16), MakeBasis(32), MakeBasis(64)};
  return kBases[std::countr_zero(static_cast<unsigned>(n)) - 2];
}

void CheckSize(int n) {
  if (!IsSupportedBlockSize(n)) {
    throw DomainError("unsupported transform size " + std::to_string(n));
  }
}

}  // namespace

bool IsSupportedBlockSize(int n) {
  return n == 4 || n == 8 || n == 16 || n == 32 || n == 64;
}

CoeffBlock ForwardDct2d(std::span<const double> samples, int n) {
  CheckSize(n);
  if (samples.size() != static_cast<std::size_t>(n) * n) {
    throw DomainError("sample block does not match transform size");
  }
  const auto& c = Basis(n);
  // tmp = X * C^T  (each row transformed)
  std::vector<double> tmp(samples.size());
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k < n; ++k) {
      double acc = 0.0;
      for (int i = 0; i < n; ++i) acc += samples[r * n + i] * c[k * n + i];
      tmp[r * n + k] = acc;
    }
  }
  // Y = C * tmp  (each column transformed)
  CoeffBlock out(n);
  for (int k = 0; k < n; ++k) {
    for (int col = 0; col < n; ++col) {
      double acc = 0.0;
      for (int i = 0; i < n; ++i) acc += c[k * n + i] * tmp[i * n + col];
      out.values[k * n + col] = acc;
    }
  }
  return out;
}

std::vector<double> InverseDct2d(const CoeffBlock& coeffs) {
  const int n = coeffs.size;
  CheckSize(n);
  if (coeffs.values.size() != static_cast<std::size_t>(n) * n) {
    throw DomainError("coefficient block does not match its size");
  }
  const auto& c = Basis(n);
  // tmp = C^T * Y
  std::vector<double> tmp(coeffs.values.size());
  for (int i = 0; i < n; ++i) {
    for (int col = 0; col < n; ++col) {
      double acc = 0.0;
      for (int k = 0; k < n; ++k) acc += c[k * n + i] * coeffs.values[k * n + col];
      tmp[i * n + col] = acc;
    }
  }
  // X = tmp * C
  std::vector<double> out(tmp.size());
  for (int r = 0; r < n; ++r) {
    for (int i = 0; i < n; ++i) {
      double acc = 0.0;
      for (int k = 0; k < n; ++k) acc += tmp[r * n + k] * c[k * n + i];
      out[r * n + i] = acc;
    }
  }
  return out;
}

}  // namespace pcc
