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

#include "pcc/colorimetry.h"

#include <array>
#include <cmath>
#include <string>

#include "pcc/error.h"

namespace pcc {
namespace {

// Linear sRGB -> XYZ, D65.
constexpr double kRgbToXyz[3][3] = {
    {0.4124564, 0.3575761, 0.1804375},
    {0.2126729, 0.7151522, 0.0721750},
    {0.0193339, 0.1191920, 0.9503041},
};

// The white point is the image of RGB (1,1,1) so that white lands on a = b = 0.
constexpr std::array<double, 3> WhitePoint() {
  std::array<double, 3> w{};
  for (int i = 0; i < 3; ++i) {
    w[i] = kRgbToXyz[i][0] + kRgbToXyz[i][1] + kRgbToXyz[i][2];
  }
  return w;
}
constexpr std::array<double, 3> kWhite = WhitePoint();

double SrgbToLinear(double c) {
  return c <= 0.04045 ? c / 12.92 : std::pow((c + 0.055) / 1.055, 2.4);
}

double LabF(double t) {
  constexpr double kDelta = 6.0 / 29.0;
  if (t > kDelta * kDelta * kDelta) return std::cbrt(t);
  return t / (3.0 * kDelta * kDelta) + 4.0 / 29.0;
}

}  // namespace

JncdBand::JncdBand(double epsilon) : epsilon_(epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw DomainError("JNCD epsilon must lie in (0, 1), got " +
                      std::to_string(epsilon));
  }
}

const char* ToString(JncdClass c) {
  switch (c) {
    case JncdClass::kBelow: return "below";
    case JncdClass::kWithin: return "within";
    case JncdClass::kAbove: return "above";
  }
  return "unknown";
}

LabColor RgbToLab(int r, int g, int b, int bit_depth) {
  if (bit_depth < 1 || bit_depth > 16) {
    throw DomainError("unsupported bit depth " + std::to_string(bit_depth));
  }
  const int maxv = (1 << bit_depth) - 1;
  for (int v : {r, g, b}) {
    if (v < 0 || v > maxv) {
      throw DomainError("sample " + std::to_string(v) + " outside [0, " +
                        std::to_string(maxv) + "]");
    }
  }
  const double lin[3] = {SrgbToLinear(static_cast<double>(r) / maxv),
                         SrgbToLinear(static_cast<double>(g) / maxv),
                         SrgbToLinear(static_cast<double>(b) / maxv)};
  double f[3];
  for (int i = 0; i < 3; ++i) {
    const double xyz = kRgbToXyz[i][0] * lin[0] + kRgbToXyz[i][1] * lin[1] +
                       kRgbToXyz[i][2] * lin[2];
    f[i] = LabF(xyz / kWhite[i]);
  }
  return {116.0 * f[1] - 16.0, 500.0 * (f[0] - f[1]), 200.0 * (f[1] - f[2])};
}

double DeltaEab(const LabColor& c1, const LabColor& c2) {
  const double dl = c2.L - c1.L;
  const double da = c2.a - c1.a;
  const double db = c2.b - c1.b;
  return std::sqrt(dl * dl + da * da + db * db);
}

JncdClass ClassifyJncd(double delta_e, const JncdBand& band) {
  if (delta_e < band.lower()) return JncdClass::kBelow;
  if (delta_e <= band.upper()) return JncdClass::kWithin;
  return JncdClass::kAbove;
}

}  // namespace pcc
