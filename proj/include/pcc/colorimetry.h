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

#ifndef PCC_COLORIMETRY_H_
#define PCC_COLORIMETRY_H_

namespace pcc {

// CIELAB coordinates relative to the D65 white point.
struct LabColor {
  double L = 0.0;
  double a = 0.0;
  double b = 0.0;
};

// The just-noticeable color difference in CIELAB units.
inline constexpr double kJncdThreshold = 2.3;

// Acceptance band [threshold - epsilon, threshold + epsilon].
class JncdBand {
 public:
  // Throws DomainError unless 0 < epsilon < 1.
  JncdBand() : JncdBand(0.1) {}
  explicit JncdBand(double epsilon);

  double threshold() const { return kJncdThreshold; }
  double epsilon() const { return epsilon_; }
  double lower() const { return kJncdThreshold - epsilon_; }
  double upper() const { return kJncdThreshold + epsilon_; }

 private:
  double epsilon_;
};

enum class JncdClass { kBelow, kWithin, kAbove };

const char* ToString(JncdClass c);

// sRGB (IEC 61966-2-1 transfer curve, D65) to CIELAB. Samples are normalized
// by 2^bit_depth - 1. Throws DomainError for out-of-range samples.
LabColor RgbToLab(int r, int g, int b, int bit_depth);

// Euclidean CIELAB distance.
double DeltaEab(const LabColor& c1, const LabColor& c2);

JncdClass ClassifyJncd(double delta_e, const JncdBand& band);

}  // namespace pcc

#endif  // PCC_COLORIMETRY_H_
