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

#ifndef PCC_METRICS_H_
#define PCC_METRICS_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

#include "pcc/image_io.h"

namespace pcc {

// SSIM parameters: 11x11 Gaussian window (sigma 1.5), K1 = 0.01, K2 = 0.03.
inline constexpr int kSsimWindow = 11;
inline constexpr double kSsimSigma = 1.5;
inline constexpr double kSsimK1 = 0.01;
inline constexpr double kSsimK2 = 0.03;

// Five-scale MS-SSIM exponents, finest scale first.
inline constexpr std::array<double, 5> kMsSsimWeights = {
    0.0448, 0.2856, 0.3001, 0.2363, 0.1333};
// Smallest side length for which all five scales still fit the window.
inline constexpr int kMsSsimMinSide = kSsimWindow << 4;  // 176

// 8 * bytes / pixels.
double BitsPerPixel(std::size_t stream_bytes, int width, int height);
// Parses the stream header and checks its dimensions against `image`;
// throws DomainError on mismatch.
double Bpp(std::span<const uint8_t> stream, const ImagePlanar& image);

// Mean SSIM over valid window positions, averaged over the three planes.
// Throws DomainError for mismatched images or a side shorter than the window.
double Ssim(const ImagePlanar& ref, const ImagePlanar& test);

// Multi-scale SSIM with 2x2 mean downsampling between scales, averaged over
// the three planes. Negative per-scale terms are clipped to zero. Throws
// DomainError when the smaller side is below kMsSsimMinSide.
double MsSsim(const ImagePlanar& ref, const ImagePlanar& test);

// PSNR in dB; +infinity marks a lossless pair.
struct PsnrReport {
  std::array<double, kNumChannels> channel{};  // indexed by Channel
  double mean = 0.0;  // from the MSE pooled over all three planes

  bool lossless() const;
};
PsnrReport Psnr(const ImagePlanar& ref, const ImagePlanar& test);

struct MetricsReport {
  double bpp = 0.0;
  double ssim = 0.0;
  std::optional<double> ms_ssim;  // empty when the image is too small
  PsnrReport psnr;
};

// All metrics for a decoded image against its source.
MetricsReport Measure(const ImagePlanar& ref, const ImagePlanar& test,
                      std::size_t stream_bytes);

}  // namespace pcc

#endif  // PCC_METRICS_H_
