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

#include "pcc/metrics.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "pcc/bitstream.h"
#include "pcc/error.h"

namespace pcc {
namespace {

struct Plane {
  int width = 0;
  int height = 0;
  std::vector<double> v;

  double at(int x, int y) const {
    return v[static_cast<std::size_t>(y) * width + x];
  }
};

Plane ToPlane(const ImagePlanar& image, int c) {
  Plane p{image.width(), image.height(), {}};
  const auto src = image.plane(c);
  p.v.assign(src.begin(), src.end());
  return p;
}

void CheckComparable(const ImagePlanar& a, const ImagePlanar& b) {
  if (a.width() != b.width() || a.height() != b.height()) {
    throw DomainError("images differ in size");
  }
  if (a.bit_depth() != b.bit_depth()) {
    throw DomainError("images differ in bit depth");
  }
}

const std::array<double, kSsimWindow>& GaussianTaps() {
  static const std::array<double, kSsimWindow> kTaps = [] {
    std::array<double, kSsimWindow> t{};
    const int r = kSsimWindow / 2;
    double sum = 0.0;
    for (int i = 0; i < kSsimWindow; ++i) {
      t[i] = std::exp(-((i - r) * (i - r)) / (2.0 * kSsimSigma * kSsimSigma));
      sum += t[i];
    }
    for (double& x : t) x /= sum;
    return t;
  }();
  return kTaps;
}

// 'Valid' separable Gaussian filtering: output is
// (w - 10) x (h - 10).
Plane FilterValid(const Plane& in) {
  const auto& taps = GaussianTaps();
  const int ow = in.width - kSsimWindow + 1;
  const int oh = in.height - kSsimWindow + 1;
  Plane horiz{ow, in.height, std::vector<double>(static_cast<std::size_t>(ow) * in.height)};
  for (int y = 0; y < in.height; ++y) {
    for (int x = 0; x < ow; ++x) {
      double acc = 0.0;
      for (int k = 0; k < kSsimWindow; ++k) acc += taps[k] * in.at(x + k, y);
      horiz.v[static_cast<std::size_t>(y) * ow + x] = acc;
    }
  }
  Plane out{ow, oh, std::vector<double>(static_cast<std::size_t>(ow) * oh)};
  for (int y = 0; y < oh; ++y) {
    for (int x = 0; x < ow; ++x) {
      double acc = 0.0;
      for (int k = 0; k < kSsimWindow; ++k) acc += taps[k] * horiz.at(x, y + k);
      out.v[static_cast<std::size_t>(y) * ow + x] = acc;
    }
  }
  return out;
}

Plane Product(const Plane& a, const Plane& b) {
  Plane p{a.width, a.height, std::vector<double>(a.v.size())};
  for (std::size_t i = 0; i < a.v.size(); ++i) p.v[i] = a.v[i] * b.v[i];
  return p;
}

struct SsimTerms {
  double ssim = 0.0;  // mean of l * cs
  double cs = 0.0;    // mean of the contrast-structure term
};

SsimTerms PlaneSsim(const Plane& x, const Plane& y, double dynamic_range) {
  if (x.width < kSsimWindow || x.height < kSsimWindow) {
    throw DomainError("image side below the " + std::to_string(kSsimWindow) +
                      "-pixel SSIM window");
  }
  const double c1 = (kSsimK1 * dynamic_range) * (kSsimK1 * dynamic_range);
  const double c2 = (kSsimK2 * dynamic_range) * (kSsimK2 * dynamic_range);
  const Plane mu_x = FilterValid(x);
  const Plane mu_y = FilterValid(y);
  const Plane xx = FilterValid(Product(x, x));
  const Plane yy = FilterValid(Product(y, y));
  const Plane xy = FilterValid(Product(x, y));

  double ssim_sum = 0.0;
  double cs_sum = 0.0;
  for (std::size_t i = 0; i < mu_x.v.size(); ++i) {
    const double mx = mu_x.v[i];
    const double my = mu_y.v[i];
    const double var_x = xx.v[i] - mx * mx;
    const double var_y = yy.v[i] - my * my;
    const double cov = xy.v[i] - mx * my;
    const double l = (2.0 * mx * my + c1) / (mx * mx + my * my + c1);
    const double cs = (2.0 * cov + c2) / (var_x + var_y + c2);
    ssim_sum += l * cs;
    cs_sum += cs;
  }
  const double n = static_cast<double>(mu_x.v.size());
  return {ssim_sum / n, cs_sum / n};
}

Plane Downsample2x(const Plane& in) {
  Plane out{in.width / 2, in.height / 2, {}};
  out.v.resize(static_cast<std::size_t>(out.width) * out.height);
  for (int y = 0; y < out.height; ++y) {
    for (int x = 0; x < out.width; ++x) {
      out.v[static_cast<std::size_t>(y) * out.width + x] =
          0.25 * (in.at(2 * x, 2 * y) + in.at(2 * x + 1, 2 * y) +
                  in.at(2 * x, 2 * y + 1) + in.at(2 * x + 1, 2 * y + 1));
    }
  }
  return out;
}

}  // namespace

double BitsPerPixel(std::size_t stream_bytes, int width, int height) {
  if (width <= 0 || height <= 0) throw DomainError("empty image");
  return 8.0 * static_cast<double>(stream_bytes) /
         (static_cast<double>(width) * height);
}

double Bpp(std::span<const uint8_t> stream, const ImagePlanar& image) {
  const StreamHeader h = ReadStreamHeader(stream);
  if (h.width != static_cast<uint32_t>(image.width()) ||
      h.height != static_cast<uint32_t>(image.height())) {
    throw DomainError("stream dimensions do not match the image");
  }
  return BitsPerPixel(stream.size(), image.width(), image.height());
}

double Ssim(const ImagePlanar& ref, const ImagePlanar& test) {
  CheckComparable(ref, test);
  double sum = 0.0;
  for (int c = 0; c < kNumChannels; ++c) {
    sum += PlaneSsim(ToPlane(ref, c), ToPlane(test, c), ref.max_value()).ssim;
  }
  return sum / kNumChannels;
}

double MsSsim(const ImagePlanar& ref, const ImagePlanar& test) {
  CheckComparable(ref, test);
  if (std::min(ref.width(), ref.height()) < kMsSsimMinSide) {
    throw DomainError("MS-SSIM needs both sides >= " +
                      std::to_string(kMsSsimMinSide) + " pixels");
  }
  double sum = 0.0;
  for (int c = 0; c < kNumChannels; ++c) {
    Plane x = ToPlane(ref, c);
    Plane y = ToPlane(test, c);
    double score = 1.0;
    for (std::size_t s = 0; s < kMsSsimWeights.size(); ++s) {
      const SsimTerms t = PlaneSsim(x, y, ref.max_value());
      const bool coarsest = s + 1 == kMsSsimWeights.size();
      const double term = std::max(0.0, coarsest ? t.ssim : t.cs);
      score *= std::pow(term, kMsSsimWeights[s]);
      if (!coarsest) {
        x = Downsample2x(x);
        y = Downsample2x(y);
      }
    }
    sum += score;
  }
  return sum / kNumChannels;
}

bool PsnrReport::lossless() const { return std::isinf(mean); }

PsnrReport Psnr(const ImagePlanar& ref, const ImagePlanar& test) {
  CheckComparable(ref, test);
  const double peak = ref.max_value();
  auto to_db = [peak](double mse) {
    return mse == 0.0 ? std::numeric_limits<double>::infinity()
                      : 10.0 * std::log10(peak * peak / mse);
  };
  PsnrReport out;
  double pooled = 0.0;
  for (int c = 0; c < kNumChannels; ++c) {
    const auto a = ref.plane(c);
    const auto b = test.plane(c);
    double se = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const double d = static_cast<double>(a[i]) - b[i];
      se += d * d;
    }
    const double mse = se / static_cast<double>(a.size());
    out.channel[c] = to_db(mse);
    pooled += mse;
  }
  out.mean = to_db(pooled / kNumChannels);
  return out;
}

MetricsReport Measure(const ImagePlanar& ref, const ImagePlanar& test,
                      std::size_t stream_bytes) {
  MetricsReport m;
  m.bpp = BitsPerPixel(stream_bytes, ref.width(), ref.height());
  m.ssim = Ssim(ref, test);
  if (std::min(ref.width(), ref.height()) >= kMsSsimMinSide) {
    m.ms_ssim = MsSsim(ref, test);
  }
  m.psnr = Psnr(ref, test);
  return m;
}

}  // namespace pcc
