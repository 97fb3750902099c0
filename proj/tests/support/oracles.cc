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

#include "support/oracles.h"

#include <cmath>
#include <numbers>

namespace pcc::testing {

std::vector<double> BruteForceDct2d(std::span<const double> x, int n) {
  std::vector<double> out(static_cast<std::size_t>(n) * n);
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      double acc = 0.0;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          acc += x[i * n + j] *
                 std::cos(std::numbers::pi * (2 * i + 1) * k / (2.0 * n)) *
                 std::cos(std::numbers::pi * (2 * j + 1) * l / (2.0 * n));
        }
      }
      const double ak = k == 0 ? std::sqrt(1.0 / n) : std::sqrt(2.0 / n);
      const double al = l == 0 ? std::sqrt(1.0 / n) : std::sqrt(2.0 / n);
      out[k * n + l] = ak * al * acc;
    }
  }
  return out;
}

std::string ExpGolombBits(uint64_t v) {
  std::string binary;
  for (uint64_t x = v + 1; x > 0; x /= 2) binary.insert(binary.begin(), char('0' + x % 2));
  return std::string(binary.size() - 1, '0') + binary;
}

std::string SignedExpGolombBits(int64_t v) {
  return ExpGolombBits(v <= 0 ? static_cast<uint64_t>(-2 * v)
                              : static_cast<uint64_t>(2 * v - 1));
}

MeanTriple MeanOracle(const BlockTriple& blocks, ValidExtent valid) {
  MeanTriple m;
  for (int c = 0; c < kNumChannels; ++c) {
    double sum = 0.0;
    for (int y = 0; y < valid.height; ++y) {
      for (int x = 0; x < valid.width; ++x) {
        sum += blocks.planes[c][y * blocks.size + x];
      }
    }
    m.v[c] = static_cast<int>(
        std::floor(sum / (static_cast<double>(valid.width) * valid.height) + 0.5));
  }
  return m;
}

namespace {

std::vector<QpState> EnumerateVisits(int iqp, bool raising, int max_passes) {
  const int unit = raising ? 1 : -1;
  // (channel, steps) in visit order; written out rather than shared with the
  // implementation's schedule tables.
  const int legs[3][2] = {{raising ? kB : kG, raising ? 6 : 3},
                          {kR, 6},
                          {raising ? kG : kB, raising ? 3 : 6}};
  std::vector<QpState> visits;
  QpState cur;
  cur.iqp = iqp;
  visits.push_back(cur);
  for (int pass = 0; pass < max_passes; ++pass) {
    for (const auto& leg : legs) {
      for (int s = 0; s < leg[1]; ++s) {
        const int next = iqp + cur.offsets[leg[0]] + unit;
        if (next < 0 || next > 51) break;
        cur.offsets[leg[0]] += unit;
        visits.push_back(cur);
      }
    }
  }
  return visits;
}

}  // namespace

ReplayResult ReplayControlOracle(const CuView& cu, int iqp,
                                 const ControlConfig& cfg,
                                 const TrialReconstruction& recon) {
  const MeanTriple raw = MeanOracle(cu.raw, cu.valid);
  auto delta_e = [&](const QpState& s) {
    return CuDeltaE(raw, MeanOracle(recon(s), cu.valid), cu.bit_depth);
  };
  const double lo = cfg.band.lower();
  const double hi = cfg.band.upper();

  QpState start;
  start.iqp = iqp;
  const double d0 = delta_e(start);
  ReplayResult result;
  result.state = start;
  if (d0 >= lo && d0 <= hi) {
    result.band_reached = true;
    result.visits = {start};
    return result;
  }
  const bool raising = d0 < lo;
  result.visits = EnumerateVisits(iqp, raising, cfg.max_passes);

  std::vector<double> scores;
  for (const QpState& s : result.visits) scores.push_back(delta_e(s));
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (scores[i] >= lo && scores[i] <= hi) {
      result.state = result.visits[i];
      result.band_reached = true;
      return result;
    }
  }
  // Exhaustive fallback scan.
  std::size_t best = 0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (raising && scores[i] < lo && scores[i] >= scores[best]) best = i;
    if (!raising && scores[i] > hi && scores[i] < scores[best]) best = i;
  }
  result.state = result.visits[best];
  return result;
}

}  // namespace pcc::testing
