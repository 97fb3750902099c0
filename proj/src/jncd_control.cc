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

#include "pcc/jncd_control.h"

#include <cassert>
#include <span>
#include <string>

#include "pcc/error.h"

namespace pcc {

MeanTriple CuMeans(const BlockTriple& blocks, ValidExtent valid) {
  if (valid.width <= 0 || valid.height <= 0) {
    throw DomainError("CU mean over an empty region");
  }
  if (valid.width > blocks.size || valid.height > blocks.size) {
    throw DomainError("valid extent exceeds block size");
  }
  const uint64_t count = static_cast<uint64_t>(valid.width) * valid.height;
  MeanTriple out;
  for (int c = 0; c < kNumChannels; ++c) {
    uint64_t sum = 0;
    for (int y = 0; y < valid.height; ++y) {
      for (int x = 0; x < valid.width; ++x) {
        sum += blocks.planes[c][static_cast<std::size_t>(y) * blocks.size + x];
      }
    }
    // floor(sum / count + 1/2) in integers
    out.v[c] = static_cast<int>((2 * sum + count) / (2 * count));
  }
  return out;
}

double CuDeltaE(const MeanTriple& raw, const MeanTriple& recon,
                int bit_depth) {
  return DeltaEab(RgbToLab(raw.r(), raw.g(), raw.b(), bit_depth),
                  RgbToLab(recon.r(), recon.g(), recon.b(), bit_depth));
}

int MaxTrials(int max_passes) {
  int per_pass = 0;
  for (const auto& leg : kIncrementSchedule) per_pass += leg.steps;
  return 1 + max_passes * per_pass;
}

PccOutcome PccAdjust(const CuView& cu, int iqp, const ControlConfig& cfg,
                     const TrialReconstruction& recon,
                     const StepObserver& observer) {
  if (iqp < kMinQp || iqp > kMaxQp) {
    throw DomainError("initial QP " + std::to_string(iqp) + " out of range");
  }
  if (cfg.max_passes < 0) throw DomainError("max_passes must be >= 0");

  const MeanTriple raw_means = CuMeans(cu.raw, cu.valid);
  PccOutcome out;
  out.state.iqp = iqp;

  auto evaluate = [&](const QpState& s, int pass, int channel) {
    const BlockTriple rec = recon(s);
    if (rec.size != cu.size) {
      throw DomainError("trial reconstruction returned the wrong block size");
    }
    const double de =
        CuDeltaE(raw_means, CuMeans(rec, cu.valid), cu.bit_depth);
    ++out.trials;
    const JncdClass cls = ClassifyJncd(de, cfg.band);
    if (observer) observer({s, de, cls, pass, channel});
    return std::pair{de, cls};
  };

  const auto [de0, cls0] = evaluate(out.state, 0, -1);
  out.delta_e = out.initial_delta_e = de0;
  if (cls0 == JncdClass::kWithin) {
    out.band_reached = true;
    return out;
  }

  const bool raising = cls0 == JncdClass::kBelow;
  out.direction =
      raising ? SearchDirection::kIncrement : SearchDirection::kDecrement;
  const std::span<const ChannelBudget> schedule =
      raising ? std::span<const ChannelBudget>(kIncrementSchedule)
              : std::span<const ChannelBudget>(kDecrementSchedule);
  const int unit = raising ? 1 : -1;

  QpState current = out.state;
  for (int pass = 0; pass < cfg.max_passes; ++pass) {
    bool moved = false;
    for (const ChannelBudget& leg : schedule) {
      for (int step = 0; step < leg.steps; ++step) {
        QpState next = current;
        next.offsets[leg.channel] += unit;
        if (next.clamped(leg.channel)) break;
        current = next;
        moved = true;
        const auto [de, cls] = evaluate(current, pass, leg.channel);
        assert(out.trials <= MaxTrials(cfg.max_passes));
        if (cls == JncdClass::kWithin) {
          out.state = current;
          out.delta_e = de;
          out.band_reached = true;
          return out;
        }
        // Fallback candidate on the starting side of the band.
        if (raising && cls == JncdClass::kBelow && de >= out.delta_e) {
          out.state = current;
          out.delta_e = de;
        } else if (!raising && cls == JncdClass::kAbove && de < out.delta_e) {
          out.state = current;
          out.delta_e = de;
        }
      }
    }
    if (!moved) break;  // every channel is pinned at the QP limit
  }
  return out;
}

}  // namespace pcc
