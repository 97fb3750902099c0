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

#ifndef PCC_JNCD_CONTROL_H_
#define PCC_JNCD_CONTROL_H_

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "pcc/colorimetry.h"
#include "pcc/image_io.h"
#include "pcc/quant.h"

namespace pcc {

// Co-located N x N blocks for G, B and R, each row-major.
struct BlockTriple {
  int size = 0;
  std::array<std::vector<uint16_t>, kNumChannels> planes;

  BlockTriple() = default;
  explicit BlockTriple(int n) : size(n) {
    for (auto& p : planes) p.assign(static_cast<std::size_t>(n) * n, 0);
  }
};

// The top-left region of a block that holds real image samples. Anything to
// the right or below is edge-replicated padding.
struct ValidExtent {
  int width = 0;
  int height = 0;
};

// One coding unit of the source image.
struct CuView {
  int x = 0;  // origin in pixels
  int y = 0;
  int size = 0;
  int bit_depth = 8;
  ValidExtent valid;
  BlockTriple raw;
};

// Rounded per-channel block means, indexed by Channel.
struct MeanTriple {
  std::array<int, kNumChannels> v{};

  int g() const { return v[kG]; }
  int b() const { return v[kB]; }
  int r() const { return v[kR]; }

  friend bool operator==(const MeanTriple&, const MeanTriple&) = default;
};

// Mean of the valid region of each block, rounded half-up. Throws
// DomainError for an empty or oversized extent.
MeanTriple CuMeans(const BlockTriple& blocks, ValidExtent valid);

// CIELAB distance between two mean colors.
double CuDeltaE(const MeanTriple& raw, const MeanTriple& recon, int bit_depth);

// One leg of a search pass: which channel moves and by how many unit steps.
struct ChannelBudget {
  Channel channel;
  int steps;
};

// Raising QPs touches the least visible channel first; lowering them
// restores the most visible channel first.
inline constexpr std::array<ChannelBudget, 3> kIncrementSchedule = {
    {{kB, 6}, {kR, 6}, {kG, 3}}};
inline constexpr std::array<ChannelBudget, 3> kDecrementSchedule = {
    {{kG, 3}, {kR, 6}, {kB, 6}}};

struct ControlConfig {
  JncdBand band;
  int max_passes = 4;  // 0 disables the search
};

enum class SearchDirection { kNone, kIncrement, kDecrement };

// A state visited by the search. channel is -1 for the initial evaluation.
struct ControlStep {
  QpState state;
  double delta_e = 0.0;
  JncdClass cls = JncdClass::kBelow;
  int pass = 0;
  int channel = -1;
};

struct PccOutcome {
  QpState state;
  double delta_e = 0.0;  // at `state`
  double initial_delta_e = 0.0;
  SearchDirection direction = SearchDirection::kNone;
  bool band_reached = false;
  int trials = 0;  // reconstructions performed, including the initial one
};

// Produces the reconstructed blocks of the CU for a candidate QP state. Must
// be deterministic and reentrant.
using TrialReconstruction = std::function<BlockTriple(const QpState&)>;
using StepObserver = std::function<void(const ControlStep&)>;

// Upper bound on reconstructions per CU for a given pass limit.
int MaxTrials(int max_passes);

// Searches per-channel QP offsets around `iqp` until the CU-mean color
// difference lands in the JNCD band.
//
// Starting below the band, QPs are raised one unit at a time following
// kIncrementSchedule; starting above, they are lowered following
// kDecrementSchedule. Each pass spends every channel's budget in schedule
// order, and the color difference is re-measured after every unit step. The
// first state inside the band is returned. A channel whose QP would leave
// [0, 51] forfeits the rest of its budget for that pass.
//
// If the band is never reached, the result is the visited state closest to
// the threshold from the starting side: the largest difference not above
// the band when raising (latest visit wins ties), the smallest difference
// not below the band when lowering (earliest visit wins ties).
PccOutcome PccAdjust(const CuView& cu, int iqp, const ControlConfig& cfg,
                     const TrialReconstruction& recon,
                     const StepObserver& observer = {});

}  // namespace pcc

#endif  // PCC_JNCD_CONTROL_H_
