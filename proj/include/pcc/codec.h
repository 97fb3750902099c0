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

#ifndef PCC_CODEC_H_
#define PCC_CODEC_H_

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "pcc/bitstream.h"
#include "pcc/image_io.h"
#include "pcc/jncd_control.h"
#include "pcc/quant.h"
#include "pcc/transform.h"

namespace pcc {

struct EncoderConfig {
  int iqp = 22;
  int cu_size = 16;
  StreamMode mode = StreamMode::kPcc;
  ControlConfig control;
  int threads = 1;  // 0 selects the hardware thread count
  // Keep every state visited by the QP search in CuStats::trace.
  bool record_trace = false;

  // Throws DomainError on out-of-range fields.
  void Validate() const;
};

struct CuStats {
  QpState state;
  bool band_reached = false;
  SearchDirection direction = SearchDirection::kNone;
  double initial_delta_e = 0.0;
  double delta_e = 0.0;
  int trials = 0;
  std::vector<ControlStep> trace;
};

struct EncodeResult {
  PccBitstream stream;
  // Encoder-side reconstruction; the decoder reproduces it exactly.
  ImagePlanar reconstruction;
  std::vector<CuStats> cu_stats;  // raster order
};

EncodeResult EncodeImage(const ImagePlanar& image, const EncoderConfig& cfg);

ImagePlanar DecodeImage(const PccBitstream& stream);
ImagePlanar DecodeImage(std::span<const uint8_t> bytes);

// Mean QP offsets and the share of CUs whose search ended inside the band.
struct OffsetSummary {
  std::array<double, kNumChannels> mean_offsets{};
  double band_hit_rate = 0.0;
};
OffsetSummary Summarize(const std::vector<CuStats>& stats);

// Copies the CU at (x, y) out of the image. Samples past the right or bottom
// edge replicate the last valid column / row.
CuView ExtractCu(const ImagePlanar& image, int x, int y, int size);

// Decoder-side reconstruction of one coding block: dequantize, inverse
// transform, re-add the mid-level offset, round and clamp.
std::vector<uint16_t> ReconstructBlock(const LevelBlock& levels, double qstep,
                                       int bit_depth);

// Transform-domain view of one CU that quantizes and reconstructs each
// channel at any QP, memoizing the results. This is the trial
// reconstruction used by the QP search and the final coding path.
class CuCoder {
 public:
  explicit CuCoder(const CuView& cu);

  const LevelBlock& Levels(int channel, int qp);
  const std::vector<uint16_t>& Recon(int channel, int qp);
  BlockTriple Reconstruct(const QpState& state);

 private:
  struct Entry {
    bool ready = false;
    LevelBlock levels;
    std::vector<uint16_t> recon;
  };
  Entry& Get(int channel, int qp);

  int bit_depth_;
  std::array<CoeffBlock, kNumChannels> coeffs_;
  std::array<std::array<Entry, kMaxQp + 1>, kNumChannels> cache_;
};

}  // namespace pcc

#endif  // PCC_CODEC_H_
