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

#include "pcc/codec.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <string>
#include <thread>

#include "pcc/error.h"

namespace pcc {

void EncoderConfig::Validate() const {
  if (iqp < kMinQp || iqp > kMaxQp) {
    throw DomainError("iqp " + std::to_string(iqp) + " outside [0, 51]");
  }
  if (cu_size != 8 && cu_size != 16 && cu_size != 32 && cu_size != 64) {
    throw DomainError("cu_size must be 8, 16, 32 or 64");
  }
  if (mode != StreamMode::kUniform && mode != StreamMode::kPcc) {
    throw DomainError("unknown coding mode");
  }
  if (control.max_passes < 0) throw DomainError("max_passes must be >= 0");
  if (threads < 0) throw DomainError("threads must be >= 0");
}

CuView ExtractCu(const ImagePlanar& image, int x, int y, int size) {
  CuView cu;
  cu.x = x;
  cu.y = y;
  cu.size = size;
  cu.bit_depth = image.bit_depth();
  cu.valid = {std::min(size, image.width() - x),
              std::min(size, image.height() - y)};
  if (cu.valid.width <= 0 || cu.valid.height <= 0) {
    throw DomainError("CU origin outside the image");
  }
  cu.raw = BlockTriple(size);
  for (int c = 0; c < kNumChannels; ++c) {
    for (int j = 0; j < size; ++j) {
      const int sy = y + std::min(j, cu.valid.height - 1);
      for (int i = 0; i < size; ++i) {
        const int sx = x + std::min(i, cu.valid.width - 1);
        cu.raw.planes[c][j * size + i] = image.at(c, sx, sy);
      }
    }
  }
  return cu;
}

std::vector<uint16_t> ReconstructBlock(const LevelBlock& levels, double qstep,
                                       int bit_depth) {
  const std::vector<double> spatial =
      InverseDct2d(DequantizeBlock(levels, qstep));
  const double center = 1 << (bit_depth - 1);
  const double maxv = (1 << bit_depth) - 1;
  std::vector<uint16_t> out(spatial.size());
  for (std::size_t i = 0; i < spatial.size(); ++i) {
    const double v = std::floor(spatial[i] + center + 0.5);
    out[i] = static_cast<uint16_t>(std::clamp(v, 0.0, maxv));
  }
  return out;
}

CuCoder::CuCoder(const CuView& cu) : bit_depth_(cu.bit_depth) {
  const double center = 1 << (cu.bit_depth - 1);
  std::vector<double> centered(cu.raw.planes[0].size());
  for (int c = 0; c < kNumChannels; ++c) {
    for (std::size_t i = 0; i < centered.size(); ++i) {
      centered[i] = cu.raw.planes[c][i] - center;
    }
    coeffs_[c] = ForwardDct2d(centered, cu.size);
  }
}

CuCoder::Entry& CuCoder::Get(int channel, int qp) {
  Entry& e = cache_[channel][qp];
  if (!e.ready) {
    const double qstep = QstepFromQp(qp);
    e.levels = QuantizeBlock(coeffs_[channel], qstep);
    e.recon = ReconstructBlock(e.levels, qstep, bit_depth_);
    e.ready = true;
  }
  return e;
}

const LevelBlock& CuCoder::Levels(int channel, int qp) {
  return Get(channel, qp).levels;
}

const std::vector<uint16_t>& CuCoder::Recon(int channel, int qp) {
  return Get(channel, qp).recon;
}

BlockTriple CuCoder::Reconstruct(const QpState& state) {
  BlockTriple out;
  out.size = coeffs_[0].size;
  for (int c = 0; c < kNumChannels; ++c) out.planes[c] = Recon(c, state.qp(c));
  return out;
}

namespace {

void StoreBlock(ImagePlanar& image, int channel, const CuView& cu,
                const std::vector<uint16_t>& block) {
  for (int j = 0; j < cu.valid.height; ++j) {
    for (int i = 0; i < cu.valid.width; ++i) {
      image.set(channel, cu.x + i, cu.y + j, block[j * cu.size + i]);
    }
  }
}

int ResolveThreads(int requested) {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs fn(i) for i in [0, count) on `threads` workers. Each index is handled
// by exactly one worker; the first exception is rethrown.
template <typename Fn>
void ParallelFor(std::size_t count, int threads, Fn fn) {
  const int workers =
      static_cast<int>(std::min<std::size_t>(count, std::max(1, threads)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = next++; i < count; i = next++) fn(i);
        } catch (...) {
          errors[w] = std::current_exception();
          next = count;
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

EncodeResult EncodeImage(const ImagePlanar& image, const EncoderConfig& cfg) {
  cfg.Validate();
  image.Validate();

  EncodeResult result;
  StreamHeader& h = result.stream.header;
  h.width = static_cast<uint32_t>(image.width());
  h.height = static_cast<uint32_t>(image.height());
  h.bit_depth = static_cast<uint8_t>(image.bit_depth());
  h.cu_size = static_cast<uint8_t>(cfg.cu_size);
  h.iqp = static_cast<uint8_t>(cfg.iqp);
  h.mode = cfg.mode;

  const std::size_t cols = h.cu_cols();
  const std::size_t count = h.cu_count();
  result.stream.cus.resize(count);
  result.cu_stats.resize(count);
  result.reconstruction =
      ImagePlanar(image.width(), image.height(), image.bit_depth());

  ParallelFor(count, ResolveThreads(cfg.threads), [&](std::size_t idx) {
    const CuView cu =
        ExtractCu(image, static_cast<int>(idx % cols) * cfg.cu_size,
                  static_cast<int>(idx / cols) * cfg.cu_size, cfg.cu_size);
    CuCoder coder(cu);
    CuStats& stats = result.cu_stats[idx];
    stats.state.iqp = cfg.iqp;

    if (cfg.mode == StreamMode::kPcc) {
      StepObserver observer;
      if (cfg.record_trace) {
        observer = [&stats](const ControlStep& s) { stats.trace.push_back(s); };
      }
      const PccOutcome outcome = PccAdjust(
          cu, cfg.iqp, cfg.control,
          [&coder](const QpState& s) { return coder.Reconstruct(s); },
          observer);
      stats.state = outcome.state;
      stats.band_reached = outcome.band_reached;
      stats.direction = outcome.direction;
      stats.initial_delta_e = outcome.initial_delta_e;
      stats.delta_e = outcome.delta_e;
      stats.trials = outcome.trials;
    }

    CuRecord& record = result.stream.cus[idx];
    record.offsets = stats.state.offsets;
    for (int c = 0; c < kNumChannels; ++c) {
      const int qp = stats.state.qp(c);
      record.blocks[c] = coder.Levels(c, qp);
      StoreBlock(result.reconstruction, c, cu, coder.Recon(c, qp));
    }
  });
  return result;
}

ImagePlanar DecodeImage(const PccBitstream& stream) {
  const StreamHeader& h = stream.header;
  if (stream.cus.size() != h.cu_count()) {
    throw DomainError("CU count does not match the image grid");
  }
  ImagePlanar image(static_cast<int>(h.width), static_cast<int>(h.height),
                    h.bit_depth);
  const std::size_t cols = h.cu_cols();
  for (std::size_t idx = 0; idx < stream.cus.size(); ++idx) {
    const CuRecord& record = stream.cus[idx];
    CuView cu;
    cu.x = static_cast<int>(idx % cols) * h.cu_size;
    cu.y = static_cast<int>(idx / cols) * h.cu_size;
    cu.size = h.cu_size;
    cu.valid = {std::min<int>(h.cu_size, static_cast<int>(h.width) - cu.x),
                std::min<int>(h.cu_size, static_cast<int>(h.height) - cu.y)};
    QpState state{h.iqp, record.offsets};
    for (int c = 0; c < kNumChannels; ++c) {
      if (state.clamped(c)) throw DomainError("QP offset leaves [0, 51]");
      if (record.blocks[c].size != h.cu_size) {
        throw DomainError("coding block size does not match the header");
      }
      StoreBlock(image, c, cu,
                 ReconstructBlock(record.blocks[c], state.qstep(c),
                                  h.bit_depth));
    }
  }
  return image;
}

ImagePlanar DecodeImage(std::span<const uint8_t> bytes) {
  return DecodeImage(ReadStream(bytes));
}

OffsetSummary Summarize(const std::vector<CuStats>& stats) {
  OffsetSummary s;
  if (stats.empty()) return s;
  std::size_t hits = 0;
  for (const CuStats& cu : stats) {
    for (int c = 0; c < kNumChannels; ++c) s.mean_offsets[c] += cu.state.offsets[c];
    if (cu.band_reached) ++hits;
  }
  for (double& m : s.mean_offsets) m /= static_cast<double>(stats.size());
  s.band_hit_rate = static_cast<double>(hits) / static_cast<double>(stats.size());
  return s;
}

}  // namespace pcc
