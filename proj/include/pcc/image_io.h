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

#ifndef PCC_IMAGE_IO_H_
#define PCC_IMAGE_IO_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pcc {

// Internal plane order. G first because it carries most of the perceived
// brightness; the control loop schedules channels in this index space.
enum Channel : int { kG = 0, kB = 1, kR = 2 };
inline constexpr int kNumChannels = 3;

// Planar RGB 4:4:4 raster, 8 or 10 bits per sample.
class ImagePlanar {
 public:
  ImagePlanar() = default;
  // Zero-filled image. Throws DomainError on empty size or bit depth other
  // than 8/10.
  ImagePlanar(int width, int height, int bit_depth);

  int width() const { return width_; }
  int height() const { return height_; }
  int bit_depth() const { return bit_depth_; }
  int max_value() const { return (1 << bit_depth_) - 1; }
  std::size_t num_pixels() const {
    return static_cast<std::size_t>(width_) * height_;
  }

  std::span<uint16_t> plane(int c) { return planes_[c]; }
  std::span<const uint16_t> plane(int c) const { return planes_[c]; }

  uint16_t at(int c, int x, int y) const {
    return planes_[c][static_cast<std::size_t>(y) * width_ + x];
  }
  // Unchecked against max_value(); use Validate() after bulk writes.
  void set(int c, int x, int y, uint16_t v) {
    planes_[c][static_cast<std::size_t>(y) * width_ + x] = v;
  }

  // Throws DomainError if any sample exceeds max_value().
  void Validate() const;

  friend bool operator==(const ImagePlanar&, const ImagePlanar&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  int bit_depth_ = 8;
  std::array<std::vector<uint16_t>, kNumChannels> planes_;
};

// Binary PPM (P6). maxval 255 maps to 8-bit, maxval 65535 to 10-bit with
// every sample required to be <= 1023. 16-bit samples are big-endian.
ImagePlanar DecodePpm(std::span<const uint8_t> bytes);
std::vector<uint8_t> EncodePpm(const ImagePlanar& image);

ImagePlanar ReadPpm(const std::string& path);
void WritePpm(const ImagePlanar& image, const std::string& path);

// Whole-file helpers shared by the container and CLI code.
std::vector<uint8_t> ReadFileBytes(const std::string& path);
void WriteFileBytes(std::span<const uint8_t> bytes, const std::string& path);

}  // namespace pcc

#endif  // PCC_IMAGE_IO_H_
