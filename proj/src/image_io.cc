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

#include "pcc/image_io.h"

#include <cctype>
#include <fstream>
#include <iterator>
#include <limits>

#include "pcc/error.h"

namespace pcc {

ImagePlanar::ImagePlanar(int width, int height, int bit_depth)
    : width_(width), height_(height), bit_depth_(bit_depth) {
  if (width <= 0 || height <= 0) {
    throw DomainError("image dimensions must be positive");
  }
  if (bit_depth != 8 && bit_depth != 10) {
    throw DomainError("bit depth must be 8 or 10, got " +
                      std::to_string(bit_depth));
  }
  for (auto& p : planes_) p.assign(num_pixels(), 0);
}

void ImagePlanar::Validate() const {
  const int maxv = max_value();
  for (const auto& p : planes_) {
    for (uint16_t v : p) {
      if (v > maxv) {
        throw DomainError("sample " + std::to_string(v) +
                          " exceeds bit depth range");
      }
    }
  }
}

namespace {

class HeaderScanner {
 public:
  explicit HeaderScanner(std::span<const uint8_t> bytes) : bytes_(bytes) {}

  void SkipWhitespaceAndComments() {
    while (pos_ < bytes_.size()) {
      if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else if (std::isspace(bytes_[pos_])) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  unsigned long ReadNumber(const char* field) {
    SkipWhitespaceAndComments();
    if (pos_ >= bytes_.size() || !std::isdigit(bytes_[pos_])) {
      throw FormatError(field, std::string("PPM header: expected ") + field);
    }
    unsigned long v = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      v = v * 10 + (bytes_[pos_] - '0');
      if (v > std::numeric_limits<uint32_t>::max()) {
        throw FormatError(field, std::string("PPM header: ") + field +
                                     " out of range");
      }
      ++pos_;
    }
    return v;
  }

  std::size_t pos() const { return pos_; }
  void Advance(std::size_t n) { pos_ += n; }

 private:
  std::span<const uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

ImagePlanar DecodePpm(std::span<const uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '6') {
    throw FormatError("magic", "PPM header: expected magic \"P6\"");
  }
  HeaderScanner scan(bytes);
  scan.Advance(2);
  if (scan.pos() >= bytes.size() || !std::isspace(bytes[scan.pos()])) {
    throw FormatError("magic", "PPM header: missing whitespace after magic");
  }
  const unsigned long width = scan.ReadNumber("width");
  const unsigned long height = scan.ReadNumber("height");
  const unsigned long maxval = scan.ReadNumber("maxval");
  if (width == 0) throw FormatError("width", "PPM header: zero width");
  if (height == 0) throw FormatError("height", "PPM header: zero height");
  if (maxval != 255 && maxval != 65535) {
    throw UnsupportedFormatError("PPM maxval " + std::to_string(maxval) +
                                 " unsupported (expected 255 or 65535)");
  }
  if (scan.pos() >= bytes.size() || !std::isspace(bytes[scan.pos()])) {
    throw FormatError("maxval", "PPM header: missing whitespace after maxval");
  }
  scan.Advance(1);

  const std::size_t bytes_per_sample = maxval == 255 ? 1 : 2;
  const unsigned long long needed = static_cast<unsigned long long>(width) *
                                    height * 3 * bytes_per_sample;
  const std::size_t available = bytes.size() - scan.pos();
  if (needed > available) {
    throw IoError("PPM payload truncated: need " + std::to_string(needed) +
                  " bytes, have " + std::to_string(available));
  }

  ImagePlanar image(static_cast<int>(width), static_cast<int>(height),
                    maxval == 255 ? 8 : 10);
  // File order is R, G, B.
  constexpr int kFileToPlane[3] = {kR, kG, kB};
  const uint8_t* p = bytes.data() + scan.pos();
  for (std::size_t i = 0; i < image.num_pixels(); ++i) {
    for (int k = 0; k < 3; ++k) {
      uint16_t v;
      if (bytes_per_sample == 1) {
        v = *p++;
      } else {
        v = static_cast<uint16_t>((p[0] << 8) | p[1]);
        p += 2;
        if (v > 1023) {
          throw UnsupportedFormatError(
              "16-bit PPM sample " + std::to_string(v) +
              " exceeds the 10-bit range");
        }
      }
      image.plane(kFileToPlane[k])[i] = v;
    }
  }
  return image;
}

std::vector<uint8_t> EncodePpm(const ImagePlanar& image) {
  image.Validate();
  const bool wide = image.bit_depth() > 8;
  const std::string header = "P6\n" + std::to_string(image.width()) + " " +
                             std::to_string(image.height()) + "\n" +
                             (wide ? "65535" : "255") + "\n";
  std::vector<uint8_t> out(header.begin(), header.end());
  out.reserve(out.size() + image.num_pixels() * 3 * (wide ? 2 : 1));
  for (std::size_t i = 0; i < image.num_pixels(); ++i) {
    for (int c : {kR, kG, kB}) {
      const uint16_t v = image.plane(c)[i];
      if (wide) out.push_back(static_cast<uint8_t>(v >> 8));
      out.push_back(static_cast<uint8_t>(v & 0xff));
    }
  }
  return out;
}

std::vector<uint8_t> ReadFileBytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failed: " + path);
  return bytes;
}

void WriteFileBytes(std::span<const uint8_t> bytes, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed: " + path);
}

ImagePlanar ReadPpm(const std::string& path) {
  return DecodePpm(ReadFileBytes(path));
}

void WritePpm(const ImagePlanar& image, const std::string& path) {
  WriteFileBytes(EncodePpm(image), path);
}

}  // namespace pcc
