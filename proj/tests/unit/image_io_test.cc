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

#include <filesystem>
#include <string>
#include <vector>

#include "doctest.h"
#include "pcc/error.h"
#include "support/test_images.h"

namespace pcc {
namespace {

std::vector<uint8_t> Bytes(const std::string& header,
                           std::initializer_list<int> payload) {
  std::vector<uint8_t> out(header.begin(), header.end());
  for (int v : payload) out.push_back(static_cast<uint8_t>(v));
  return out;
}

TEST_CASE("read: interleaved RGB lands in the R, G, B planes") {
  const auto img = DecodePpm(Bytes("P6\n2 1\n255\n", {255, 0, 0, 0, 255, 0}));
  CHECK(img.width() == 2);
  CHECK(img.height() == 1);
  CHECK(img.bit_depth() == 8);
  CHECK(img.at(kR, 0, 0) == 255);
  CHECK(img.at(kR, 1, 0) == 0);
  CHECK(img.at(kG, 0, 0) == 0);
  CHECK(img.at(kG, 1, 0) == 255);
  CHECK(img.at(kB, 0, 0) == 0);
  CHECK(img.at(kB, 1, 0) == 0);
}

TEST_CASE("read: black pixel") {
  const auto img = DecodePpm(Bytes("P6 1 1 255\n", {0, 0, 0}));
  for (int c = 0; c < kNumChannels; ++c) CHECK(img.at(c, 0, 0) == 0);
}

TEST_CASE("read: maxval 65535 carries 10-bit samples") {
  // 1023 = 0x03ff, big-endian.
  const auto img = DecodePpm(
      Bytes("P6\n1 1\n65535\n", {0x03, 0xff, 0x03, 0xff, 0x03, 0xff}));
  CHECK(img.bit_depth() == 10);
  for (int c = 0; c < kNumChannels; ++c) CHECK(img.at(c, 0, 0) == 1023);
}

TEST_CASE("read: header comments are skipped") {
  const auto img =
      DecodePpm(Bytes("P6\n# made by hand\n1 1\n# depth\n255\n", {1, 2, 3}));
  CHECK(img.at(kR, 0, 0) == 1);
  CHECK(img.at(kG, 0, 0) == 2);
  CHECK(img.at(kB, 0, 0) == 3);
}

TEST_CASE("read: malformed headers name the field") {
  auto field_of = [](const std::string& text) {
    try {
      DecodePpm(Bytes(text, {0, 0, 0}));
    } catch (const FormatError& e) {
      return e.field();
    }
    return std::string("none");
  };
  CHECK(field_of("P3\n1 1\n255\n") == "magic");
  CHECK(field_of("P6\nx 1\n255\n") == "width");
  CHECK(field_of("P6\n1 y\n255\n") == "height");
  CHECK(field_of("P6\n1 1\nzz\n") == "maxval");
  CHECK(field_of("P6\n0 1\n255\n") == "width");
  CHECK(field_of("P6\n1 1\n255") == "maxval");
}

TEST_CASE("read: truncated payload is an I/O error") {
  CHECK_THROWS_AS(DecodePpm(Bytes("P6\n2 2\n255\n", {1, 2, 3, 4, 5, 6})),
                  IoError);
  CHECK_THROWS_AS(DecodePpm(Bytes("P6\n1 1\n65535\n", {0, 1, 0, 1, 0})),
                  IoError);
}

TEST_CASE("read: unsupported maxval or 16-bit sample range") {
  CHECK_THROWS_AS(DecodePpm(Bytes("P6\n1 1\n4095\n", {0, 0, 0, 0, 0, 0})),
                  UnsupportedFormatError);
  CHECK_THROWS_AS(DecodePpm(Bytes("P6\n1 1\n1\n", {0, 0, 0})),
                  UnsupportedFormatError);
  CHECK_THROWS_AS(
      DecodePpm(Bytes("P6\n1 1\n65535\n", {0x04, 0x00, 0, 0, 0, 0})),
      UnsupportedFormatError);
}

TEST_CASE("write: 1x1 black image is a 14-byte P6 file") {
  const auto bytes = EncodePpm(ImagePlanar(1, 1, 8));
  CHECK(bytes.size() == 14);
  CHECK(std::string(bytes.begin(), bytes.begin() + 2) == "P6");
}

TEST_CASE("write: 10-bit samples are big-endian 16-bit under maxval 65535") {
  ImagePlanar img(1, 1, 10);
  img.set(kR, 0, 0, 0x0123);
  img.set(kG, 0, 0, 0x0345);
  img.set(kB, 0, 0, 0x03ff);
  const auto bytes = EncodePpm(img);
  const std::string header = "P6\n1 1\n65535\n";
  REQUIRE(bytes.size() == header.size() + 6);
  CHECK(std::string(bytes.begin(), bytes.begin() + header.size()) == header);
  const std::vector<uint8_t> payload(bytes.begin() + header.size(), bytes.end());
  CHECK(payload == std::vector<uint8_t>{0x01, 0x23, 0x03, 0x45, 0x03, 0xff});
}

TEST_CASE("write rejects samples beyond the bit depth") {
  ImagePlanar img(1, 1, 8);
  img.set(kG, 0, 0, 256);
  CHECK_THROWS_AS(EncodePpm(img), DomainError);
}

TEST_CASE("read after write is the identity for both bit depths") {
  for (int depth : {8, 10}) {
    for (uint32_t seed = 1; seed <= 20; ++seed) {
      const int w = 1 + static_cast<int>(seed * 7 % 23);
      const int h = 1 + static_cast<int>(seed * 5 % 17);
      const auto img = testing::RandomImage(w, h, depth, seed);
      CHECK(DecodePpm(EncodePpm(img)) == img);
    }
  }
}

TEST_CASE("file round trip and unwritable path") {
  const std::string dir = testing::MakeTempDir("image_io");
  const auto img = testing::RandomImage(13, 7, 10, 99);
  WritePpm(img, dir + "/x.ppm");
  CHECK(ReadPpm(dir + "/x.ppm") == img);
  CHECK_THROWS_AS(WritePpm(img, dir + "/missing/dir/x.ppm"), IoError);
  CHECK_THROWS_AS(ReadPpm(dir + "/absent.ppm"), IoError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("construction validates size and depth") {
  CHECK_THROWS_AS(ImagePlanar(0, 4, 8), DomainError);
  CHECK_THROWS_AS(ImagePlanar(4, 4, 12), DomainError);
  ImagePlanar img(2, 2, 10);
  CHECK(img.max_value() == 1023);
  img.set(kB, 1, 1, 1024);
  CHECK_THROWS_AS(img.Validate(), DomainError);
}

}  // namespace
}  // namespace pcc
