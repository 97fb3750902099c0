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

#include "cli.h"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "pcc/metrics.h"
#include "support/test_images.h"

namespace pcc::cli {
namespace {

using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Run(std::vector<std::string> args) {
  args.insert(args.begin(), "pcc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

json Json(const Result& r) {
  REQUIRE(!r.out.empty());
  return json::parse(r.out);
}

std::vector<std::string> Fields(const std::string& line) {
  std::vector<std::string> f;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) f.push_back(cell);
  if (!line.empty() && line.back() == ',') f.push_back("");
  return f;
}

TEST_CASE("encode and decode a flat image") {
  const std::string dir = testing::MakeTempDir("cli_flat");
  WritePpm(testing::FlatImage(64, 64, 8, 128, 128, 128), dir + "/in.ppm");
  const Result enc = Run({"encode", "--input", dir + "/in.ppm", "--output",
                          dir + "/s.pcc", "--qp", "22", "--mode", "uniform"});
  CHECK(enc.code == kExitOk);
  CHECK(enc.out.find("\"bpp\"") != std::string::npos);
  const json j = Json(enc);
  CHECK(j["cus"] == 16);
  CHECK(j["bytes"] == std::filesystem::file_size(dir + "/s.pcc"));

  const Result dec = Run({"decode", "--input", dir + "/s.pcc", "--output",
                          dir + "/out.ppm"});
  CHECK(dec.code == kExitOk);
  CHECK(ReadPpm(dir + "/out.ppm").width() == 64);
}

TEST_CASE("usage errors") {
  const std::string dir = testing::MakeTempDir("cli_usage");
  WritePpm(testing::FlatImage(16, 16, 8, 1, 2, 3), dir + "/in.ppm");
  auto enc = [&](std::vector<std::string> extra) {
    std::vector<std::string> args = {"encode", "--input", dir + "/in.ppm",
                                     "--output", dir + "/s.pcc", "--qp", "22"};
    args.insert(args.end(), extra.begin(), extra.end());
    return Run(args).code;
  };
  CHECK(enc({}) == kExitOk);
  CHECK(Run({"encode", "--input", dir + "/in.ppm", "--output",
             dir + "/s.pcc"})
            .code == kExitUsage);
  CHECK(enc({"--qp", "99"}) == kExitUsage);
  CHECK(enc({"--mode", "fast"}) == kExitUsage);
  CHECK(enc({"--cu-size", "12"}) == kExitUsage);
  CHECK(enc({"--epsilon", "0"}) == kExitUsage);
  CHECK(enc({"--max-passes", "-1"}) == kExitUsage);
  CHECK(Run({}).code == kExitUsage);
  CHECK(Run({"frobnicate"}).code == kExitUsage);
  CHECK(Run({"decode", "--input", "x"}).code == kExitUsage);
}

TEST_CASE("I/O and bitstream failures map to exit codes") {
  const std::string dir = testing::MakeTempDir("cli_fail");
  CHECK(Run({"encode", "--input", dir + "/missing.ppm", "--output",
             dir + "/s.pcc", "--qp", "22"})
            .code == kExitIo);

  WritePpm(testing::NoisyColorImage(24, 24, 8, 20, 1), dir + "/in.ppm");
  REQUIRE(Run({"encode", "--input", dir + "/in.ppm", "--output",
               dir + "/s.pcc", "--qp", "22"})
              .code == kExitOk);
  auto bytes = ReadFileBytes(dir + "/s.pcc");
  bytes[0] = 'Q';
  WriteFileBytes(bytes, dir + "/bad.pcc");
  const Result bad = Run({"decode", "--input", dir + "/bad.pcc", "--output",
                          dir + "/out.ppm"});
  CHECK(bad.code == kExitParse);
  CHECK(bad.err.find("byte") != std::string::npos);

  bytes = ReadFileBytes(dir + "/s.pcc");
  bytes.resize(bytes.size() - 1);
  WriteFileBytes(bytes, dir + "/short.pcc");
  CHECK(Run({"decode", "--input", dir + "/short.pcc", "--output",
             dir + "/out.ppm"})
            .code == kExitParse);

  const std::string junk = "P6\n4 4\n300\n";
  WriteFileBytes(std::span(reinterpret_cast<const uint8_t*>(junk.data()),
                           junk.size()),
                 dir + "/junk.ppm");
  CHECK(Run({"encode", "--input", dir + "/junk.ppm", "--output",
             dir + "/j.pcc", "--qp", "22"})
            .code == kExitIo);
}

TEST_CASE("corpus image: PCC rate, decode fidelity, metrics") {
  const std::string dir = testing::MakeTempDir("cli_corpus");
  const std::string src = testing::CorpusFiles().at(0);
  auto encode = [&](const std::string& mode) {
    const Result r = Run({"encode", "--input", src, "--output",
                          dir + "/" + mode + ".pcc", "--qp", "22",
                          "--mode", mode});
    REQUIRE(r.code == kExitOk);
    return Json(r);
  };
  const json pcc = encode("pcc");
  const json uni = encode("uniform");
  CHECK(pcc["bpp"].get<double>() <= uni["bpp"].get<double>());

  REQUIRE(Run({"decode", "--input", dir + "/pcc.pcc", "--output",
               dir + "/pcc.ppm"})
              .code == kExitOk);
  const ImagePlanar image = ReadPpm(src);
  EncoderConfig cfg;
  CHECK(ReadPpm(dir + "/pcc.ppm") == EncodeImage(image, cfg).reconstruction);

  const Result same = Run({"metrics", "--ref", src, "--test", src});
  REQUIRE(same.code == kExitOk);
  const json js = Json(same);
  CHECK(js["ssim"] == 1.0);
  CHECK(js["psnr"]["mean"] == "lossless");

  const Result m = Run({"metrics", "--ref", src, "--test", dir + "/pcc.ppm",
                        "--stream", dir + "/pcc.pcc"});
  REQUIRE(m.code == kExitOk);
  const json jm = Json(m);
  CHECK(jm["bpp"].get<double>() == pcc["bpp"].get<double>());
  CHECK(jm["ssim"].get<double>() < 1.0);
  CHECK(jm["ms_ssim"].is_number());
}

TEST_CASE("report over a small corpus") {
  const std::string dir = testing::MakeTempDir("cli_report");
  const auto files = testing::CorpusFiles();
  REQUIRE(files.size() >= 3);
  for (int i = 0; i < 3; ++i) {
    std::filesystem::copy_file(
        files[i], dir + "/" + std::filesystem::path(files[i]).filename().string(),
        std::filesystem::copy_options::overwrite_existing);
  }
  const Result r = Run({"report", "--corpus", dir, "--qp", "22,34"});
  REQUIRE(r.code == kExitOk);
  std::stringstream csv(r.out);
  std::string line;
  std::getline(csv, line);
  CHECK(line == kReportColumns);
  std::vector<std::vector<std::string>> rows;
  while (std::getline(csv, line)) rows.push_back(Fields(line));
  REQUIRE(rows.size() == 12);
  for (const auto& row : rows) CHECK(row.size() == 11);

  // First row: first image, iqp 22, pcc. Recompute through the subcommands.
  CHECK(rows[0][1] == "pcc");
  CHECK(rows[0][2] == "22");
  CHECK(rows[1][1] == "uniform");
  const std::string src = files[0];
  REQUIRE(Run({"encode", "--input", src, "--output", dir + "/a.pcc", "--qp",
               "22"})
              .code == kExitOk);
  REQUIRE(Run({"decode", "--input", dir + "/a.pcc", "--output",
               dir + "/a.out"})
              .code == kExitOk);
  const json m = Json(Run({"metrics", "--ref", src, "--test", dir + "/a.out",
                           "--stream", dir + "/a.pcc"}));
  CHECK(std::abs(std::stod(rows[0][3]) - m["bpp"].get<double>()) < 1e-6);
  CHECK(std::abs(std::stod(rows[0][4]) - m["ssim"].get<double>()) < 1e-6);
  CHECK(std::abs(std::stod(rows[0][5]) - m["ms_ssim"].get<double>()) < 1e-6);
  CHECK(std::abs(std::stod(rows[0][6]) - m["psnr"]["mean"].get<double>()) <
        1e-6);

  const Result to_file =
      Run({"report", "--corpus", dir, "--qp", "30", "--output", dir + "/r.csv"});
  CHECK(to_file.code == kExitOk);
  CHECK(Json(to_file)["rows"] == 6);
  CHECK(Run({"report", "--corpus", dir + "/nope", "--qp", "30"}).code ==
        kExitIo);
}

TEST_CASE("PCC_THREADS overrides the thread option") {
  const std::string dir = testing::MakeTempDir("cli_threads");
  WritePpm(testing::NoisyColorImage(64, 48, 8, 30, 3), dir + "/in.ppm");
  REQUIRE(Run({"encode", "--input", dir + "/in.ppm", "--output",
               dir + "/one.pcc", "--qp", "22", "--threads", "1"})
              .code == kExitOk);
  ::setenv("PCC_THREADS", "4", 1);
  const int code = Run({"encode", "--input", dir + "/in.ppm", "--output",
                        dir + "/four.pcc", "--qp", "22", "--threads", "1"})
                       .code;
  ::setenv("PCC_THREADS", "many", 1);
  const int bad = Run({"encode", "--input", dir + "/in.ppm", "--output",
                       dir + "/x.pcc", "--qp", "22"})
                      .code;
  ::unsetenv("PCC_THREADS");
  CHECK(code == kExitOk);
  CHECK(ReadFileBytes(dir + "/four.pcc") == ReadFileBytes(dir + "/one.pcc"));
  CHECK(bad == kExitUsage);
}

}  // namespace
}  // namespace pcc::cli
