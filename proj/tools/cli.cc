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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "pcc/bitstream.h"
#include "pcc/error.h"
#include "pcc/image_io.h"
#include "pcc/metrics.h"

namespace pcc::cli {
namespace {

using nlohmann::json;

const char* ModeName(StreamMode m) {
  return m == StreamMode::kPcc ? "pcc" : "uniform";
}

// JSON has no infinity; a lossless PSNR is reported as the string "lossless".
json DbValue(double db) {
  if (std::isinf(db)) return "lossless";
  return db;
}

std::string Fixed(double v) {
  if (std::isnan(v)) return "";
  if (std::isinf(v)) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

struct CodingOptions {
  int qp = 22;
  std::string mode = "pcc";
  int cu_size = 16;
  double epsilon = 0.1;
  int max_passes = 4;
  int threads = 0;

  void Register(CLI::App* cmd, bool with_mode) {
    if (with_mode) {
      cmd->add_option("--mode", mode, "pcc or uniform")
          ->check(CLI::IsMember({"pcc", "uniform"}))
          ->capture_default_str();
    }
    cmd->add_option("--cu-size", cu_size, "coding unit size")
        ->check(CLI::IsMember({8, 16, 32, 64}))
        ->capture_default_str();
    cmd->add_option("--epsilon", epsilon, "half-width of the JNCD band")
        ->check(CLI::Range(std::numeric_limits<double>::min(), 0.999999))
        ->capture_default_str();
    cmd->add_option("--max-passes", max_passes, "QP search pass limit")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    cmd->add_option("--threads", threads,
                    "encoder worker threads (0 = all cores; PCC_THREADS "
                    "overrides)")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
  }

  EncoderConfig ToConfig() const {
    EncoderConfig cfg;
    cfg.iqp = qp;
    cfg.mode = mode == "uniform" ? StreamMode::kUniform : StreamMode::kPcc;
    cfg.cu_size = cu_size;
    cfg.control.band = JncdBand(epsilon);
    cfg.control.max_passes = max_passes;
    cfg.threads = threads;
    if (const char* env = std::getenv("PCC_THREADS")) {
      try {
        const int n = std::stoi(env);
        if (n < 0) throw std::invalid_argument("negative");
        cfg.threads = n;
      } catch (const std::exception&) {
        throw DomainError(std::string("PCC_THREADS must be a non-negative "
                                      "integer, got \"") + env + "\"");
      }
    }
    cfg.Validate();
    return cfg;
  }
};

int CmdEncode(const std::string& input, const std::string& output,
              const CodingOptions& opts, std::ostream& out,
              std::ostream& err) {
  const EncoderConfig cfg = opts.ToConfig();
  const ImagePlanar image = ReadPpm(input);
  const EncodeResult result = EncodeImage(image, cfg);
  const std::vector<uint8_t> bytes = WriteStream(result.stream);
  WriteFileBytes(bytes, output);

  const OffsetSummary summary = Summarize(result.cu_stats);
  const double bpp = Bpp(bytes, image);
  json j = {
      {"input", input},
      {"output", output},
      {"width", image.width()},
      {"height", image.height()},
      {"bit_depth", image.bit_depth()},
      {"mode", ModeName(cfg.mode)},
      {"iqp", cfg.iqp},
      {"cu_size", cfg.cu_size},
      {"cus", result.cu_stats.size()},
      {"bytes", bytes.size()},
      {"bpp", bpp},
      {"mean_offsets",
       {{"g", summary.mean_offsets[kG]},
        {"b", summary.mean_offsets[kB]},
        {"r", summary.mean_offsets[kR]}}},
      {"band_hit_rate", summary.band_hit_rate},
  };
  out << j.dump() << "\n";
  err << "encoded " << input << " (" << image.width() << "x"
      << image.height() << ", " << ModeName(cfg.mode) << ", iqp "
      << cfg.iqp << "): " << bytes.size() << " bytes, " << bpp << " bpp\n";
  return kExitOk;
}

int CmdDecode(const std::string& input, const std::string& output,
              std::ostream& out, std::ostream& err) {
  const PccBitstream stream = ReadStream(ReadFileBytes(input));
  const ImagePlanar image = DecodeImage(stream);
  WritePpm(image, output);
  json j = {{"input", input},
            {"output", output},
            {"width", image.width()},
            {"height", image.height()},
            {"bit_depth", image.bit_depth()},
            {"mode", ModeName(stream.header.mode)},
            {"iqp", stream.header.iqp}};
  out << j.dump() << "\n";
  err << "decoded " << input << " -> " << output << "\n";
  return kExitOk;
}

int CmdMetrics(const std::string& ref_path, const std::string& test_path,
               const std::string& stream_path, std::ostream& out,
               std::ostream& err) {
  const ImagePlanar ref = ReadPpm(ref_path);
  const ImagePlanar test = ReadPpm(test_path);
  const double ssim = Ssim(ref, test);
  const PsnrReport psnr = Psnr(ref, test);
  json j = {{"ref", ref_path}, {"test", test_path}, {"ssim", ssim}};
  if (std::min(ref.width(), ref.height()) >= kMsSsimMinSide) {
    j["ms_ssim"] = MsSsim(ref, test);
  } else {
    j["ms_ssim"] = nullptr;
  }
  j["psnr"] = {{"g", DbValue(psnr.channel[kG])},
               {"b", DbValue(psnr.channel[kB])},
               {"r", DbValue(psnr.channel[kR])},
               {"mean", DbValue(psnr.mean)}};
  if (!stream_path.empty()) {
    j["bpp"] = Bpp(ReadFileBytes(stream_path), ref);
  }
  out << j.dump() << "\n";
  err << "ssim " << ssim << ", psnr "
      << (psnr.lossless() ? std::string("lossless")
                          : std::to_string(psnr.mean) + " dB")
      << "\n";
  return kExitOk;
}

int CmdReport(const std::string& dir, const std::vector<int>& qps,
              const std::string& output, const CodingOptions& opts,
              std::ostream& out, std::ostream& err) {
  if (!std::filesystem::is_directory(dir)) {
    throw IoError("corpus directory not found: " + dir);
  }
  const std::vector<ReportRow> rows = BuildReport(dir, qps, opts.ToConfig());
  if (output.empty()) {
    WriteReportCsv(rows, out);
  } else {
    std::ostringstream csv;
    WriteReportCsv(rows, csv);
    const std::string text = csv.str();
    WriteFileBytes(std::span(reinterpret_cast<const uint8_t*>(text.data()),
                             text.size()),
                   output);
    out << json{{"output", output}, {"rows", rows.size()}}.dump() << "\n";
  }
  err << "report: " << rows.size() << " rows\n";
  return kExitOk;
}

}  // namespace

std::vector<ReportRow> BuildReport(const std::string& dir,
                                   const std::vector<int>& qps,
                                   const EncoderConfig& base) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".ppm") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());

  std::vector<ReportRow> rows;
  for (const auto& file : files) {
    const ImagePlanar image = ReadPpm(file.string());
    for (int qp : qps) {
      for (StreamMode mode : {StreamMode::kPcc, StreamMode::kUniform}) {
        EncoderConfig cfg = base;
        cfg.iqp = qp;
        cfg.mode = mode;
        const EncodeResult result = EncodeImage(image, cfg);
        const std::vector<uint8_t> bytes = WriteStream(result.stream);
        const ImagePlanar decoded = DecodeImage(bytes);
        const MetricsReport m = Measure(image, decoded, bytes.size());
        const OffsetSummary s = Summarize(result.cu_stats);
        rows.push_back({file.stem().string(), mode, qp, m.bpp, m.ssim,
                        m.ms_ssim.value_or(std::nan("")), m.psnr.mean,
                        s.mean_offsets, s.band_hit_rate});
      }
    }
  }
  return rows;
}

void WriteReportCsv(const std::vector<ReportRow>& rows, std::ostream& out) {
  out << kReportColumns << "\n";
  for (const ReportRow& r : rows) {
    out << r.name << ',' << ModeName(r.mode) << ',' << r.iqp << ','
        << Fixed(r.bpp) << ',' << Fixed(r.ssim) << ',' << Fixed(r.ms_ssim)
        << ',' << Fixed(r.psnr) << ',' << Fixed(r.mean_offsets[kG]) << ','
        << Fixed(r.mean_offsets[kB]) << ',' << Fixed(r.mean_offsets[kR])
        << ',' << Fixed(r.band_hit_rate) << "\n";
  }
}

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Perceptual color codec for RGB 4:4:4 images", "pcc"};
  app.require_subcommand(1);

  std::string input, output, ref, test, stream, corpus;
  std::vector<int> qps;
  CodingOptions enc_opts, report_opts;

  CLI::App* encode = app.add_subcommand("encode", "PPM -> bitstream");
  encode->add_option("--input", input, "source PPM")->required();
  encode->add_option("--output", output, "bitstream path")->required();
  encode->add_option("--qp", enc_opts.qp, "initial QP")
      ->required()
      ->check(CLI::Range(kMinQp, kMaxQp));
  enc_opts.Register(encode, true);

  CLI::App* decode = app.add_subcommand("decode", "bitstream -> PPM");
  decode->add_option("--input", input, "bitstream path")->required();
  decode->add_option("--output", output, "decoded PPM")->required();

  CLI::App* metrics = app.add_subcommand("metrics", "compare two PPMs");
  metrics->add_option("--ref", ref, "reference PPM")->required();
  metrics->add_option("--test", test, "distorted PPM")->required();
  metrics->add_option("--stream", stream, "bitstream for a bpp figure");

  CLI::App* report =
      app.add_subcommand("report", "pcc vs uniform CSV over a corpus");
  report->add_option("--corpus", corpus, "directory of PPM files")->required();
  report->add_option("--qp", qps, "initial QPs")
      ->required()
      ->delimiter(',')
      ->check(CLI::Range(kMinQp, kMaxQp));
  report->add_option("--output", output, "CSV path (default: stdout)");
  report_opts.Register(report, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*encode) return CmdEncode(input, output, enc_opts, out, err);
    if (*decode) return CmdDecode(input, output, out, err);
    if (*metrics) return CmdMetrics(ref, test, stream, out, err);
    if (*report) return CmdReport(corpus, qps, output, report_opts, out, err);
  } catch (const ParseError& e) {
    err << "bitstream error: " << e.what() << "\n";
    return kExitParse;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const FormatError& e) {
    err << "I/O error: bad " << e.field() << ": " << e.what() << "\n";
    return kExitIo;
  } catch (const UnsupportedFormatError& e) {
    err << "I/O error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}

}  // namespace pcc::cli
