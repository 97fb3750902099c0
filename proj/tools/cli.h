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

#ifndef PCC_TOOLS_CLI_H_
#define PCC_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "pcc/codec.h"

namespace pcc::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitParse = 3;

// One report row: a corpus image coded in one mode at one initial QP.
struct ReportRow {
  std::string name;
  StreamMode mode = StreamMode::kPcc;
  int iqp = 0;
  double bpp = 0.0;
  double ssim = 0.0;
  double ms_ssim = 0.0;  // NaN when the image is too small
  double psnr = 0.0;     // pooled over channels; +inf when lossless
  std::array<double, kNumChannels> mean_offsets{};  // G, B, R
  double band_hit_rate = 0.0;
};

// Every *.ppm in `dir` (sorted by file name) x every QP in `qps` x
// {pcc, uniform}, in that nesting order. `base` supplies everything except
// iqp and mode.
std::vector<ReportRow> BuildReport(const std::string& dir,
                                   const std::vector<int>& qps,
                                   const EncoderConfig& base);

inline constexpr const char* kReportColumns =
    "name,mode,iqp,bpp,ssim,ms_ssim,psnr,mean_off_g,mean_off_b,mean_off_r,"
    "band_hit_rate";
void WriteReportCsv(const std::vector<ReportRow>& rows, std::ostream& out);

// Entry point shared by the executable and the tests. Machine-readable
// results go to `out`, diagnostics to `err`.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace pcc::cli

#endif  // PCC_TOOLS_CLI_H_
