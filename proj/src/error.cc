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

#include "pcc/error.h"

namespace pcc {

const char* ToString(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::kUnderflow: return "bitstream underflow";
    case ParseErrorKind::kBadMagic: return "bad magic";
    case ParseErrorKind::kVersionMismatch: return "version mismatch";
    case ParseErrorKind::kInvalidHeader: return "invalid header";
    case ParseErrorKind::kSizeMismatch: return "size mismatch";
    case ParseErrorKind::kIndexOverflow: return "coefficient index overflow";
    case ParseErrorKind::kInvalidOffset: return "invalid QP offset";
    case ParseErrorKind::kBadCode: return "malformed code";
  }
  return "unknown";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t byte_offset,
                       const std::string& detail)
    : std::runtime_error(std::string(ToString(kind)) + " at byte " +
                         std::to_string(byte_offset) +
                         (detail.empty() ? "" : ": " + detail)),
      kind_(kind),
      byte_offset_(byte_offset) {}

}  // namespace pcc
