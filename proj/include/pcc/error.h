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

#ifndef PCC_ERROR_H_
#define PCC_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pcc {

// Precondition or configuration violation (bad QP, unsupported block size...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// File system failures and truncated payloads.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text headers in image files. Carries the offending field name.
class FormatError : public std::runtime_error {
 public:
  FormatError(std::string field, const std::string& what)
      : std::runtime_error(what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// Well-formed file that uses a variant we do not handle (e.g. PPM maxval 4095).
class UnsupportedFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ParseErrorKind {
  kUnderflow,        // ran out of bits mid-symbol
  kBadMagic,
  kVersionMismatch,
  kInvalidHeader,    // header fields out of range
  kSizeMismatch,     // body shorter or longer than the CU grid requires
  kIndexOverflow,    // last-significant index beyond the block
  kInvalidOffset,    // offset code illegal for the stream mode or QP range
  kBadCode,          // malformed or non-canonical symbol
};

const char* ToString(ParseErrorKind kind);

// Bitstream decoding failure. byte_offset is the position of the reader when
// the error was detected.
class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t byte_offset,
             const std::string& detail);
  ParseErrorKind kind() const { return kind_; }
  std::size_t byte_offset() const { return byte_offset_; }

 private:
  ParseErrorKind kind_;
  std::size_t byte_offset_;
};

}  // namespace pcc

#endif  // PCC_ERROR_H_
