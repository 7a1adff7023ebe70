// Copyright 2026 The truthsem Authors.
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

#ifndef TRUTHSEM_ERROR_H_
#define TRUTHSEM_ERROR_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace truthsem {

enum class ErrorKind {
  kParse,
  kUnknownName,
  kDuplicateName,
  kEmptySystem,
  kBareSentenceReference,
  kUnknownFlag,
  kEnumerationLimitExceeded,
  kNotAFixedPoint,
  // Internal consistency failures; these indicate a bug, not bad input.
  kNonStabilizing,
  kJoinNotFixedPoint,
  kIo,
};

std::string_view to_string(ErrorKind kind);

// 1-based line and column plus the 0-based byte offset into the source.
struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t offset = 0;

  friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, std::optional<SourcePos> pos = std::nullopt);

  ErrorKind kind() const { return kind_; }
  const std::optional<SourcePos>& pos() const { return pos_; }
  // Message without the kind/position prefix that what() carries.
  const std::string& detail() const { return detail_; }

 private:
  ErrorKind kind_;
  std::optional<SourcePos> pos_;
  std::string detail_;
};

class ParseError : public Error {
 public:
  ParseError(std::string message, SourcePos pos, std::vector<std::string> expected);

  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::vector<std::string> expected_;
};

}  // namespace truthsem

#endif  // TRUTHSEM_ERROR_H_
