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

#include "truthsem/error.h"

#include <utility>

#include "truthsem/truth_value.h"

namespace truthsem {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse:
      return "ParseError";
    case ErrorKind::kUnknownName:
      return "UnknownName";
    case ErrorKind::kDuplicateName:
      return "DuplicateName";
    case ErrorKind::kEmptySystem:
      return "EmptySystem";
    case ErrorKind::kBareSentenceReference:
      return "BareSentenceReference";
    case ErrorKind::kUnknownFlag:
      return "UnknownFlag";
    case ErrorKind::kEnumerationLimitExceeded:
      return "EnumerationLimitExceeded";
    case ErrorKind::kNotAFixedPoint:
      return "NotAFixedPoint";
    case ErrorKind::kNonStabilizing:
      return "NonStabilizing";
    case ErrorKind::kJoinNotFixedPoint:
      return "JoinNotFixedPoint";
    case ErrorKind::kIo:
      return "IoError";
  }
  return "Error";
}

namespace {

std::string format_what(ErrorKind kind, const std::string& message,
                        const std::optional<SourcePos>& pos) {
  std::string out(to_string(kind));
  if (pos) {
    out += " at " + std::to_string(pos->line) + ":" + std::to_string(pos->column);
  }
  out += ": ";
  out += message;
  return out;
}

std::string with_expected(std::string message, const std::vector<std::string>& expected) {
  if (expected.empty()) return message;
  message += " (expected ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) message += i + 1 == expected.size() ? " or " : ", ";
    message += expected[i];
  }
  message += ")";
  return message;
}

}  // namespace

Error::Error(ErrorKind kind, std::string message, std::optional<SourcePos> pos)
    : std::runtime_error(format_what(kind, message, pos)),
      kind_(kind),
      pos_(pos),
      detail_(std::move(message)) {}

ParseError::ParseError(std::string message, SourcePos pos, std::vector<std::string> expected)
    : Error(ErrorKind::kParse, with_expected(std::move(message), expected), pos),
      expected_(std::move(expected)) {}

std::optional<TruthValue3> truth3_from_code(std::string_view code) {
  if (code == "t") return TruthValue3::kTrue;
  if (code == "f") return TruthValue3::kFalse;
  if (code == "u") return TruthValue3::kUndetermined;
  return std::nullopt;
}

std::optional<ClassicalValue> classical_from_code(std::string_view code) {
  if (code == "t") return ClassicalValue::kTrue;
  if (code == "f") return ClassicalValue::kFalse;
  return std::nullopt;
}

}  // namespace truthsem
