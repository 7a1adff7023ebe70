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

#ifndef TRUTHSEM_TRUTH_VALUE_H_
#define TRUTHSEM_TRUTH_VALUE_H_

#include <cstdint>
#include <optional>
#include <string_view>

namespace truthsem {

// Three-valued truth. The underlying order kUndetermined < kFalse < kTrue is
// the canonical enumeration order; it is NOT the information order.
enum class TruthValue3 : std::uint8_t { kUndetermined = 0, kFalse = 1, kTrue = 2 };

enum class ClassicalValue : std::uint8_t { kFalse = 0, kTrue = 1 };

inline constexpr TruthValue3 kAllTruthValues3[] = {
    TruthValue3::kUndetermined, TruthValue3::kFalse, TruthValue3::kTrue};

constexpr bool is_classical(TruthValue3 v) {
  return v != TruthValue3::kUndetermined;
}

// Information order: Undetermined sits below both classical values, which
// are incomparable.
constexpr bool info_leq(TruthValue3 a, TruthValue3 b) {
  return a == TruthValue3::kUndetermined || a == b;
}

// Least upper bound in the information order. Only defined for compatible
// arguments (not two different classical values).
constexpr std::optional<TruthValue3> info_join(TruthValue3 a, TruthValue3 b) {
  if (a == TruthValue3::kUndetermined) return b;
  if (b == TruthValue3::kUndetermined || a == b) return a;
  return std::nullopt;
}

// Strong Kleene connectives.
constexpr TruthValue3 not3(TruthValue3 a) {
  switch (a) {
    case TruthValue3::kTrue:
      return TruthValue3::kFalse;
    case TruthValue3::kFalse:
      return TruthValue3::kTrue;
    case TruthValue3::kUndetermined:
      break;
  }
  return TruthValue3::kUndetermined;
}

constexpr TruthValue3 and3(TruthValue3 a, TruthValue3 b) {
  if (a == TruthValue3::kFalse || b == TruthValue3::kFalse) return TruthValue3::kFalse;
  if (a == TruthValue3::kTrue && b == TruthValue3::kTrue) return TruthValue3::kTrue;
  return TruthValue3::kUndetermined;
}

constexpr TruthValue3 or3(TruthValue3 a, TruthValue3 b) {
  if (a == TruthValue3::kTrue || b == TruthValue3::kTrue) return TruthValue3::kTrue;
  if (a == TruthValue3::kFalse && b == TruthValue3::kFalse) return TruthValue3::kFalse;
  return TruthValue3::kUndetermined;
}

constexpr TruthValue3 to_truth3(ClassicalValue v) {
  return v == ClassicalValue::kTrue ? TruthValue3::kTrue : TruthValue3::kFalse;
}

constexpr ClassicalValue to_classical(bool b) {
  return b ? ClassicalValue::kTrue : ClassicalValue::kFalse;
}

constexpr bool is_true(ClassicalValue v) { return v == ClassicalValue::kTrue; }

// Short codes used by the text format, the report and the JSON output.
constexpr char to_code(TruthValue3 v) {
  switch (v) {
    case TruthValue3::kTrue:
      return 't';
    case TruthValue3::kFalse:
      return 'f';
    case TruthValue3::kUndetermined:
      break;
  }
  return 'u';
}

constexpr char to_code(ClassicalValue v) { return is_true(v) ? 't' : 'f'; }

std::optional<TruthValue3> truth3_from_code(std::string_view code);
std::optional<ClassicalValue> classical_from_code(std::string_view code);

}  // namespace truthsem

#endif  // TRUTHSEM_TRUTH_VALUE_H_
