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

#ifndef TRUTHSEM_CLOSURE_H_
#define TRUTHSEM_CLOSURE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "truthsem/evaluator.h"
#include "truthsem/fixpoint.h"
#include "truthsem/system.h"

namespace truthsem {

// Classical valuation of every sentence of a system, indexed like the system.
struct FinalValuation {
  std::vector<ClassicalValue> values;
  // T(n) reads "n is true in the primary valuation".
  TruthAtomAssignment truth_atoms;

  ClassicalValue operator[](std::size_t i) const { return values[i]; }
  friend bool operator==(const FinalValuation&, const FinalValuation&) = default;
};

// T(n) is true exactly when primary(n) is True.
TruthAtomAssignment truth_atoms_from(const Valuation& primary);

// Classical closure of a fixed point: every truth atom reads the primary
// valuation, every body is evaluated classically. Throws
// Error{kNotAFixedPoint}.
FinalValuation classical_closure(const SentenceSystem& system, const Valuation& primary);

// F(n) and U(n) as they read in the final model of `primary`.
ClassicalValue final_falsity(const SentenceSystem& system, const Valuation& primary,
                             std::size_t sentence);
ClassicalValue final_undetermined(const SentenceSystem& system, const Valuation& primary,
                                  std::size_t sentence);

enum class ClosureSource { kLargestIntrinsic, kMinimal };

struct VerdictRow {
  std::string name;
  TruthValue3 mfp;
  std::optional<TruthValue3> lifp;
  std::optional<ClassicalValue> final_value;
};

struct VerdictTable {
  std::string system;
  ClosureSource closure_source = ClosureSource::kLargestIntrinsic;
  bool enumerated = true;
  bool limit_exceeded = false;
  std::optional<std::uint64_t> fixed_point_count;
  std::optional<std::uint64_t> intrinsic_count;
  // One row per user-declared sentence, in declaration order.
  std::vector<VerdictRow> rows;
  std::vector<std::string> notes;
};

struct VerdictOptions {
  EnumerationOptions enumeration;
  // false: minimal fixed point only; lifp and counts stay unavailable.
  bool enumerate = true;
  ClosureSource closure_source = ClosureSource::kLargestIntrinsic;
};

VerdictTable verdict(const SentenceSystem& system, const VerdictOptions& options = {});
VerdictTable verdict(const SentenceSystem& system, const FixedPointReport& report,
                     const VerdictOptions& options = {});

// Model-level checks of a final valuation against its primary valuation:
// extension, the truth-atom rule, the flagged strengthened-liar
// conjunctions and the flagged excluded-middle laws.
std::vector<PropertyCheck> check_final_properties(const SentenceSystem& system,
                                                  const Valuation& primary,
                                                  const FinalValuation& final_valuation);

}  // namespace truthsem

#endif  // TRUTHSEM_CLOSURE_H_
