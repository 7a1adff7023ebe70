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

#ifndef TRUTHSEM_FIXPOINT_H_
#define TRUTHSEM_FIXPOINT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "truthsem/system.h"

namespace truthsem {

// 3^12: every valuation of a twelve-sentence system.
inline constexpr std::uint64_t kDefaultEnumerationLimit = 531441;

struct EnumerationOptions {
  // Largest valuation space (3^N) that may be searched.
  std::uint64_t limit = kDefaultEnumerationLimit;
  // Workers over disjoint index ranges; the result does not depend on it.
  unsigned threads = 1;
};

// 3^n, saturating at UINT64_MAX.
std::uint64_t valuation_space_size(std::size_t sentences);

bool is_fixed_point(const SentenceSystem& system, const Valuation& v);

// Least fixed point, by iterating the jump from all-Undetermined. Throws
// Error{kNonStabilizing} if the chain outgrows N+1 steps.
Valuation minimal_fixed_point(const SentenceSystem& system);

// Every fixed point, in canonical order. Throws
// Error{kEnumerationLimitExceeded} when 3^N exceeds options.limit.
std::vector<Valuation> enumerate_fixed_points(const SentenceSystem& system,
                                              const EnumerationOptions& options = {});

// No sentence is classical in both with different values.
bool compatible(const Valuation& v, const Valuation& w);

// Members compatible with every member of `fixed_points` (the full set).
std::vector<Valuation> intrinsic_fixed_points(const std::vector<Valuation>& fixed_points);

// Pointwise information join of pairwise compatible valuations. Returns
// nullopt on a classical clash or for an empty input.
std::optional<Valuation> info_join(const std::vector<Valuation>& valuations);

// Join of the intrinsic fixed points, checked to be an intrinsic fixed point
// (Error{kJoinNotFixedPoint} otherwise).
Valuation largest_intrinsic_fixed_point(const SentenceSystem& system,
                                        const EnumerationOptions& options = {});

struct FixedPointReport {
  Valuation minimal;
  // Empty when the enumeration limit was hit.
  std::vector<Valuation> all;
  std::vector<Valuation> intrinsic;
  std::optional<Valuation> largest_intrinsic;
  bool limit_exceeded = false;
};

// Never throws kEnumerationLimitExceeded; the flag is set instead.
FixedPointReport analyze_fixed_points(const SentenceSystem& system,
                                      const EnumerationOptions& options = {});

enum class CheckStatus { kPass, kFail, kSkipped };

struct PropertyCheck {
  std::string name;
  CheckStatus status = CheckStatus::kPass;
  std::string detail;
};

// Checks that the largest intrinsic fixed point of a fully enumerated report
// (i) agrees with the external atoms, (ii) obeys the strong Kleene conditions
// at every construction, (iii) gives each sentence its body's value,
// (iv) clashes with no fixed point and (v) leaves undetermined only what no
// intrinsic fixed point decides. Reported as skipped past the enumeration
// limit.
std::vector<PropertyCheck> check_primary_properties(const SentenceSystem& system,
                                                    const FixedPointReport& report);

}  // namespace truthsem

#endif  // TRUTHSEM_FIXPOINT_H_
