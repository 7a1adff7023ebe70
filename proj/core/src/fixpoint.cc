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

#include "truthsem/fixpoint.h"

#include <algorithm>
#include <limits>
#include <thread>

#include "truthsem/error.h"
#include "truthsem/evaluator.h"

namespace truthsem {

std::uint64_t valuation_space_size(std::size_t sentences) {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < sentences; ++i) {
    if (n > std::numeric_limits<std::uint64_t>::max() / 3) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    n *= 3;
  }
  return n;
}

bool is_fixed_point(const SentenceSystem& system, const Valuation& v) {
  return v.size() == system.size() && jump(system, v) == v;
}

Valuation minimal_fixed_point(const SentenceSystem& system) {
  Valuation current = Valuation::undetermined(system.size());
  // Each non-final step decides at least one more sentence.
  for (std::size_t step = 0; step <= system.size() + 1; ++step) {
    Valuation next = jump(system, current);
    if (next == current) return current;
    if (!current.info_leq(next)) {
      throw Error(ErrorKind::kNonStabilizing, "jump chain is not increasing at step " +
                                                  std::to_string(step));
    }
    current = std::move(next);
  }
  throw Error(ErrorKind::kNonStabilizing,
              "no fixed point after " + std::to_string(system.size() + 1) + " jumps");
}

namespace {

// Fixed points whose canonical index lies in [begin, end). Digit k of the
// index (most significant first) is the value of sentence k.
std::vector<Valuation> scan_range(const CompiledSystem& compiled, std::size_t n,
                                  std::uint64_t begin, std::uint64_t end) {
  std::vector<Valuation> found;
  if (begin >= end) return found;
  std::vector<TruthValue3> digits(n);
  std::uint64_t rest = begin;
  for (std::size_t k = n; k-- > 0;) {
    digits[k] = static_cast<TruthValue3>(rest % 3);
    rest /= 3;
  }
  for (std::uint64_t index = begin; index < end; ++index) {
    if (compiled.is_fixed_point(digits)) found.emplace_back(digits);
    for (std::size_t k = n; k-- > 0;) {
      if (digits[k] != TruthValue3::kTrue) {
        digits[k] = static_cast<TruthValue3>(static_cast<int>(digits[k]) + 1);
        break;
      }
      digits[k] = TruthValue3::kUndetermined;
    }
  }
  return found;
}

}  // namespace

std::vector<Valuation> enumerate_fixed_points(const SentenceSystem& system,
                                              const EnumerationOptions& options) {
  const std::uint64_t space = valuation_space_size(system.size());
  if (space > options.limit) {
    throw Error(ErrorKind::kEnumerationLimitExceeded,
                "3^" + std::to_string(system.size()) + " valuations exceed the limit of " +
                    std::to_string(options.limit));
  }
  const CompiledSystem compiled(system);
  const unsigned workers =
      static_cast<unsigned>(std::clamp<std::uint64_t>(options.threads, 1, std::max<std::uint64_t>(space, 1)));
  if (workers == 1) return scan_range(compiled, system.size(), 0, space);

  std::vector<std::vector<Valuation>> parts(workers);
  {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (space + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = std::min(space, w * chunk);
      const std::uint64_t end = std::min(space, begin + chunk);
      pool.emplace_back([&, w, begin, end] {
        parts[w] = scan_range(compiled, system.size(), begin, end);
      });
    }
  }
  // Ranges are ascending and disjoint, so concatenation is already canonical.
  std::vector<Valuation> all;
  for (auto& part : parts) {
    std::ranges::move(part, std::back_inserter(all));
  }
  return all;
}

bool compatible(const Valuation& v, const Valuation& w) {
  if (v.size() != w.size()) return false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (is_classical(v[i]) && is_classical(w[i]) && v[i] != w[i]) return false;
  }
  return true;
}

std::vector<Valuation> intrinsic_fixed_points(const std::vector<Valuation>& fixed_points) {
  std::vector<Valuation> out;
  for (const Valuation& v : fixed_points) {
    if (std::ranges::all_of(fixed_points, [&v](const Valuation& w) { return compatible(v, w); })) {
      out.push_back(v);
    }
  }
  return out;
}

std::optional<Valuation> info_join(const std::vector<Valuation>& valuations) {
  if (valuations.empty()) return std::nullopt;
  Valuation acc = valuations.front();
  for (const Valuation& v : valuations) {
    if (v.size() != acc.size()) return std::nullopt;
    for (std::size_t i = 0; i < v.size(); ++i) {
      auto joined = truthsem::info_join(acc[i], v[i]);
      if (!joined) return std::nullopt;
      acc[i] = *joined;
    }
  }
  return acc;
}

namespace {

Valuation join_intrinsic(const SentenceSystem& system, const std::vector<Valuation>& all,
                         const std::vector<Valuation>& intrinsic) {
  // The minimal fixed point is always intrinsic, so the set is never empty.
  auto joined = info_join(intrinsic);
  if (!joined) {
    throw Error(ErrorKind::kJoinNotFixedPoint, "intrinsic fixed points are not pairwise compatible");
  }
  if (!is_fixed_point(system, *joined)) {
    throw Error(ErrorKind::kJoinNotFixedPoint,
                "join of intrinsic fixed points is not a fixed point: " + to_string(system, *joined));
  }
  if (!std::ranges::all_of(all, [&](const Valuation& w) { return compatible(*joined, w); })) {
    throw Error(ErrorKind::kJoinNotFixedPoint, "join of intrinsic fixed points is not intrinsic");
  }
  return *joined;
}

}  // namespace

Valuation largest_intrinsic_fixed_point(const SentenceSystem& system,
                                        const EnumerationOptions& options) {
  std::vector<Valuation> all = enumerate_fixed_points(system, options);
  return join_intrinsic(system, all, intrinsic_fixed_points(all));
}

FixedPointReport analyze_fixed_points(const SentenceSystem& system,
                                      const EnumerationOptions& options) {
  FixedPointReport report;
  report.minimal = minimal_fixed_point(system);
  try {
    report.all = enumerate_fixed_points(system, options);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kEnumerationLimitExceeded) throw;
    report.limit_exceeded = true;
    return report;
  }
  report.intrinsic = intrinsic_fixed_points(report.all);
  report.largest_intrinsic = join_intrinsic(system, report.all, report.intrinsic);
  return report;
}

namespace {

// Verifies the strong Kleene truth conditions at every construction node of
// `f` under `v`; returns the node's value, or nullopt after recording a
// violation in `failure`.
std::optional<TruthValue3> check_conditions(const Formula& f, const Valuation& v,
                                            const SentenceSystem& system, std::string& failure) {
  const TruthValue3 value = sk3_eval(f, v, system);
  std::vector<TruthValue3> parts;
  for (const Formula& c : f.children()) {
    auto part = check_conditions(c, v, system, failure);
    if (!part) return std::nullopt;
    parts.push_back(*part);
  }
  auto count = [&parts](TruthValue3 x) { return std::ranges::count(parts, x); };
  bool ok = true;
  switch (f.kind()) {
    case Formula::Kind::kNot:
      ok = (value == TruthValue3::kTrue) == (parts[0] == TruthValue3::kFalse) &&
           (value == TruthValue3::kFalse) == (parts[0] == TruthValue3::kTrue);
      break;
    case Formula::Kind::kAnd:
      ok = (value == TruthValue3::kTrue) == (count(TruthValue3::kTrue) == 2) &&
           (value == TruthValue3::kFalse) == (count(TruthValue3::kFalse) > 0);
      break;
    case Formula::Kind::kOr:
      ok = (value == TruthValue3::kTrue) == (count(TruthValue3::kTrue) > 0) &&
           (value == TruthValue3::kFalse) == (count(TruthValue3::kFalse) == 2);
      break;
    case Formula::Kind::kTruth:
      ok = value == v.at(system, f.name());
      break;
    default:
      break;
  }
  if (!ok) {
    failure = "condition violated at '" + to_string(f) + "'";
    return std::nullopt;
  }
  return value;
}

}  // namespace

std::vector<PropertyCheck> check_primary_properties(const SentenceSystem& system,
                                                    const FixedPointReport& report) {
  const char* names[] = {"externals", "sk3-conditions", "t-scheme", "no-clash", "undetermined-is-forced"};
  std::vector<PropertyCheck> checks;
  if (report.limit_exceeded || !report.largest_intrinsic) {
    for (const char* n : names) {
      checks.push_back({n, CheckStatus::kSkipped, "enumeration limit exceeded"});
    }
    return checks;
  }
  const Valuation& lifp = *report.largest_intrinsic;
  auto fail = [](PropertyCheck& c, std::string detail) {
    if (c.status == CheckStatus::kFail) return;
    c.status = CheckStatus::kFail;
    c.detail = std::move(detail);
  };

  PropertyCheck externals{names[0], CheckStatus::kPass, {}};
  for (const ExternalAtom& atom : system.externals()) {
    if (sk3_eval(Formula::external(atom.name), lifp, system) != to_truth3(atom.value)) {
      fail(externals, "external atom '" + atom.name + "' not at its declared value");
    }
  }
  checks.push_back(externals);

  PropertyCheck conditions{names[1], CheckStatus::kPass, {}};
  for (const Sentence& s : system.sentences()) {
    std::string failure;
    if (!check_conditions(s.body, lifp, system, failure)) fail(conditions, s.name + ": " + failure);
  }
  checks.push_back(conditions);

  PropertyCheck scheme{names[2], CheckStatus::kPass, {}};
  for (std::size_t i = 0; i < system.size(); ++i) {
    if (sk3_eval(system.sentence(i).body, lifp, system) != lifp[i]) {
      fail(scheme, "sentence '" + system.sentence(i).name + "' differs from its body");
    }
  }
  checks.push_back(scheme);

  PropertyCheck clash{names[3], CheckStatus::kPass, {}};
  for (const Valuation& w : report.all) {
    if (!compatible(lifp, w)) fail(clash, "clashes with fixed point " + to_string(system, w));
  }
  checks.push_back(clash);

  PropertyCheck forced{names[4], CheckStatus::kPass, {}};
  for (std::size_t i = 0; i < system.size(); ++i) {
    if (is_classical(lifp[i])) continue;
    for (const Valuation& w : report.intrinsic) {
      if (is_classical(w[i])) {
        fail(forced, "sentence '" + system.sentence(i).name +
                         "' is undetermined although an intrinsic fixed point decides it");
      }
    }
  }
  checks.push_back(forced);
  return checks;
}

}  // namespace truthsem
