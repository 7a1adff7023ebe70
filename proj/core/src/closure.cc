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

#include "truthsem/closure.h"

#include "truthsem/error.h"

namespace truthsem {

TruthAtomAssignment truth_atoms_from(const Valuation& primary) {
  TruthAtomAssignment atoms(primary.size());
  for (std::size_t i = 0; i < primary.size(); ++i) {
    atoms[i] = to_classical(primary[i] == TruthValue3::kTrue);
  }
  return atoms;
}

FinalValuation classical_closure(const SentenceSystem& system, const Valuation& primary) {
  if (!is_fixed_point(system, primary)) {
    throw Error(ErrorKind::kNotAFixedPoint,
                "closure needs a fixed point, got " + to_string(system, primary));
  }
  FinalValuation out;
  out.truth_atoms = truth_atoms_from(primary);
  out.values.reserve(system.size());
  for (std::size_t i = 0; i < system.size(); ++i) {
    const ClassicalValue value = classical_eval(system.sentence(i).body, out.truth_atoms, system);
    if (is_classical(primary[i]) && to_truth3(value) != primary[i]) {
      throw Error(ErrorKind::kNotAFixedPoint,
                  "closure flips the primary value of '" + system.sentence(i).name + "'");
    }
    out.values.push_back(value);
  }
  return out;
}

ClassicalValue final_falsity(const SentenceSystem& system, const Valuation& primary,
                             std::size_t sentence) {
  // F(n) is T(m) for m := not T(n); m's primary value is its body's value.
  const Formula negated = Formula::negation(Formula::truth(system.sentence(sentence).name));
  return to_classical(sk3_eval(negated, primary, system) == TruthValue3::kTrue);
}

ClassicalValue final_undetermined(const SentenceSystem& system, const Valuation& primary,
                                  std::size_t sentence) {
  const bool t = primary[sentence] == TruthValue3::kTrue;
  const bool f = is_true(final_falsity(system, primary, sentence));
  return to_classical(!t && !f);
}

VerdictTable verdict(const SentenceSystem& system, const VerdictOptions& options) {
  FixedPointReport report;
  if (options.enumerate) {
    report = analyze_fixed_points(system, options.enumeration);
  } else {
    report.minimal = minimal_fixed_point(system);
  }
  return verdict(system, report, options);
}

VerdictTable verdict(const SentenceSystem& system, const FixedPointReport& report,
                     const VerdictOptions& options) {
  VerdictTable table;
  table.system = system.name();
  table.enumerated = options.enumerate;
  table.limit_exceeded = options.enumerate && report.limit_exceeded;
  table.closure_source = options.enumerate ? options.closure_source : ClosureSource::kMinimal;
  const bool have_lifp = options.enumerate && report.largest_intrinsic.has_value();
  if (have_lifp) {
    table.fixed_point_count = report.all.size();
    table.intrinsic_count = report.intrinsic.size();
  }

  std::optional<FinalValuation> final_valuation;
  if (table.closure_source == ClosureSource::kMinimal) {
    final_valuation = classical_closure(system, report.minimal);
  } else if (have_lifp) {
    final_valuation = classical_closure(system, *report.largest_intrinsic);
  }

  for (std::size_t i : system.user_indices()) {
    VerdictRow row{system.sentence(i).name, report.minimal[i], std::nullopt, std::nullopt};
    if (have_lifp) row.lifp = (*report.largest_intrinsic)[i];
    if (final_valuation) row.final_value = (*final_valuation)[i];
    table.rows.push_back(std::move(row));
  }

  if (!options.enumerate) {
    table.notes.push_back("minimal fixed point only; final values are its classical closure");
  } else if (table.limit_exceeded) {
    table.notes.push_back("3^" + std::to_string(system.size()) +
                          " valuations exceed the enumeration limit of " +
                          std::to_string(options.enumeration.limit) +
                          "; lifp and final are unavailable");
  } else if (table.closure_source == ClosureSource::kMinimal) {
    table.notes.push_back("final values are the classical closure of the minimal fixed point");
  }
  if (system.flags().yablo) {
    table.notes.push_back(
        "finite Yablo truncation: the last sentence is true and every other sentence false in "
        "the unique fixed point; the infinite sequence, where every sentence is undetermined in "
        "the primary valuation and true in the final one, is not reproduced");
  }
  return table;
}

std::vector<PropertyCheck> check_final_properties(const SentenceSystem& system,
                                                  const Valuation& primary,
                                                  const FinalValuation& final_valuation) {
  std::vector<PropertyCheck> checks;
  auto fail = [](PropertyCheck& c, std::string detail) {
    if (c.status == CheckStatus::kFail) return;
    c.status = CheckStatus::kFail;
    c.detail = std::move(detail);
  };

  PropertyCheck extension{"final-extends-primary", CheckStatus::kPass, {}};
  for (std::size_t i = 0; i < system.size(); ++i) {
    if (is_classical(primary[i]) && to_truth3(final_valuation[i]) != primary[i]) {
      fail(extension, "'" + system.sentence(i).name + "' changes value");
    }
  }
  checks.push_back(extension);

  PropertyCheck atoms{"truth-atom-rule", CheckStatus::kPass, {}};
  for (std::size_t i = 0; i < system.size(); ++i) {
    const Formula atom = Formula::truth(system.sentence(i).name);
    const bool expected = primary[i] == TruthValue3::kTrue;
    if (i >= final_valuation.truth_atoms.size() ||
        is_true(classical_eval(atom, final_valuation.truth_atoms, system)) != expected) {
      fail(atoms, "T(" + system.sentence(i).name + ") does not read the primary valuation");
    }
  }
  checks.push_back(atoms);

  PropertyCheck liar{"true-but-not-primary-true", CheckStatus::kPass, {}};
  if (system.flags().strengthened_liars.empty()) {
    liar.status = CheckStatus::kSkipped;
    liar.detail = "no sentence flagged 'sl'";
  }
  for (const std::string& name : system.flags().strengthened_liars) {
    const std::size_t i = system.require_index(name);
    // SL itself and "not T(SL)", both read in the final model.
    const bool holds = is_true(final_valuation[i]) &&
                       is_true(classical_eval(Formula::negation(Formula::truth(name)),
                                              final_valuation.truth_atoms, system));
    if (!holds) fail(liar, "'" + name + "' and 'not T(" + name + ")' are not both true");
  }
  checks.push_back(liar);

  PropertyCheck law{"excluded-middle-law", CheckStatus::kPass, {}};
  if (system.flags().excluded_middle_laws.empty()) {
    law.status = CheckStatus::kSkipped;
    law.detail = "no sentence flagged 'law'";
  }
  for (const std::string& name : system.flags().excluded_middle_laws) {
    if (!is_true(final_valuation[system.require_index(name)])) {
      fail(law, "'" + name + "' is false in the final model");
    }
  }
  checks.push_back(law);
  return checks;
}

}  // namespace truthsem
