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

#ifndef TRUTHSEM_EVALUATOR_H_
#define TRUTHSEM_EVALUATOR_H_

#include <cstdint>
#include <span>
#include <vector>

#include "truthsem/formula.h"
#include "truthsem/system.h"
#include "truthsem/truth_value.h"

namespace truthsem {

// Classical values for the truth atoms T(n), indexed like the system.
using TruthAtomAssignment = std::vector<ClassicalValue>;

// Strong Kleene value of a core formula; T(n) reads v(n).
TruthValue3 sk3_eval(const Formula& f, const Valuation& v, const SentenceSystem& system);

// Two-valued value of a core formula; T(n) reads the supplied assignment.
ClassicalValue classical_eval(const Formula& f, std::span<const ClassicalValue> truth_atoms,
                              const SentenceSystem& system);

// One re-evaluation of every body under v.
Valuation jump(const SentenceSystem& system, const Valuation& v);

// Sentence bodies flattened to postfix code with resolved indices. Gives the
// same results as sk3_eval; used on the enumeration hot path.
class CompiledSystem {
 public:
  explicit CompiledSystem(const SentenceSystem& system);

  std::size_t size() const { return bodies_.size(); }

  TruthValue3 eval(std::size_t sentence, std::span<const TruthValue3> values) const;
  void jump(std::span<const TruthValue3> values, std::span<TruthValue3> out) const;
  // Early-exits on the first sentence whose body disagrees with its value.
  bool is_fixed_point(std::span<const TruthValue3> values) const;

 private:
  enum class Op : std::uint8_t { kPush, kLoad, kNot, kAnd, kOr };
  struct Instr {
    Op op;
    // kPush: the constant; kLoad: sentence index.
    std::uint32_t operand;
  };

  void compile(const Formula& f, const SentenceSystem& system, std::vector<Instr>& code);

  std::vector<std::vector<Instr>> bodies_;
  std::size_t max_depth_ = 1;
};

}  // namespace truthsem

#endif  // TRUTHSEM_EVALUATOR_H_
