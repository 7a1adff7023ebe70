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

#include "truthsem/evaluator.h"

#include <algorithm>
#include <cassert>

namespace truthsem {

TruthValue3 sk3_eval(const Formula& f, const Valuation& v, const SentenceSystem& system) {
  switch (f.kind()) {
    case Formula::Kind::kTrue:
      return TruthValue3::kTrue;
    case Formula::Kind::kFalse:
      return TruthValue3::kFalse;
    case Formula::Kind::kExternal:
      return to_truth3(*system.external_value(f.name()));
    case Formula::Kind::kTruth:
      return v[system.require_index(f.name())];
    case Formula::Kind::kNot:
      return not3(sk3_eval(f.lhs(), v, system));
    case Formula::Kind::kAnd:
      return and3(sk3_eval(f.lhs(), v, system), sk3_eval(f.rhs(), v, system));
    case Formula::Kind::kOr:
      return or3(sk3_eval(f.lhs(), v, system), sk3_eval(f.rhs(), v, system));
  }
  return TruthValue3::kUndetermined;
}

ClassicalValue classical_eval(const Formula& f, std::span<const ClassicalValue> truth_atoms,
                              const SentenceSystem& system) {
  switch (f.kind()) {
    case Formula::Kind::kTrue:
      return ClassicalValue::kTrue;
    case Formula::Kind::kFalse:
      return ClassicalValue::kFalse;
    case Formula::Kind::kExternal:
      return *system.external_value(f.name());
    case Formula::Kind::kTruth:
      return truth_atoms[system.require_index(f.name())];
    case Formula::Kind::kNot:
      return to_classical(!is_true(classical_eval(f.lhs(), truth_atoms, system)));
    case Formula::Kind::kAnd:
      return to_classical(is_true(classical_eval(f.lhs(), truth_atoms, system)) &&
                          is_true(classical_eval(f.rhs(), truth_atoms, system)));
    case Formula::Kind::kOr:
      return to_classical(is_true(classical_eval(f.lhs(), truth_atoms, system)) ||
                          is_true(classical_eval(f.rhs(), truth_atoms, system)));
  }
  return ClassicalValue::kFalse;
}

Valuation jump(const SentenceSystem& system, const Valuation& v) {
  Valuation out = Valuation::undetermined(system.size());
  for (std::size_t i = 0; i < system.size(); ++i) {
    out[i] = sk3_eval(system.sentence(i).body, v, system);
  }
  return out;
}

CompiledSystem::CompiledSystem(const SentenceSystem& system) {
  bodies_.reserve(system.size());
  for (const Sentence& s : system.sentences()) {
    std::vector<Instr> code;
    compile(s.body, system, code);
    // Postfix stack depth never exceeds the instruction count.
    max_depth_ = std::max(max_depth_, code.size());
    bodies_.push_back(std::move(code));
  }
}

void CompiledSystem::compile(const Formula& f, const SentenceSystem& system,
                             std::vector<Instr>& code) {
  switch (f.kind()) {
    case Formula::Kind::kTrue:
      code.push_back({Op::kPush, static_cast<std::uint32_t>(TruthValue3::kTrue)});
      return;
    case Formula::Kind::kFalse:
      code.push_back({Op::kPush, static_cast<std::uint32_t>(TruthValue3::kFalse)});
      return;
    case Formula::Kind::kExternal:
      code.push_back(
          {Op::kPush, static_cast<std::uint32_t>(to_truth3(*system.external_value(f.name())))});
      return;
    case Formula::Kind::kTruth:
      code.push_back({Op::kLoad, static_cast<std::uint32_t>(system.require_index(f.name()))});
      return;
    case Formula::Kind::kNot:
      compile(f.lhs(), system, code);
      code.push_back({Op::kNot, 0});
      return;
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr:
      compile(f.lhs(), system, code);
      compile(f.rhs(), system, code);
      code.push_back({f.kind() == Formula::Kind::kAnd ? Op::kAnd : Op::kOr, 0});
      return;
  }
}

TruthValue3 CompiledSystem::eval(std::size_t sentence, std::span<const TruthValue3> values) const {
  // Small bodies dominate; avoid a heap allocation for them.
  constexpr std::size_t kInline = 64;
  TruthValue3 inline_stack[kInline] = {};
  std::vector<TruthValue3> heap_stack;
  TruthValue3* stack = inline_stack;
  if (max_depth_ > kInline) {
    heap_stack.resize(max_depth_);
    stack = heap_stack.data();
  }
  std::size_t top = 0;
  for (const Instr& in : bodies_[sentence]) {
    switch (in.op) {
      case Op::kPush:
        stack[top++] = static_cast<TruthValue3>(in.operand);
        break;
      case Op::kLoad:
        stack[top++] = values[in.operand];
        break;
      case Op::kNot:
        stack[top - 1] = not3(stack[top - 1]);
        break;
      case Op::kAnd:
        --top;
        stack[top - 1] = and3(stack[top - 1], stack[top]);
        break;
      case Op::kOr:
        --top;
        stack[top - 1] = or3(stack[top - 1], stack[top]);
        break;
    }
  }
  assert(top == 1);
  return stack[0];
}

void CompiledSystem::jump(std::span<const TruthValue3> values, std::span<TruthValue3> out) const {
  for (std::size_t i = 0; i < bodies_.size(); ++i) out[i] = eval(i, values);
}

bool CompiledSystem::is_fixed_point(std::span<const TruthValue3> values) const {
  for (std::size_t i = 0; i < bodies_.size(); ++i) {
    if (eval(i, values) != values[i]) return false;
  }
  return true;
}

}  // namespace truthsem
