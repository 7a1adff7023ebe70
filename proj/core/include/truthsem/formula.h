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

#ifndef TRUTHSEM_FORMULA_H_
#define TRUTHSEM_FORMULA_H_

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace truthsem {

// Core propositional formula over external atoms and truth atoms T(name).
// Immutable; copies share structure.
class Formula {
 public:
  enum class Kind { kTrue, kFalse, kExternal, kTruth, kNot, kAnd, kOr };

  static Formula constant(bool value);
  static Formula external(std::string atom);
  static Formula truth(std::string sentence);
  static Formula negation(Formula operand);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);

  // Left-folded n-ary forms. Empty conjunction is true, empty disjunction false.
  static Formula conjunction(std::span<const Formula> operands);
  static Formula disjunction(std::span<const Formula> operands);

  Kind kind() const { return node_->kind; }
  // Atom id for kExternal, sentence name for kTruth, empty otherwise.
  const std::string& name() const { return node_->name; }
  // Sole operand of kNot, left operand of kAnd/kOr.
  const Formula& lhs() const { return node_->children[0]; }
  const Formula& rhs() const { return node_->children[1]; }
  std::span<const Formula> children() const { return node_->children; }

  // Number of nodes in the tree.
  std::size_t size() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<Formula> children;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Renders with the surface syntax (minimal parentheses): `not T(L) or a`.
std::string to_string(const Formula& f);

// Names of sentences referenced through T(...), in first-occurrence order.
std::vector<std::string> referenced_sentences(const Formula& f);

}  // namespace truthsem

#endif  // TRUTHSEM_FORMULA_H_
