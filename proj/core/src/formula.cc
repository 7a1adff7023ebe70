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

#include "truthsem/formula.h"

#include <algorithm>
#include <utility>

namespace truthsem {

Formula Formula::constant(bool value) {
  return Formula(std::make_shared<const Node>(Node{value ? Kind::kTrue : Kind::kFalse, {}, {}}));
}

Formula Formula::external(std::string atom) {
  return Formula(std::make_shared<const Node>(Node{Kind::kExternal, std::move(atom), {}}));
}

Formula Formula::truth(std::string sentence) {
  return Formula(std::make_shared<const Node>(Node{Kind::kTruth, std::move(sentence), {}}));
}

Formula Formula::negation(Formula operand) {
  return Formula(std::make_shared<const Node>(Node{Kind::kNot, {}, {std::move(operand)}}));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::kAnd, {}, {std::move(lhs), std::move(rhs)}}));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::kOr, {}, {std::move(lhs), std::move(rhs)}}));
}

Formula Formula::conjunction(std::span<const Formula> operands) {
  if (operands.empty()) return constant(true);
  Formula acc = operands.front();
  for (const Formula& f : operands.subspan(1)) acc = conjunction(acc, f);
  return acc;
}

Formula Formula::disjunction(std::span<const Formula> operands) {
  if (operands.empty()) return constant(false);
  Formula acc = operands.front();
  for (const Formula& f : operands.subspan(1)) acc = disjunction(acc, f);
  return acc;
}

std::size_t Formula::size() const {
  std::size_t n = 1;
  for (const Formula& c : children()) n += c.size();
  return n;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.name() != b.name()) return false;
  return std::ranges::equal(a.children(), b.children());
}

namespace {

// Binding strength; higher binds tighter. Mirrors the text format.
int precedence(Formula::Kind kind) {
  switch (kind) {
    case Formula::Kind::kOr:
      return 3;
    case Formula::Kind::kAnd:
      return 4;
    case Formula::Kind::kNot:
      return 5;
    default:
      return 6;
  }
}

void render(const Formula& f, std::string& out) {
  auto child = [&out](const Formula& c, int min_prec) {
    const bool parens = precedence(c.kind()) < min_prec;
    if (parens) out += '(';
    render(c, out);
    if (parens) out += ')';
  };
  switch (f.kind()) {
    case Formula::Kind::kTrue:
      out += "true";
      break;
    case Formula::Kind::kFalse:
      out += "false";
      break;
    case Formula::Kind::kExternal:
      out += f.name();
      break;
    case Formula::Kind::kTruth:
      out += "T(" + f.name() + ")";
      break;
    case Formula::Kind::kNot:
      out += "not ";
      child(f.lhs(), precedence(Formula::Kind::kNot));
      break;
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr: {
      const int p = precedence(f.kind());
      child(f.lhs(), p);
      out += f.kind() == Formula::Kind::kAnd ? " and " : " or ";
      child(f.rhs(), p + 1);
      break;
    }
  }
}

void collect(const Formula& f, std::vector<std::string>& out) {
  if (f.kind() == Formula::Kind::kTruth) {
    if (std::ranges::find(out, f.name()) == out.end()) out.push_back(f.name());
    return;
  }
  for (const Formula& c : f.children()) collect(c, out);
}

}  // namespace

std::string to_string(const Formula& f) {
  std::string out;
  render(f, out);
  return out;
}

std::vector<std::string> referenced_sentences(const Formula& f) {
  std::vector<std::string> out;
  collect(f, out);
  return out;
}

}  // namespace truthsem
