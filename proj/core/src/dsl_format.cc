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

#include <type_traits>

#include "truthsem/dsl.h"

namespace truthsem::dsl {

namespace {

using Kind = SurfaceFormula::Kind;

// Higher binds tighter. Quantifier bodies extend to the right as far as
// possible, so a quantifier nested under an operator is always parenthesized.
int precedence(Kind kind) {
  switch (kind) {
    case Kind::kForall:
    case Kind::kExists:
      return 0;
    case Kind::kIff:
      return 1;
    case Kind::kImplies:
      return 2;
    case Kind::kOr:
      return 3;
    case Kind::kAnd:
      return 4;
    case Kind::kNot:
      return 5;
    default:
      return 6;
  }
}

void render(const SurfaceFormula& f, std::string& out);

void render_child(const SurfaceFormula& f, int min_prec, std::string& out) {
  const bool parens = precedence(f.kind) < min_prec;
  if (parens) out += '(';
  render(f, out);
  if (parens) out += ')';
}

void render_set(const NameSet& set, std::string& out) {
  if (set.all) {
    out += "all";
    return;
  }
  out += '{';
  for (std::size_t i = 0; i < set.names.size(); ++i) {
    if (i > 0) out += ", ";
    out += set.names[i];
  }
  out += '}';
}

void render(const SurfaceFormula& f, std::string& out) {
  switch (f.kind) {
    case Kind::kTrue:
      out += "true";
      return;
    case Kind::kFalse:
      out += "false";
      return;
    case Kind::kIdent:
      out += f.name;
      return;
    case Kind::kTruth:
    case Kind::kFalsity:
    case Kind::kUndetermined:
      out += f.kind == Kind::kTruth ? "T(" : f.kind == Kind::kFalsity ? "F(" : "U(";
      if (f.arg.is_quote()) {
        out += '<';
        render(*f.arg.quoted, out);
        out += '>';
      } else {
        out += f.arg.name;
      }
      out += ')';
      return;
    case Kind::kNot:
      out += "not ";
      render_child(*f.lhs, precedence(Kind::kNot), out);
      return;
    case Kind::kAnd:
    case Kind::kOr:
    case Kind::kIff: {
      const int p = precedence(f.kind);
      render_child(*f.lhs, p, out);
      out += f.kind == Kind::kAnd ? " and " : f.kind == Kind::kOr ? " or " : " iff ";
      render_child(*f.rhs, p + 1, out);
      return;
    }
    case Kind::kImplies: {
      const int p = precedence(f.kind);
      render_child(*f.lhs, p + 1, out);
      out += " implies ";
      render_child(*f.rhs, p, out);
      return;
    }
    case Kind::kForall:
    case Kind::kExists:
      out += f.kind == Kind::kForall ? "forall " : "exists ";
      out += f.name;
      out += " in ";
      render_set(f.set, out);
      out += ": ";
      render(*f.lhs, out);
      return;
    case Kind::kAtMost:
    case Kind::kAtLeast:
      out += f.kind == Kind::kAtMost ? "atmost " : "atleast ";
      out += std::to_string(f.count);
      out += " of ";
      render_set(f.set, out);
      return;
  }
}

}  // namespace

std::string format_formula(const SurfaceFormula& f) {
  std::string out;
  render(f, out);
  return out;
}

std::string format_system(const RawSystem& raw) {
  std::string out = "system " + raw.name + "\n";
  if (!raw.declarations.empty()) out += '\n';
  for (const Declaration& d : raw.declarations) {
    std::visit(
        [&out](const auto& item) {
          using T = std::decay_t<decltype(item)>;
          if constexpr (std::is_same_v<T, ExternalDecl>) {
            out += "external " + item.name + " = " + (is_true(item.value) ? "true" : "false");
          } else if constexpr (std::is_same_v<T, SentenceDecl>) {
            out += "sentence " + item.name + " := " + format_formula(*item.body);
          } else if constexpr (std::is_same_v<T, ExpectDecl>) {
            out += "expect " + item.name;
            if (item.mfp) out += std::string(" mfp=") + to_code(*item.mfp);
            if (item.lifp) out += std::string(" lifp=") + to_code(*item.lifp);
            if (item.final_value) out += std::string(" final=") + to_code(*item.final_value);
          } else {
            out += "flag " + item.kind;
            if (item.target) out += " " + *item.target;
          }
        },
        d.item);
    out += '\n';
  }
  return out;
}

}  // namespace truthsem::dsl
