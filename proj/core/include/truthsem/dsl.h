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

#ifndef TRUTHSEM_DSL_H_
#define TRUTHSEM_DSL_H_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "truthsem/error.h"
#include "truthsem/truth_value.h"

namespace truthsem::dsl {

struct SurfaceFormula;
using SurfacePtr = std::shared_ptr<const SurfaceFormula>;

// `all` or an explicit `{a, b, c}` list.
struct NameSet {
  bool all = false;
  std::vector<std::string> names;

  friend bool operator==(const NameSet&, const NameSet&) = default;
};

// Argument of T/F/U: a sentence name or a quoted formula `<...>`.
struct PredicateArg {
  std::string name;
  SurfacePtr quoted;

  bool is_quote() const { return quoted != nullptr; }
};

// Surface formula as written, before elaboration. Positions are carried for
// diagnostics and ignored by equality.
struct SurfaceFormula {
  enum class Kind {
    kTrue,
    kFalse,
    kIdent,         // name
    kTruth,         // T(arg)
    kFalsity,       // F(arg)
    kUndetermined,  // U(arg)
    kNot,           // lhs
    kAnd,
    kOr,
    kImplies,
    kIff,     // lhs, rhs
    kForall,  // name = bound variable, set, lhs = body
    kExists,
    kAtMost,  // count, set
    kAtLeast,
  };

  Kind kind = Kind::kTrue;
  std::string name;
  PredicateArg arg;
  SurfacePtr lhs;
  SurfacePtr rhs;
  NameSet set;
  unsigned count = 0;
  SourcePos pos;
};

bool operator==(const SurfaceFormula& a, const SurfaceFormula& b);
bool operator==(const PredicateArg& a, const PredicateArg& b);

struct ExternalDecl {
  std::string name;
  ClassicalValue value;
  friend bool operator==(const ExternalDecl&, const ExternalDecl&) = default;
};

struct SentenceDecl {
  std::string name;
  SurfacePtr body;
  friend bool operator==(const SentenceDecl& a, const SentenceDecl& b) {
    return a.name == b.name && *a.body == *b.body;
  }
};

struct ExpectDecl {
  std::string name;
  std::optional<TruthValue3> mfp;
  std::optional<TruthValue3> lifp;
  std::optional<ClassicalValue> final_value;
  friend bool operator==(const ExpectDecl&, const ExpectDecl&) = default;
};

// `flag yablo`, `flag sl NAME`, `flag law NAME`.
struct FlagDecl {
  std::string kind;
  std::optional<std::string> target;
  friend bool operator==(const FlagDecl&, const FlagDecl&) = default;
};

struct Declaration {
  std::variant<ExternalDecl, SentenceDecl, ExpectDecl, FlagDecl> item;
  SourcePos pos;

  friend bool operator==(const Declaration& a, const Declaration& b) { return a.item == b.item; }
};

struct RawSystem {
  std::string name;
  std::vector<Declaration> declarations;

  friend bool operator==(const RawSystem&, const RawSystem&) = default;
};

// Throws ParseError (positioned) or Error{kEmptySystem} for input with no
// tokens at all.
RawSystem parse_system(std::string_view text);

// Parses a standalone formula; used by tests and tooling.
SurfacePtr parse_formula(std::string_view text);

// Canonical text; parse_system(format_system(r)) == r.
std::string format_system(const RawSystem& raw);
std::string format_formula(const SurfaceFormula& f);

bool is_keyword(std::string_view word);

}  // namespace truthsem::dsl

#endif  // TRUTHSEM_DSL_H_
