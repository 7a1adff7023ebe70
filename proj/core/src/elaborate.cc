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

#include "truthsem/elaborate.h"

#include <algorithm>
#include <map>
#include <optional>
#include <type_traits>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "truthsem/error.h"

namespace truthsem {

namespace {

using dsl::SurfaceFormula;
using Kind = SurfaceFormula::Kind;

// Innermost binding last.
using Environment = std::vector<std::pair<std::string, std::string>>;

class Elaborator {
 public:
  explicit Elaborator(const dsl::RawSystem& raw) : raw_(raw) {}

  SentenceSystem run() {
    declare_names();
    std::vector<Sentence> sentences;
    for (const dsl::Declaration& d : raw_.declarations) {
      if (const auto* s = std::get_if<dsl::SentenceDecl>(&d.item)) {
        sentences.push_back({s->name, lower(*s->body, {}), Provenance::kUserDeclared});
      }
    }
    for (Sentence& s : generated_) sentences.push_back(std::move(s));
    std::vector<ExternalAtom> externals;
    for (const dsl::Declaration& d : raw_.declarations) {
      if (const auto* e = std::get_if<dsl::ExternalDecl>(&d.item)) {
        externals.push_back({e->name, e->value});
      }
    }
    return SentenceSystem(raw_.name, std::move(sentences), std::move(externals), flags());
  }

 private:
  void declare_names() {
    for (const dsl::Declaration& d : raw_.declarations) {
      std::visit(
          [&](const auto& item) {
            using T = std::decay_t<decltype(item)>;
            if constexpr (std::is_same_v<T, dsl::ExternalDecl> ||
                          std::is_same_v<T, dsl::SentenceDecl>) {
              if (!taken_.insert(item.name).second) {
                throw Error(ErrorKind::kDuplicateName, "name '" + item.name + "' declared twice",
                            d.pos);
              }
              if constexpr (std::is_same_v<T, dsl::ExternalDecl>) {
                externals_.insert(item.name);
              } else {
                user_sentences_.push_back(item.name);
              }
            }
          },
          d.item);
    }
    if (user_sentences_.empty()) {
      throw Error(ErrorKind::kEmptySystem, "system '" + raw_.name + "' declares no sentences");
    }
    for (const dsl::Declaration& d : raw_.declarations) {
      if (const auto* e = std::get_if<dsl::ExpectDecl>(&d.item)) {
        if (!is_user_sentence(e->name)) {
          throw Error(ErrorKind::kUnknownName, "expectation for undeclared sentence '" + e->name + "'",
                      d.pos);
        }
      }
    }
  }

  SystemFlags flags() const {
    SystemFlags out;
    for (const dsl::Declaration& d : raw_.declarations) {
      const auto* f = std::get_if<dsl::FlagDecl>(&d.item);
      if (!f) continue;
      if (f->kind == "yablo") {
        if (f->target) {
          throw Error(ErrorKind::kUnknownFlag, "flag 'yablo' takes no sentence", d.pos);
        }
        out.yablo = true;
        continue;
      }
      std::vector<std::string>* list = f->kind == "sl"    ? &out.strengthened_liars
                                       : f->kind == "law" ? &out.excluded_middle_laws
                                                          : nullptr;
      if (!list) throw Error(ErrorKind::kUnknownFlag, "unknown flag '" + f->kind + "'", d.pos);
      if (!f->target) {
        throw Error(ErrorKind::kUnknownFlag, "flag '" + f->kind + "' needs a sentence name", d.pos);
      }
      if (!is_user_sentence(*f->target)) {
        throw Error(ErrorKind::kUnknownName, "flag on undeclared sentence '" + *f->target + "'",
                    d.pos);
      }
      list->push_back(*f->target);
    }
    return out;
  }

  bool is_user_sentence(const std::string& name) const {
    return std::ranges::find(user_sentences_, name) != user_sentences_.end();
  }

  static const std::string* bound(const Environment& env, const std::string& name) {
    for (auto it = env.rbegin(); it != env.rend(); ++it) {
      if (it->first == name) return &it->second;
    }
    return nullptr;
  }

  std::string resolve_sentence(const std::string& name, const Environment& env,
                               const SourcePos& pos) const {
    if (const std::string* target = bound(env, name)) return *target;
    if (is_user_sentence(name)) return name;
    if (externals_.contains(name)) {
      throw Error(ErrorKind::kUnknownName,
                  "'" + name + "' is an external atom, not a sentence; reference it bare", pos);
    }
    throw Error(ErrorKind::kUnknownName, "undeclared sentence '" + name + "'", pos);
  }

  std::vector<std::string> resolve_set(const dsl::NameSet& set, const Environment& env,
                                       const SourcePos& pos) const {
    if (set.all) return user_sentences_;
    std::vector<std::string> out;
    for (const std::string& n : set.names) {
      std::string target = resolve_sentence(n, env, pos);
      if (std::ranges::find(out, target) == out.end()) out.push_back(std::move(target));
    }
    return out;
  }

  std::string fresh(const std::string& base) {
    std::string name = base;
    while (taken_.contains(name)) name += '_';
    taken_.insert(name);
    return name;
  }

  // Sentence name standing for the argument of T/F/U.
  std::string argument_sentence(const dsl::PredicateArg& arg, const Environment& env,
                                const SourcePos& pos) {
    if (!arg.is_quote()) return resolve_sentence(arg.name, env, pos);
    Formula body = lower(*arg.quoted, env);
    std::string key = to_string(body);
    if (auto it = quote_names_.find(key); it != quote_names_.end()) return it->second;
    std::string name = fresh("quote_" + std::to_string(quote_names_.size() + 1));
    quote_names_.emplace(std::move(key), name);
    generated_.push_back({name, std::move(body), Provenance::kAutoQuote});
    return name;
  }

  std::string negation_sentence(const std::string& target) {
    if (auto it = negation_names_.find(target); it != negation_names_.end()) return it->second;
    std::string name = fresh("neg_" + target);
    negation_names_.emplace(target, name);
    generated_.push_back(
        {name, Formula::negation(Formula::truth(target)), Provenance::kAutoNegation});
    return name;
  }

  Formula lower(const SurfaceFormula& f, const Environment& env) {
    switch (f.kind) {
      case Kind::kTrue:
        return Formula::constant(true);
      case Kind::kFalse:
        return Formula::constant(false);
      case Kind::kIdent:
        if (bound(env, f.name) || is_user_sentence(f.name)) {
          throw Error(ErrorKind::kBareSentenceReference,
                      "sentence '" + f.name + "' used as a formula; write T(" + f.name + ")",
                      f.pos);
        }
        if (!externals_.contains(f.name)) {
          throw Error(ErrorKind::kUnknownName, "undeclared name '" + f.name + "'", f.pos);
        }
        return Formula::external(f.name);
      case Kind::kTruth:
        return Formula::truth(argument_sentence(f.arg, env, f.pos));
      case Kind::kFalsity:
        return falsity(argument_sentence(f.arg, env, f.pos));
      case Kind::kUndetermined: {
        std::string n = argument_sentence(f.arg, env, f.pos);
        return Formula::conjunction(Formula::negation(Formula::truth(n)),
                                    Formula::negation(falsity(n)));
      }
      case Kind::kNot:
        return Formula::negation(lower(*f.lhs, env));
      case Kind::kAnd:
        return Formula::conjunction(lower(*f.lhs, env), lower(*f.rhs, env));
      case Kind::kOr:
        return Formula::disjunction(lower(*f.lhs, env), lower(*f.rhs, env));
      case Kind::kImplies:
        return Formula::disjunction(Formula::negation(lower(*f.lhs, env)), lower(*f.rhs, env));
      case Kind::kIff: {
        Formula a = lower(*f.lhs, env);
        Formula b = lower(*f.rhs, env);
        return Formula::conjunction(Formula::disjunction(Formula::negation(a), b),
                                    Formula::disjunction(Formula::negation(b), a));
      }
      case Kind::kForall:
      case Kind::kExists: {
        std::vector<Formula> instances;
        for (const std::string& n : resolve_set(f.set, env, f.pos)) {
          Environment inner = env;
          inner.emplace_back(f.name, n);
          instances.push_back(lower(*f.lhs, inner));
        }
        return f.kind == Kind::kForall ? Formula::conjunction(instances)
                                       : Formula::disjunction(instances);
      }
      case Kind::kAtMost:
      case Kind::kAtLeast:
        return counting(f, resolve_set(f.set, env, f.pos));
    }
    return Formula::constant(false);
  }

  Formula falsity(const std::string& target) {
    return Formula::truth(negation_sentence(target));
  }

  // atmost k: no (k+1)-subset is all true. atleast k: some k-subset is all true.
  static Formula counting(const SurfaceFormula& f, const std::vector<std::string>& names) {
    const bool at_most = f.kind == Kind::kAtMost;
    const std::size_t subset_size = at_most ? std::size_t{f.count} + 1 : f.count;
    std::vector<Formula> terms;
    if (subset_size <= names.size()) {
      std::vector<std::size_t> pick(subset_size);
      for (std::size_t i = 0; i < subset_size; ++i) pick[i] = i;
      for (;;) {
        std::vector<Formula> atoms;
        for (std::size_t i : pick) atoms.push_back(Formula::truth(names[i]));
        Formula all_true = Formula::conjunction(atoms);
        terms.push_back(at_most ? Formula::negation(all_true) : all_true);
        // Next combination in lexicographic order.
        std::size_t i = subset_size;
        while (i > 0 && pick[i - 1] == names.size() - subset_size + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < subset_size; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
    return at_most ? Formula::conjunction(terms) : Formula::disjunction(terms);
  }

  const dsl::RawSystem& raw_;
  std::vector<std::string> user_sentences_;
  std::unordered_set<std::string> externals_;
  std::unordered_set<std::string> taken_;
  std::map<std::string, std::string> quote_names_;
  std::map<std::string, std::string> negation_names_;
  std::vector<Sentence> generated_;
};

dsl::SurfacePtr to_surface(const Formula& f) {
  SurfaceFormula s;
  switch (f.kind()) {
    case Formula::Kind::kTrue:
      s.kind = Kind::kTrue;
      break;
    case Formula::Kind::kFalse:
      s.kind = Kind::kFalse;
      break;
    case Formula::Kind::kExternal:
      s.kind = Kind::kIdent;
      s.name = f.name();
      break;
    case Formula::Kind::kTruth:
      s.kind = Kind::kTruth;
      s.arg.name = f.name();
      break;
    case Formula::Kind::kNot:
      s.kind = Kind::kNot;
      s.lhs = to_surface(f.lhs());
      break;
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr:
      s.kind = f.kind() == Formula::Kind::kAnd ? Kind::kAnd : Kind::kOr;
      s.lhs = to_surface(f.lhs());
      s.rhs = to_surface(f.rhs());
      break;
  }
  return std::make_shared<const SurfaceFormula>(std::move(s));
}

}  // namespace

SentenceSystem elaborate_system(const dsl::RawSystem& raw) { return Elaborator(raw).run(); }

SentenceSystem load_system(std::string_view text) {
  return elaborate_system(dsl::parse_system(text));
}

std::vector<dsl::ExpectDecl> expectations(const dsl::RawSystem& raw) {
  std::vector<dsl::ExpectDecl> out;
  for (const dsl::Declaration& d : raw.declarations) {
    if (const auto* e = std::get_if<dsl::ExpectDecl>(&d.item)) out.push_back(*e);
  }
  return out;
}

dsl::RawSystem to_raw(const SentenceSystem& system) {
  dsl::RawSystem raw{system.name(), {}};
  for (const ExternalAtom& atom : system.externals()) {
    raw.declarations.push_back({dsl::ExternalDecl{atom.name, atom.value}, {}});
  }
  for (const Sentence& s : system.sentences()) {
    raw.declarations.push_back({dsl::SentenceDecl{s.name, to_surface(s.body)}, {}});
  }
  const SystemFlags& flags = system.flags();
  if (flags.yablo) raw.declarations.push_back({dsl::FlagDecl{"yablo", std::nullopt}, {}});
  for (const std::string& n : flags.strengthened_liars) {
    raw.declarations.push_back({dsl::FlagDecl{"sl", n}, {}});
  }
  for (const std::string& n : flags.excluded_middle_laws) {
    raw.declarations.push_back({dsl::FlagDecl{"law", n}, {}});
  }
  return raw;
}

}  // namespace truthsem
