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

#ifndef TRUTHSEM_SYSTEM_H_
#define TRUTHSEM_SYSTEM_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "truthsem/formula.h"
#include "truthsem/truth_value.h"

namespace truthsem {

enum class Provenance { kUserDeclared, kAutoQuote, kAutoNegation };

struct Sentence {
  std::string name;
  Formula body;
  Provenance provenance = Provenance::kUserDeclared;
};

struct ExternalAtom {
  std::string name;
  ClassicalValue value;
};

// Annotations carried over from `flag` declarations.
struct SystemFlags {
  bool yablo = false;
  // Sentences checked for the "true, yet not true in the primary model" conjunction.
  std::vector<std::string> strengthened_liars;
  // Sentences that state the excluded-middle law.
  std::vector<std::string> excluded_middle_laws;

  friend bool operator==(const SystemFlags&, const SystemFlags&) = default;
};

// A closed, finite system of named sentences. Sentence order is declaration
// order followed by auto-generated names in generation order.
class SentenceSystem {
 public:
  // Throws Error{kDuplicateName, kUnknownName, kEmptySystem} unless every
  // reference resolves and names are unique.
  SentenceSystem(std::string name, std::vector<Sentence> sentences,
                 std::vector<ExternalAtom> externals, SystemFlags flags = {});

  const std::string& name() const { return name_; }
  std::span<const Sentence> sentences() const { return sentences_; }
  std::span<const ExternalAtom> externals() const { return externals_; }
  const SystemFlags& flags() const { return flags_; }

  std::size_t size() const { return sentences_.size(); }
  const Sentence& sentence(std::size_t index) const { return sentences_[index]; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  // Throws Error{kUnknownName}.
  std::size_t require_index(std::string_view name) const;
  std::optional<ClassicalValue> external_value(std::string_view atom) const;

  // Indices of user-declared sentences, in declaration order.
  std::vector<std::size_t> user_indices() const;

  friend bool operator==(const SentenceSystem& a, const SentenceSystem& b);

 private:
  std::string name_;
  std::vector<Sentence> sentences_;
  std::vector<ExternalAtom> externals_;
  SystemFlags flags_;
  std::unordered_map<std::string, std::size_t> index_;
  std::unordered_map<std::string, ClassicalValue> external_values_;
};

// Total map from the sentences of one system (by index) to three-valued truth.
class Valuation {
 public:
  Valuation() = default;
  explicit Valuation(std::vector<TruthValue3> values) : values_(std::move(values)) {}
  static Valuation undetermined(std::size_t size) {
    return Valuation(std::vector<TruthValue3>(size, TruthValue3::kUndetermined));
  }

  std::size_t size() const { return values_.size(); }
  TruthValue3 operator[](std::size_t i) const { return values_[i]; }
  TruthValue3& operator[](std::size_t i) { return values_[i]; }
  std::span<const TruthValue3> values() const { return values_; }

  TruthValue3 at(const SentenceSystem& system, std::string_view name) const {
    return values_[system.require_index(name)];
  }

  // Pointwise information order.
  bool info_leq(const Valuation& other) const;

  friend bool operator==(const Valuation&, const Valuation&) = default;
  // Canonical order: lexicographic over names, Undetermined < False < True.
  friend auto operator<=>(const Valuation&, const Valuation&) = default;

 private:
  std::vector<TruthValue3> values_;
};

// "L=u neg_L=u"
std::string to_string(const SentenceSystem& system, const Valuation& v);

}  // namespace truthsem

#endif  // TRUTHSEM_SYSTEM_H_
