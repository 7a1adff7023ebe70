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

#include "truthsem/system.h"

#include <algorithm>
#include <utility>

#include "truthsem/error.h"

namespace truthsem {

namespace {

void check_references(const Formula& f, const SentenceSystem& system, const std::string& owner) {
  switch (f.kind()) {
    case Formula::Kind::kExternal:
      if (!system.external_value(f.name())) {
        throw Error(ErrorKind::kUnknownName,
                    "sentence '" + owner + "' uses undeclared external atom '" + f.name() + "'");
      }
      return;
    case Formula::Kind::kTruth:
      if (!system.index_of(f.name())) {
        throw Error(ErrorKind::kUnknownName,
                    "sentence '" + owner + "' refers to undeclared sentence '" + f.name() + "'");
      }
      return;
    default:
      for (const Formula& c : f.children()) check_references(c, system, owner);
  }
}

}  // namespace

SentenceSystem::SentenceSystem(std::string name, std::vector<Sentence> sentences,
                               std::vector<ExternalAtom> externals, SystemFlags flags)
    : name_(std::move(name)),
      sentences_(std::move(sentences)),
      externals_(std::move(externals)),
      flags_(std::move(flags)) {
  if (sentences_.empty()) {
    throw Error(ErrorKind::kEmptySystem, "system '" + name_ + "' declares no sentences");
  }
  for (const ExternalAtom& atom : externals_) {
    if (!external_values_.emplace(atom.name, atom.value).second) {
      throw Error(ErrorKind::kDuplicateName, "external atom '" + atom.name + "' declared twice");
    }
  }
  for (std::size_t i = 0; i < sentences_.size(); ++i) {
    const std::string& n = sentences_[i].name;
    if (external_values_.contains(n) || !index_.emplace(n, i).second) {
      throw Error(ErrorKind::kDuplicateName, "name '" + n + "' declared twice");
    }
  }
  for (const Sentence& s : sentences_) check_references(s.body, *this, s.name);
  for (const auto* list : {&flags_.strengthened_liars, &flags_.excluded_middle_laws}) {
    for (const std::string& n : *list) require_index(n);
  }
}

std::optional<std::size_t> SentenceSystem::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t SentenceSystem::require_index(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw Error(ErrorKind::kUnknownName, "no sentence named '" + std::string(name) + "'");
}

std::optional<ClassicalValue> SentenceSystem::external_value(std::string_view atom) const {
  auto it = external_values_.find(std::string(atom));
  if (it == external_values_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> SentenceSystem::user_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < sentences_.size(); ++i) {
    if (sentences_[i].provenance == Provenance::kUserDeclared) out.push_back(i);
  }
  return out;
}

bool operator==(const SentenceSystem& a, const SentenceSystem& b) {
  auto same_sentence = [](const Sentence& x, const Sentence& y) {
    return x.name == y.name && x.body == y.body && x.provenance == y.provenance;
  };
  auto same_atom = [](const ExternalAtom& x, const ExternalAtom& y) {
    return x.name == y.name && x.value == y.value;
  };
  return a.name_ == b.name_ && a.flags_ == b.flags_ &&
         std::ranges::equal(a.sentences_, b.sentences_, same_sentence) &&
         std::ranges::equal(a.externals_, b.externals_, same_atom);
}

bool Valuation::info_leq(const Valuation& other) const {
  if (size() != other.size()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (!truthsem::info_leq(values_[i], other.values_[i])) return false;
  }
  return true;
}

std::string to_string(const SentenceSystem& system, const Valuation& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ' ';
    out += system.sentence(i).name;
    out += '=';
    out += to_code(v[i]);
  }
  return out;
}

}  // namespace truthsem
