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

#ifndef TRUTHSEM_SEMANTIC_GRAPH_H_
#define TRUTHSEM_SEMANTIC_GRAPH_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "truthsem/formula.h"
#include "truthsem/system.h"

namespace truthsem {

// Dependency graph of a sentence: each construction points at its
// components, and each T(n) points at sentence n. Sentence nodes are shared,
// so self-reference shows up as a cycle.
struct SemanticGraph {
  enum class NodeKind { kSentence, kTrue, kFalse, kExternal, kTruth, kNot, kAnd, kOr };

  struct Node {
    NodeKind kind;
    // Sentence name (kSentence, kTruth) or atom id (kExternal).
    std::string name;
    // Set for construction nodes; unset for sentence nodes.
    std::optional<Formula> formula;
    std::vector<std::size_t> successors;
  };

  std::vector<Node> nodes;
  std::size_t root = 0;
};

// Node ids follow a depth-first construction order from the root sentence,
// so the graph is deterministic. Throws Error{kUnknownName}.
SemanticGraph semantic_graph(const SentenceSystem& system, std::string_view sentence);

}  // namespace truthsem

#endif  // TRUTHSEM_SEMANTIC_GRAPH_H_
