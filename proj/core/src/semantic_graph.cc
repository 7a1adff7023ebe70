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

#include "truthsem/semantic_graph.h"

#include <unordered_map>

namespace truthsem {

namespace {

class GraphBuilder {
 public:
  explicit GraphBuilder(const SentenceSystem& system) : system_(system) {}

  SemanticGraph build(std::string_view root) {
    graph_.root = sentence_node(system_.sentence(system_.require_index(root)).name);
    return std::move(graph_);
  }

 private:
  std::size_t add(SemanticGraph::Node node) {
    graph_.nodes.push_back(std::move(node));
    return graph_.nodes.size() - 1;
  }

  std::size_t sentence_node(const std::string& name) {
    if (auto it = sentence_ids_.find(name); it != sentence_ids_.end()) return it->second;
    const std::size_t id = add({SemanticGraph::NodeKind::kSentence, name, std::nullopt, {}});
    sentence_ids_.emplace(name, id);
    const std::size_t body = formula_node(system_.sentence(system_.require_index(name)).body);
    graph_.nodes[id].successors.push_back(body);
    return id;
  }

  std::size_t formula_node(const Formula& f) {
    using NodeKind = SemanticGraph::NodeKind;
    NodeKind kind = NodeKind::kTrue;
    switch (f.kind()) {
      case Formula::Kind::kTrue:
        kind = NodeKind::kTrue;
        break;
      case Formula::Kind::kFalse:
        kind = NodeKind::kFalse;
        break;
      case Formula::Kind::kExternal:
        kind = NodeKind::kExternal;
        break;
      case Formula::Kind::kTruth:
        kind = NodeKind::kTruth;
        break;
      case Formula::Kind::kNot:
        kind = NodeKind::kNot;
        break;
      case Formula::Kind::kAnd:
        kind = NodeKind::kAnd;
        break;
      case Formula::Kind::kOr:
        kind = NodeKind::kOr;
        break;
    }
    const std::size_t id = add({kind, f.name(), f, {}});
    if (f.kind() == Formula::Kind::kTruth) {
      const std::size_t target = sentence_node(f.name());
      graph_.nodes[id].successors.push_back(target);
      return id;
    }
    for (const Formula& c : f.children()) {
      const std::size_t child = formula_node(c);
      graph_.nodes[id].successors.push_back(child);
    }
    return id;
  }

  const SentenceSystem& system_;
  SemanticGraph graph_;
  std::unordered_map<std::string, std::size_t> sentence_ids_;
};

}  // namespace

SemanticGraph semantic_graph(const SentenceSystem& system, std::string_view sentence) {
  return GraphBuilder(system).build(sentence);
}

}  // namespace truthsem
