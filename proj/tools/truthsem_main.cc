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

// truthsem: fixed-point truth semantics for finite self-referential systems.
//
//   truthsem eval FILE [--json] [--mode mfp|full] [--closure lifp|mfp]
//   truthsem graph FILE --sentence NAME [--valuation none|mfp|lifp] [-o PATH]
//   truthsem corpus DIR
//   truthsem check FILE
//
// Common flags: --max-enum N (default TRUTH_MAX_ENUM or 3^12), --threads N.
// Exit codes: 0 success, 1 expectation/check failure, 2 input or usage error.

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "truthsem/report.h"

namespace {

void add_enumeration_flags(CLI::App* cmd, truthsem::EnumerationOptions& options) {
  cmd->add_option("--max-enum", options.limit, "Largest valuation space to enumerate")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--threads", options.threads, "Enumeration worker threads")
      ->check(CLI::Range(1u, 256u));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fixed-point truth semantics for finite self-referential sentence systems"};
  app.require_subcommand(1);

  truthsem::EnumerationOptions defaults;
  defaults.limit = truthsem::default_enumeration_limit();

  truthsem::EvalCommand eval{{}, defaults};
  std::string mode = "full";
  std::string closure = "lifp";
  CLI::App* eval_cmd = app.add_subcommand("eval", "Print the mfp/lifp/final verdict table");
  eval_cmd->add_option("file", eval.file, "System file (.tsys)")->required();
  eval_cmd->add_flag("--json", eval.json, "Emit JSON instead of a table");
  eval_cmd->add_option("--mode", mode, "mfp: minimal fixed point only; full: enumerate")
      ->check(CLI::IsMember({"mfp", "full"}));
  eval_cmd->add_option("--closure", closure, "Fixed point whose classical closure is reported")
      ->check(CLI::IsMember({"lifp", "mfp"}));
  add_enumeration_flags(eval_cmd, eval.enumeration);

  truthsem::GraphCommand graph{{}, {}, truthsem::GraphValuation::kNone, std::nullopt, defaults};
  std::string graph_valuation = "none";
  std::string graph_output;
  CLI::App* graph_cmd = app.add_subcommand("graph", "Export a semantic graph as DOT");
  graph_cmd->add_option("file", graph.file, "System file (.tsys)")->required();
  graph_cmd->add_option("--sentence", graph.sentence, "Root sentence")->required();
  graph_cmd->add_option("--valuation", graph_valuation, "Label nodes with this valuation")
      ->check(CLI::IsMember({"none", "mfp", "lifp"}));
  graph_cmd->add_option("-o,--output", graph_output, "Write to PATH instead of stdout");
  add_enumeration_flags(graph_cmd, graph.enumeration);

  truthsem::CorpusCommand corpus{{}, defaults};
  CLI::App* corpus_cmd = app.add_subcommand("corpus", "Check every .tsys file's expect directives");
  corpus_cmd->add_option("directory", corpus.directory, "Corpus directory")->required();
  add_enumeration_flags(corpus_cmd, corpus.enumeration);

  truthsem::CheckCommand check{{}, defaults};
  CLI::App* check_cmd = app.add_subcommand("check", "Run the primary and final model checks");
  check_cmd->add_option("file", check.file, "System file (.tsys)")->required();
  add_enumeration_flags(check_cmd, check.enumeration);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? truthsem::kExitOk : truthsem::kExitInputError;
  }

  if (*eval_cmd) {
    eval.enumerate = mode == "full";
    eval.closure_source = closure == "mfp" ? truthsem::ClosureSource::kMinimal
                                           : truthsem::ClosureSource::kLargestIntrinsic;
    return truthsem::run_eval(eval, std::cout, std::cerr);
  }
  if (*graph_cmd) {
    static const std::map<std::string, truthsem::GraphValuation> kValuations = {
        {"none", truthsem::GraphValuation::kNone},
        {"mfp", truthsem::GraphValuation::kMinimal},
        {"lifp", truthsem::GraphValuation::kLargestIntrinsic}};
    graph.valuation = kValuations.at(graph_valuation);
    if (!graph_output.empty()) graph.output = graph_output;
    return truthsem::run_graph(graph, std::cout, std::cerr);
  }
  if (*corpus_cmd) return truthsem::run_corpus(corpus, std::cout, std::cerr);
  return truthsem::run_check(check, std::cout, std::cerr);
}
