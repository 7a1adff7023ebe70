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

#ifndef TRUTHSEM_REPORT_H_
#define TRUTHSEM_REPORT_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "truthsem/closure.h"
#include "truthsem/semantic_graph.h"

namespace truthsem {

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitInputError = 2;

// TRUTH_MAX_ENUM if set to a positive integer, else kDefaultEnumerationLimit.
std::uint64_t default_enumeration_limit();

std::string read_file(const std::filesystem::path& path);

std::string render_text(const VerdictTable& table);
// {"schema":"1", ..., "sentences": {name: {mfp, lifp, final, fp_count,
// intrinsic_count}}}; unavailable values are null.
std::string render_json(const VerdictTable& table);

// DOT digraph; with a valuation, every node label carries its value.
std::string render_dot(const SentenceSystem& system, const SemanticGraph& graph,
                       const Valuation* valuation);

struct ExpectationOutcome {
  std::string sentence;
  std::string field;  // mfp, lifp or final
  char expected = 'u';
  std::optional<char> actual;  // unset when unavailable
  bool ok() const { return actual && *actual == expected; }
};

struct FileResult {
  std::filesystem::path path;
  std::optional<std::string> error;
  std::vector<ExpectationOutcome> outcomes;
  bool passed() const;
};

struct CorpusResult {
  std::vector<FileResult> files;
  std::size_t passed_count() const;
  std::size_t failed_count() const;
  bool all_passed() const { return failed_count() == 0; }
};

// Compares a file's expect directives with its verdict table.
FileResult check_expectations(const std::filesystem::path& path, const EnumerationOptions& options);

// Every *.tsys file of a directory, in file-name order. Throws Error{kIo}
// when the directory is missing.
CorpusResult run_corpus(const std::filesystem::path& directory, const EnumerationOptions& options);
std::string render_corpus(const CorpusResult& result);

struct EvalCommand {
  std::filesystem::path file;
  EnumerationOptions enumeration;
  bool enumerate = true;
  bool json = false;
  ClosureSource closure_source = ClosureSource::kLargestIntrinsic;
};

enum class GraphValuation { kNone, kMinimal, kLargestIntrinsic };

struct GraphCommand {
  std::filesystem::path file;
  std::string sentence;
  GraphValuation valuation = GraphValuation::kNone;
  std::optional<std::filesystem::path> output;
  EnumerationOptions enumeration;
};

struct CorpusCommand {
  std::filesystem::path directory;
  EnumerationOptions enumeration;
};

struct CheckCommand {
  std::filesystem::path file;
  EnumerationOptions enumeration;
};

// Each returns the process exit code; results go to `out`, diagnostics to `err`.
int run_eval(const EvalCommand& cmd, std::ostream& out, std::ostream& err);
int run_graph(const GraphCommand& cmd, std::ostream& out, std::ostream& err);
int run_corpus(const CorpusCommand& cmd, std::ostream& out, std::ostream& err);
int run_check(const CheckCommand& cmd, std::ostream& out, std::ostream& err);

}  // namespace truthsem

#endif  // TRUTHSEM_REPORT_H_
