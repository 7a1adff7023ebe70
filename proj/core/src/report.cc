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

#include "truthsem/report.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "truthsem/elaborate.h"
#include "truthsem/error.h"

namespace truthsem {

namespace fs = std::filesystem;

std::uint64_t default_enumeration_limit() {
  const char* env = std::getenv("TRUTH_MAX_ENUM");
  if (env == nullptr) return kDefaultEnumerationLimit;
  std::string_view text(env);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
    return kDefaultEnumerationLimit;
  }
  return value;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

namespace {

std::string code_or_dash(const std::optional<TruthValue3>& v) {
  return v ? std::string(1, to_code(*v)) : "-";
}
std::string code_or_dash(const std::optional<ClassicalValue>& v) {
  return v ? std::string(1, to_code(*v)) : "-";
}
std::string count_or_dash(const std::optional<std::uint64_t>& n) {
  return n ? std::to_string(*n) : "-";
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

std::string render_text(const VerdictTable& table) {
  std::size_t width = std::string_view("sentence").size();
  for (const VerdictRow& row : table.rows) width = std::max(width, row.name.size());
  std::string out = "system " + table.system + "\n";
  out += pad("sentence", width) + "  mfp  lifp  final\n";
  for (const VerdictRow& row : table.rows) {
    out += pad(row.name, width) + "  " + pad(std::string(1, to_code(row.mfp)), 3) + "  " +
           pad(code_or_dash(row.lifp), 4) + "  " + code_or_dash(row.final_value) + "\n";
  }
  out += "fixed points: " + count_or_dash(table.fixed_point_count) +
         ", intrinsic: " + count_or_dash(table.intrinsic_count) + "\n";
  for (const std::string& note : table.notes) out += "note: " + note + "\n";
  return out;
}

std::string render_json(const VerdictTable& table) {
  using nlohmann::ordered_json;
  auto code = [](auto v) -> ordered_json {
    if (!v) return nullptr;
    return std::string(1, to_code(*v));
  };
  auto count = [](const std::optional<std::uint64_t>& n) -> ordered_json {
    if (!n) return nullptr;
    return *n;
  };
  ordered_json doc;
  doc["schema"] = "1";
  doc["system"] = table.system;
  doc["mode"] = table.enumerated ? "full" : "mfp";
  doc["closure"] = table.closure_source == ClosureSource::kMinimal ? "mfp" : "lifp";
  doc["enumeration_limit_exceeded"] = table.limit_exceeded;
  doc["fixed_points"] = count(table.fixed_point_count);
  doc["intrinsic_fixed_points"] = count(table.intrinsic_count);
  ordered_json sentences = ordered_json::object();
  for (const VerdictRow& row : table.rows) {
    ordered_json entry;
    entry["mfp"] = std::string(1, to_code(row.mfp));
    entry["lifp"] = code(row.lifp);
    entry["final"] = code(row.final_value);
    entry["fp_count"] = count(table.fixed_point_count);
    entry["intrinsic_count"] = count(table.intrinsic_count);
    sentences[row.name] = std::move(entry);
  }
  doc["sentences"] = std::move(sentences);
  doc["notes"] = table.notes;
  return doc.dump(2) + "\n";
}

std::string render_dot(const SentenceSystem& system, const SemanticGraph& graph,
                       const Valuation* valuation) {
  using NodeKind = SemanticGraph::NodeKind;
  const std::string root = graph.nodes[graph.root].name;
  std::string out = "digraph \"" + system.name() + ":" + root + "\" {\n";
  out += "  node [fontname=\"Helvetica\"];\n";
  for (std::size_t id = 0; id < graph.nodes.size(); ++id) {
    const SemanticGraph::Node& node = graph.nodes[id];
    std::string label;
    std::string shape = "ellipse";
    switch (node.kind) {
      case NodeKind::kSentence:
        label = node.name;
        shape = "box";
        break;
      case NodeKind::kTrue:
        label = "true";
        break;
      case NodeKind::kFalse:
        label = "false";
        break;
      case NodeKind::kExternal:
        label = node.name + " = " + (is_true(*system.external_value(node.name)) ? "true" : "false");
        shape = "plaintext";
        break;
      case NodeKind::kTruth:
        label = "T(" + node.name + ")";
        break;
      case NodeKind::kNot:
        label = "not";
        break;
      case NodeKind::kAnd:
        label = "and";
        break;
      case NodeKind::kOr:
        label = "or";
        break;
    }
    if (valuation != nullptr) {
      const TruthValue3 value = node.kind == NodeKind::kSentence
                                    ? valuation->at(system, node.name)
                                    : sk3_eval(*node.formula, *valuation, system);
      label += "\\n";
      label += static_cast<char>(std::toupper(static_cast<unsigned char>(to_code(value))));
    }
    out += "  n" + std::to_string(id) + " [shape=" + shape + ", label=\"" + label + "\"];\n";
  }
  for (std::size_t id = 0; id < graph.nodes.size(); ++id) {
    for (std::size_t succ : graph.nodes[id].successors) {
      out += "  n" + std::to_string(id) + " -> n" + std::to_string(succ) + ";\n";
    }
  }
  out += "}\n";
  return out;
}

bool FileResult::passed() const {
  return !error && std::ranges::all_of(outcomes, [](const auto& o) { return o.ok(); });
}

std::size_t CorpusResult::passed_count() const {
  return static_cast<std::size_t>(std::ranges::count_if(files, [](const auto& f) { return f.passed(); }));
}

std::size_t CorpusResult::failed_count() const { return files.size() - passed_count(); }

FileResult check_expectations(const fs::path& path, const EnumerationOptions& options) {
  FileResult result{path, std::nullopt, {}};
  try {
    const dsl::RawSystem raw = dsl::parse_system(read_file(path));
    const SentenceSystem system = elaborate_system(raw);
    const VerdictTable table = verdict(system, VerdictOptions{options, true, {}});
    for (const dsl::ExpectDecl& e : expectations(raw)) {
      const auto row = std::ranges::find(table.rows, e.name, &VerdictRow::name);
      if (e.mfp) result.outcomes.push_back({e.name, "mfp", to_code(*e.mfp), to_code(row->mfp)});
      if (e.lifp) {
        ExpectationOutcome o{e.name, "lifp", to_code(*e.lifp), std::nullopt};
        if (row->lifp) o.actual = to_code(*row->lifp);
        result.outcomes.push_back(o);
      }
      if (e.final_value) {
        ExpectationOutcome o{e.name, "final", to_code(*e.final_value), std::nullopt};
        if (row->final_value) o.actual = to_code(*row->final_value);
        result.outcomes.push_back(o);
      }
    }
  } catch (const Error& e) {
    result.error = e.what();
  }
  return result;
}

CorpusResult run_corpus(const fs::path& directory, const EnumerationOptions& options) {
  std::error_code ec;
  if (!fs::is_directory(directory, ec)) {
    throw Error(ErrorKind::kIo, "'" + directory.string() + "' is not a directory");
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(directory)) {
    if (entry.is_regular_file() && entry.path().extension() == ".tsys") files.push_back(entry.path());
  }
  std::ranges::sort(files);
  CorpusResult result;
  for (const fs::path& file : files) result.files.push_back(check_expectations(file, options));
  return result;
}

std::string render_corpus(const CorpusResult& result) {
  std::string out;
  for (const FileResult& file : result.files) {
    const std::string name = file.path.filename().string();
    if (file.passed()) {
      out += "PASS " + name + " (" + std::to_string(file.outcomes.size()) + " expectations)\n";
      continue;
    }
    out += "FAIL " + name + "\n";
    if (file.error) out += "  " + *file.error + "\n";
    for (const ExpectationOutcome& o : file.outcomes) {
      if (o.ok()) continue;
      out += "  " + o.sentence + "." + o.field + ": expected " + o.expected + ", got " +
             (o.actual ? std::string(1, *o.actual) : std::string("unavailable")) + "\n";
    }
  }
  out += "summary: " + std::to_string(result.passed_count()) + " passed, " +
         std::to_string(result.failed_count()) + " failed\n";
  return out;
}

int run_eval(const EvalCommand& cmd, std::ostream& out, std::ostream& err) {
  try {
    const SentenceSystem system = load_system(read_file(cmd.file));
    const VerdictTable table =
        verdict(system, VerdictOptions{cmd.enumeration, cmd.enumerate, cmd.closure_source});
    out << (cmd.json ? render_json(table) : render_text(table));
    return kExitOk;
  } catch (const Error& e) {
    err << cmd.file.string() << ": " << e.what() << "\n";
    return kExitInputError;
  }
}

int run_graph(const GraphCommand& cmd, std::ostream& out, std::ostream& err) {
  try {
    const SentenceSystem system = load_system(read_file(cmd.file));
    const SemanticGraph graph = semantic_graph(system, cmd.sentence);
    std::optional<Valuation> valuation;
    if (cmd.valuation == GraphValuation::kMinimal) {
      valuation = minimal_fixed_point(system);
    } else if (cmd.valuation == GraphValuation::kLargestIntrinsic) {
      valuation = largest_intrinsic_fixed_point(system, cmd.enumeration);
    }
    const std::string dot = render_dot(system, graph, valuation ? &*valuation : nullptr);
    if (!cmd.output) {
      out << dot;
      return kExitOk;
    }
    std::ofstream file(*cmd.output, std::ios::binary);
    if (!(file << dot)) throw Error(ErrorKind::kIo, "cannot write '" + cmd.output->string() + "'");
    return kExitOk;
  } catch (const Error& e) {
    err << cmd.file.string() << ": " << e.what() << "\n";
    return kExitInputError;
  }
}

int run_corpus(const CorpusCommand& cmd, std::ostream& out, std::ostream& err) {
  try {
    const CorpusResult result = run_corpus(cmd.directory, cmd.enumeration);
    out << render_corpus(result);
    return result.all_passed() ? kExitOk : kExitFailed;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kExitInputError;
  }
}

namespace {

std::string status_tag(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass:
      return "[pass]";
    case CheckStatus::kFail:
      return "[FAIL]";
    case CheckStatus::kSkipped:
      break;
  }
  return "[skip]";
}

}  // namespace

int run_check(const CheckCommand& cmd, std::ostream& out, std::ostream& err) {
  try {
    const SentenceSystem system = load_system(read_file(cmd.file));
    const FixedPointReport report = analyze_fixed_points(system, cmd.enumeration);
    std::vector<PropertyCheck> checks;
    for (PropertyCheck c : check_primary_properties(system, report)) {
      c.name = "primary/" + c.name;
      checks.push_back(std::move(c));
    }
    if (report.largest_intrinsic) {
      const FinalValuation final_valuation = classical_closure(system, *report.largest_intrinsic);
      for (PropertyCheck c : check_final_properties(system, *report.largest_intrinsic, final_valuation)) {
        c.name = "final/" + c.name;
        checks.push_back(std::move(c));
      }
    } else {
      checks.push_back({"final/*", CheckStatus::kSkipped, "enumeration limit exceeded"});
    }
    out << "check " << system.name() << "\n";
    bool failed = false;
    for (const PropertyCheck& c : checks) {
      out << status_tag(c.status) << " " << c.name;
      if (!c.detail.empty()) out << ": " << c.detail;
      out << "\n";
      failed = failed || c.status == CheckStatus::kFail;
    }
    out << "result: " << (failed ? "fail" : "pass") << "\n";
    return failed ? kExitFailed : kExitOk;
  } catch (const Error& e) {
    err << cmd.file.string() << ": " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace truthsem
