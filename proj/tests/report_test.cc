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

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "truthsem/elaborate.h"

namespace truthsem {
namespace {

namespace fs = std::filesystem;

const fs::path kCorpus = TRUTHSEM_CORPUS_DIR;

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("truthsem_test_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) + "_" +
             ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }
  fs::path write(const std::string& name, const std::string& text) const {
    std::ofstream(path_ / name, std::ios::binary) << text;
    return path_ / name;
  }

 private:
  fs::path path_;
};

struct CmdRun {
  int code;
  std::string out;
  std::string err;
};

CmdRun eval(const fs::path& file, bool json, unsigned threads = 1, bool enumerate = true) {
  std::ostringstream out, err;
  EvalCommand cmd{file, {.threads = threads}, enumerate, json, ClosureSource::kLargestIntrinsic};
  const int code = run_eval(cmd, out, err);
  return {code, out.str(), err.str()};
}

TEST(RenderJsonTest, LiarDocument) {
  const CmdRun r = eval(kCorpus / "liar.tsys", true);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out,
            "{\n"
            "  \"schema\": \"1\",\n"
            "  \"system\": \"liar\",\n"
            "  \"mode\": \"full\",\n"
            "  \"closure\": \"lifp\",\n"
            "  \"enumeration_limit_exceeded\": false,\n"
            "  \"fixed_points\": 1,\n"
            "  \"intrinsic_fixed_points\": 1,\n"
            "  \"sentences\": {\n"
            "    \"L\": {\n"
            "      \"mfp\": \"u\",\n"
            "      \"lifp\": \"u\",\n"
            "      \"final\": \"f\",\n"
            "      \"fp_count\": 1,\n"
            "      \"intrinsic_count\": 1\n"
            "    }\n"
            "  },\n"
            "  \"notes\": []\n"
            "}\n");
}

TEST(RenderJsonTest, UnavailableValuesAreNull) {
  const CmdRun r = eval(kCorpus / "logician.tsys", true, 1, false);
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("\"mode\": \"mfp\""), std::string::npos);
  EXPECT_NE(r.out.find("\"lifp\": null"), std::string::npos);
  EXPECT_NE(r.out.find("\"fixed_points\": null"), std::string::npos);
  EXPECT_NE(r.out.find("\"final\": \"f\""), std::string::npos);
}

TEST(RenderTextTest, Table) {
  const CmdRun r = eval(kCorpus / "truth_teller.tsys", false);
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out,
            "system truth_teller\n"
            "sentence  mfp  lifp  final\n"
            "I         u    u     f\n"
            "fixed points: 3, intrinsic: 1\n");
}

TEST(RenderTextTest, LimitExceeded) {
  const SentenceSystem s = load_system("system s\nsentence I := T(I)");
  const std::string text = render_text(verdict(s, {.enumeration = {.limit = 1}}));
  EXPECT_NE(text.find("I         u    -     -"), std::string::npos) << text;
  EXPECT_NE(text.find("fixed points: -, intrinsic: -"), std::string::npos);
  EXPECT_NE(text.find("note: 3^1"), std::string::npos) << text;
}

TEST(RenderDotTest, LiarUnderMinimalFixedPoint) {
  const SentenceSystem s = load_system("system liar\nsentence L := not T(L)");
  const Valuation mfp = minimal_fixed_point(s);
  const std::string dot = render_dot(s, semantic_graph(s, "L"), &mfp);
  EXPECT_EQ(dot,
            "digraph \"liar:L\" {\n"
            "  node [fontname=\"Helvetica\"];\n"
            "  n0 [shape=box, label=\"L\\nU\"];\n"
            "  n1 [shape=ellipse, label=\"not\\nU\"];\n"
            "  n2 [shape=ellipse, label=\"T(L)\\nU\"];\n"
            "  n0 -> n1;\n"
            "  n1 -> n2;\n"
            "  n2 -> n0;\n"
            "}\n");
}

TEST(RenderDotTest, GroundedLeafAndLawRoot) {
  const SentenceSystem g = load_system("system g\nexternal ext = true\nsentence g := ext");
  const Valuation v = minimal_fixed_point(g);
  const std::string dot = render_dot(g, semantic_graph(g, "g"), &v);
  EXPECT_NE(dot.find("[shape=plaintext, label=\"ext = true\\nT\"]"), std::string::npos) << dot;
  EXPECT_NE(dot.find("[shape=box, label=\"g\\nT\"]"), std::string::npos);

  const SentenceSystem lem = load_system(read_file(kCorpus / "excluded_middle_liar.tsys"));
  const Valuation lifp = largest_intrinsic_fixed_point(lem);
  const std::string dot2 = render_dot(lem, semantic_graph(lem, "law"), &lifp);
  EXPECT_NE(dot2.find("n0 [shape=box, label=\"law\\nU\"]"), std::string::npos) << dot2;
  EXPECT_EQ(render_dot(lem, semantic_graph(lem, "law"), nullptr).find("\\n"), std::string::npos);
}

TEST(ExitCodeTest, CorpusPasses) {
  std::ostringstream out, err;
  EXPECT_EQ(run_corpus(CorpusCommand{kCorpus, {}}, out, err), kExitOk) << out.str();
  EXPECT_NE(out.str().find("summary: 18 passed, 0 failed"), std::string::npos) << out.str();
}

TEST(ExitCodeTest, WrongExpectationFails) {
  TempDir dir;
  dir.write("a.tsys", "system a\nsentence L := F(L)\nexpect L final=t\n");
  std::ostringstream out, err;
  EXPECT_EQ(run_corpus(CorpusCommand{dir.path(), {}}, out, err), kExitFailed);
  EXPECT_NE(out.str().find("FAIL a.tsys\n  L.final: expected t, got f"), std::string::npos)
      << out.str();
}

TEST(ExitCodeTest, UnparsableCorpusFileFails) {
  TempDir dir;
  dir.write("bad.tsys", "system\n");
  std::ostringstream out, err;
  EXPECT_EQ(run_corpus(CorpusCommand{dir.path(), {}}, out, err), kExitFailed);
  EXPECT_NE(out.str().find("FAIL bad.tsys\n  ParseError at 2:1"), std::string::npos) << out.str();
}

TEST(ExitCodeTest, InputErrors) {
  TempDir dir;
  std::ostringstream out, err;
  EXPECT_EQ(run_corpus(CorpusCommand{dir.path() / "missing", {}}, out, err), kExitInputError);
  EXPECT_EQ(eval(dir.write("empty.tsys", ""), false).code, kExitInputError);
  EXPECT_EQ(eval(dir.write("unknown.tsys", "system s\nsentence a := T(b)"), false).code,
            kExitInputError);
  EXPECT_EQ(eval(dir.path() / "nope.tsys", false).code, kExitInputError);

  const CmdRun parse = eval(dir.write("parse.tsys", "system s\nsentence a := (T(a)"), false);
  EXPECT_EQ(parse.code, kExitInputError);
  EXPECT_NE(parse.err.find("ParseError at 2:20: unexpected end of input"), std::string::npos) << parse.err;

  GraphCommand graph{kCorpus / "liar.tsys", "nope", GraphValuation::kNone, std::nullopt, {}};
  EXPECT_EQ(run_graph(graph, out, err), kExitInputError);
}

TEST(ExitCodeTest, CheckCommand) {
  std::ostringstream out, err;
  EXPECT_EQ(run_check(CheckCommand{kCorpus / "strengthened_liar.tsys", {}}, out, err), kExitOk);
  EXPECT_NE(out.str().find("[pass] final/true-but-not-primary-true\n"), std::string::npos)
      << out.str();
  EXPECT_NE(out.str().find("result: pass"), std::string::npos);

  std::ostringstream out2;
  EXPECT_EQ(run_check(CheckCommand{kCorpus / "liar.tsys", {.limit = 3}}, out2, err), kExitOk);
  EXPECT_NE(out2.str().find("[skip] primary/t-scheme"), std::string::npos) << out2.str();
  EXPECT_NE(out2.str().find("[skip] final/*"), std::string::npos);
}

TEST(GraphCommandTest, WritesFile) {
  TempDir dir;
  std::ostringstream out, err;
  GraphCommand cmd{kCorpus / "liar.tsys", "L", GraphValuation::kLargestIntrinsic,
                   dir.path() / "liar.dot", {}};
  ASSERT_EQ(run_graph(cmd, out, err), kExitOk) << err.str();
  EXPECT_TRUE(out.str().empty());
  EXPECT_EQ(read_file(dir.path() / "liar.dot").rfind("digraph \"liar:L\"", 0), 0u);
}

TEST(DeterminismTest, ThreadCountIsInvisibleInOutput) {
  for (const auto& entry : fs::directory_iterator(kCorpus)) {
    if (entry.path().extension() != ".tsys") continue;
    for (bool json : {false, true}) {
      EXPECT_EQ(eval(entry.path(), json, 1).out, eval(entry.path(), json, 4).out) << entry.path();
    }
  }
}

TEST(EnumerationLimitTest, EnvironmentOverride) {
  ASSERT_EQ(setenv("TRUTH_MAX_ENUM", "100", 1), 0);
  EXPECT_EQ(default_enumeration_limit(), 100u);
  ASSERT_EQ(setenv("TRUTH_MAX_ENUM", "junk", 1), 0);
  EXPECT_EQ(default_enumeration_limit(), kDefaultEnumerationLimit);
  unsetenv("TRUTH_MAX_ENUM");
  EXPECT_EQ(default_enumeration_limit(), kDefaultEnumerationLimit);
}

}  // namespace
}  // namespace truthsem
