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

#include "truthsem/dsl.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "support/generators.h"
#include "truthsem/elaborate.h"
#include "truthsem/report.h"

namespace truthsem::dsl {
namespace {

using Kind = SurfaceFormula::Kind;

TEST(ParseSystemTest, StrengthenedLiarHasOneSentence) {
  const RawSystem raw = parse_system("system liar\nsentence L := not T(L)");
  EXPECT_EQ(raw.name, "liar");
  ASSERT_EQ(raw.declarations.size(), 1u);
  const auto& s = std::get<SentenceDecl>(raw.declarations[0].item);
  EXPECT_EQ(s.name, "L");
  EXPECT_EQ(s.body->kind, Kind::kNot);
  EXPECT_EQ(s.body->lhs->kind, Kind::kTruth);
  EXPECT_EQ(s.body->lhs->arg.name, "L");
}

TEST(ParseSystemTest, CurryConditional) {
  const RawSystem raw =
      parse_system("system curry\nexternal bad = false\nsentence c := T(c) implies bad\n");
  ASSERT_EQ(raw.declarations.size(), 2u);
  EXPECT_EQ(std::get<ExternalDecl>(raw.declarations[0].item).value, ClassicalValue::kFalse);
  const auto& body = std::get<SentenceDecl>(raw.declarations[1].item).body;
  EXPECT_EQ(body->kind, Kind::kImplies);
  EXPECT_EQ(body->rhs->kind, Kind::kIdent);
  EXPECT_EQ(body->rhs->name, "bad");
}

TEST(ParseSystemTest, UndeclaredReferenceIsNotAParseError) {
  const RawSystem raw = parse_system("system s\nsentence x := T(y)");
  EXPECT_EQ(raw.declarations.size(), 1u);
  try {
    elaborate_system(raw);
    FAIL() << "expected UnknownName";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUnknownName);
  }
}

TEST(ParseSystemTest, Precedence) {
  // not > and > or > implies > iff
  const SurfacePtr f = parse_formula("not T(a) and T(b) or T(c) implies T(d) iff T(e)");
  ASSERT_EQ(f->kind, Kind::kIff);
  ASSERT_EQ(f->lhs->kind, Kind::kImplies);
  ASSERT_EQ(f->lhs->lhs->kind, Kind::kOr);
  ASSERT_EQ(f->lhs->lhs->lhs->kind, Kind::kAnd);
  EXPECT_EQ(f->lhs->lhs->lhs->lhs->kind, Kind::kNot);
}

TEST(ParseSystemTest, Associativity) {
  const SurfacePtr imp = parse_formula("T(a) implies T(b) implies T(c)");
  EXPECT_EQ(imp->rhs->kind, Kind::kImplies);
  const SurfacePtr conj = parse_formula("T(a) and T(b) and T(c)");
  EXPECT_EQ(conj->lhs->kind, Kind::kAnd);
  const SurfacePtr disj = parse_formula("T(a) or T(b) or T(c)");
  EXPECT_EQ(disj->lhs->kind, Kind::kOr);
}

TEST(ParseSystemTest, QuantifierBodyExtendsRight) {
  const SurfacePtr f = parse_formula("forall x in {a, b}: T(x) and T(c)");
  ASSERT_EQ(f->kind, Kind::kForall);
  EXPECT_EQ(f->lhs->kind, Kind::kAnd);
  EXPECT_EQ(f->set.names, (std::vector<std::string>{"a", "b"}));
}

TEST(ParseSystemTest, CountingQuotesAndSets) {
  const SurfacePtr f = parse_formula("atmost 1 of all or atleast 2 of {} or F(<not T(a)>)");
  ASSERT_EQ(f->kind, Kind::kOr);
  EXPECT_EQ(f->lhs->lhs->kind, Kind::kAtMost);
  EXPECT_TRUE(f->lhs->lhs->set.all);
  EXPECT_EQ(f->lhs->rhs->count, 2u);
  EXPECT_TRUE(f->lhs->rhs->set.names.empty());
  EXPECT_EQ(f->rhs->kind, Kind::kFalsity);
  ASSERT_TRUE(f->rhs->arg.is_quote());
  EXPECT_EQ(f->rhs->arg.quoted->kind, Kind::kNot);
}

TEST(ParseSystemTest, ExpectAndFlagDirectives) {
  const RawSystem raw = parse_system(
      "system s # trailing comment\n"
      "sentence L := not T(L)\n"
      "expect L final=t mfp=u\n"
      "flag sl L\n"
      "flag yablo\n");
  ASSERT_EQ(raw.declarations.size(), 4u);
  const auto& e = std::get<ExpectDecl>(raw.declarations[1].item);
  EXPECT_EQ(e.mfp, TruthValue3::kUndetermined);
  EXPECT_FALSE(e.lifp.has_value());
  EXPECT_EQ(e.final_value, ClassicalValue::kTrue);
  EXPECT_EQ(std::get<FlagDecl>(raw.declarations[2].item).target, "L");
  EXPECT_FALSE(std::get<FlagDecl>(raw.declarations[3].item).target.has_value());
}

TEST(ParseErrorTest, CarriesPositionAndExpectedTokens) {
  try {
    parse_system("system s\nsentence L := not\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kParse);
    ASSERT_TRUE(e.pos().has_value());
    EXPECT_EQ(e.pos()->line, 3u);
    EXPECT_EQ(e.pos()->column, 1u);
    EXPECT_EQ(e.expected(), std::vector<std::string>{"formula"});
  }
}

TEST(ParseErrorTest, KeywordsAreReserved) {
  EXPECT_THROW(parse_system("system s\nsentence and := true"), ParseError);
  EXPECT_THROW(parse_system("system T\nsentence a := true"), ParseError);
}

TEST(ParseErrorTest, ExpectNeedsAField) {
  EXPECT_THROW(parse_system("system s\nsentence a := true\nexpect a"), ParseError);
  EXPECT_THROW(parse_system("system s\nsentence a := true\nexpect a mfp=x"), ParseError);
  EXPECT_THROW(parse_system("system s\nsentence a := true\nexpect a final=u"), ParseError);
  EXPECT_THROW(parse_system("system s\nsentence a := true\nexpect a mfp=t mfp=t"), ParseError);
}

TEST(ParseErrorTest, EmptyInputIsEmptySystem) {
  try {
    parse_system("  # nothing here\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kEmptySystem);
  }
}

TEST(ParseErrorTest, PositionsStayWithinInput) {
  const std::string inputs[] = {
      "system", "system s\nsentence", "system s\nsentence a := (T(a)", "system s\nsentence a := T(<a",
      "system s\nexternal e = maybe", "system s\nsentence a := atmost x of all", "system s $",
      "system s\nsentence a := forall x {a}: T(x)", "sys"};
  for (const std::string& text : inputs) {
    try {
      parse_system(text);
      ADD_FAILURE() << "parsed: " << text;
    } catch (const ParseError& e) {
      ASSERT_TRUE(e.pos().has_value());
      EXPECT_LE(e.pos()->offset, text.size()) << text;
      EXPECT_GE(e.pos()->line, 1u);
    }
  }
}

TEST(FormatSystemTest, NormalizesWhitespaceAndParenthesizes) {
  const RawSystem raw = parse_system(
      "system   s\n\n  sentence a :=   (T(a) or T(b))   and not (T(b) and T(a))\n"
      "sentence b := T(a) implies (T(b) implies T(a))\n"
      "sentence c := (T(a) implies T(b)) implies T(a)\n"
      "sentence d := not (forall x in all: T(x))\n");
  EXPECT_EQ(format_system(raw),
            "system s\n\n"
            "sentence a := (T(a) or T(b)) and not (T(b) and T(a))\n"
            "sentence b := T(a) implies T(b) implies T(a)\n"
            "sentence c := (T(a) implies T(b)) implies T(a)\n"
            "sentence d := not (forall x in all: T(x))\n");
}

TEST(FormatSystemTest, PreservesDeclarationOrder) {
  const std::string text =
      "system s\n\nsentence b := T(a)\nexternal e = true\nsentence a := e\nexpect a lifp=t\n";
  EXPECT_EQ(format_system(parse_system(text)), text);
}

TEST(RoundTripTest, CorpusFiles) {
  for (const auto& entry : std::filesystem::directory_iterator(TRUTHSEM_CORPUS_DIR)) {
    if (entry.path().extension() != ".tsys") continue;
    const RawSystem raw = parse_system(read_file(entry.path()));
    const std::string once = format_system(raw);
    EXPECT_EQ(parse_system(once), raw) << entry.path();
    EXPECT_EQ(format_system(parse_system(once)), once) << entry.path();
  }
}

TEST(RoundTripTest, RandomFormulasParseBackAfterFormatting) {
  std::mt19937 rng(20261015);
  const std::vector<std::string> sentences = {"a", "b", "c"};
  const std::vector<std::string> externals = {"p", "q"};
  for (int i = 0; i < 500; ++i) {
    const SurfacePtr f = testing::random_surface(rng, sentences, externals, {}, 5);
    const std::string text = format_formula(*f);
    const SurfacePtr back = parse_formula(text);
    ASSERT_EQ(*back, *f) << text;
  }
}

}  // namespace
}  // namespace truthsem::dsl
