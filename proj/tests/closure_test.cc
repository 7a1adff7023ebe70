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

#include "truthsem/closure.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <random>

#include "support/generators.h"
#include "truthsem/elaborate.h"
#include "truthsem/error.h"
#include "truthsem/report.h"

namespace truthsem {
namespace {

constexpr auto kT = TruthValue3::kTrue;
constexpr auto kU = TruthValue3::kUndetermined;
constexpr auto kTrue = ClassicalValue::kTrue;
constexpr auto kFalse = ClassicalValue::kFalse;

const VerdictRow& row(const VerdictTable& t, std::string_view name) {
  for (const VerdictRow& r : t.rows) {
    if (r.name == name) return r;
  }
  throw std::out_of_range(std::string(name));
}

VerdictTable verdict_of(std::string_view text) { return verdict(load_system(text)); }

TEST(FinalSemanticsTest, LiarIsFalse) {
  const VerdictRow& r = row(verdict_of("system s\nsentence L := F(L)"), "L");
  EXPECT_EQ(r.mfp, kU);
  EXPECT_EQ(r.lifp, kU);
  EXPECT_EQ(r.final_value, kFalse);
}

TEST(FinalSemanticsTest, StrengthenedLiarIsTrue) {
  const VerdictRow& r = row(verdict_of("system s\nsentence SL := not T(SL)"), "SL");
  EXPECT_EQ(r.lifp, kU);
  EXPECT_EQ(r.final_value, kTrue);
}

TEST(FinalSemanticsTest, BurgeLiarIsTrue) {
  const VerdictRow& r = row(verdict_of("system s\nsentence BL := F(BL) or U(BL)"), "BL");
  EXPECT_EQ(r.lifp, kU);
  EXPECT_EQ(r.final_value, kTrue);
}

TEST(FinalSemanticsTest, TruthTellerIsFalse) {
  const VerdictRow& r = row(verdict_of("system s\nsentence I := T(I)"), "I");
  EXPECT_EQ(r.lifp, kU);
  EXPECT_EQ(r.final_value, kFalse);
}

TEST(FinalSemanticsTest, CurryIsTrue) {
  const VerdictRow& r =
      row(verdict_of("system s\nexternal l = false\nsentence C := T(C) implies l"), "C");
  EXPECT_EQ(r.lifp, kU);
  EXPECT_EQ(r.final_value, kTrue);
}

TEST(FinalSemanticsTest, IntensionalLiarPair) {
  const VerdictTable t =
      verdict_of("system s\nsentence s1 := not T(s1)\nsentence s2 := not T(<not T(s1)>)");
  for (const char* n : {"s1", "s2"}) EXPECT_EQ(row(t, n).final_value, kTrue) << n;
}

TEST(FinalSemanticsTest, GroundedSentencesKeepTheirValues) {
  const VerdictTable t = verdict_of(
      "system s\nexternal p = true\nsentence a := p\nsentence b := T(a) and not p");
  EXPECT_EQ(row(t, "a").final_value, kTrue);
  EXPECT_EQ(row(t, "b").final_value, kFalse);
  EXPECT_EQ(row(t, "b").mfp, TruthValue3::kFalse);
}

TEST(ClassicalClosureTest, RejectsNonFixedPoints) {
  const SentenceSystem s = load_system("system s\nsentence L := not T(L)");
  try {
    classical_closure(s, Valuation({kT}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotAFixedPoint);
  }
}

TEST(ClassicalClosureTest, StrengthenedLiarModelHoldsBothConjuncts) {
  const SentenceSystem s = load_system("system s\nsentence SL := not T(SL)\nflag sl SL");
  const Valuation primary = largest_intrinsic_fixed_point(s);
  const FinalValuation f = classical_closure(s, primary);
  EXPECT_EQ(f[0], kTrue);
  EXPECT_EQ(f.truth_atoms[0], kFalse);
  for (const PropertyCheck& c : check_final_properties(s, primary, f)) {
    EXPECT_NE(c.status, CheckStatus::kFail) << c.name << ": " << c.detail;
  }
}

TEST(ClassicalClosureTest, MinimalClosureSource) {
  const SentenceSystem s = load_system("system s\nsentence Log := T(Log) or T(<not T(Log)>)");
  EXPECT_EQ(row(verdict(s), "Log").final_value, kTrue);
  EXPECT_EQ(row(verdict(s, {.closure_source = ClosureSource::kMinimal}), "Log").final_value,
            kFalse);
  const VerdictTable mfp_only = verdict(s, {.enumerate = false});
  EXPECT_FALSE(mfp_only.enumerated);
  EXPECT_FALSE(row(mfp_only, "Log").lifp.has_value());
  EXPECT_FALSE(mfp_only.fixed_point_count.has_value());
  EXPECT_EQ(row(mfp_only, "Log").final_value, kFalse);
}

TEST(ClassicalClosureTest, LimitExceededLeavesFinalUnavailable) {
  const SentenceSystem s = load_system("system s\nsentence I := T(I)");
  const VerdictTable t = verdict(s, {.enumeration = {.limit = 2}});
  EXPECT_TRUE(t.limit_exceeded);
  EXPECT_FALSE(t.rows[0].lifp.has_value());
  EXPECT_FALSE(t.rows[0].final_value.has_value());
  EXPECT_FALSE(t.notes.empty());
}

TEST(VerdictTest, YabloCarriesCaveat) {
  const SentenceSystem s =
      load_system(read_file(std::filesystem::path(TRUTHSEM_CORPUS_DIR) / "yablo_03.tsys"));
  const VerdictTable t = verdict(s);
  ASSERT_EQ(t.notes.size(), 1u);
  EXPECT_NE(t.notes[0].find("Yablo"), std::string::npos);
  EXPECT_EQ(verdict(load_system("system s\nsentence I := T(I)")).notes.size(), 0u);
}

std::vector<std::filesystem::path> corpus_paths() {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(TRUTHSEM_CORPUS_DIR)) {
    if (e.path().extension() == ".tsys") out.push_back(e.path());
  }
  std::ranges::sort(out);
  return out;
}

// Totality, extension of the primary valuation and the derived predicates,
// checked for every fixed point of every system.
void expect_closure_properties(const SentenceSystem& s) {
  for (const Valuation& primary : enumerate_fixed_points(s)) {
    const FinalValuation f = classical_closure(s, primary);
    ASSERT_EQ(f.values.size(), s.size());
    EXPECT_EQ(classical_closure(s, primary), f);
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (is_classical(primary[i])) {
        EXPECT_EQ(to_truth3(f[i]), primary[i]) << s.name() << " " << s.sentence(i).name;
      }
      EXPECT_EQ(f.truth_atoms[i], to_classical(primary[i] == kT));
      EXPECT_EQ(final_falsity(s, primary, i),
                to_classical(primary[i] == TruthValue3::kFalse));
      EXPECT_EQ(final_undetermined(s, primary, i), to_classical(primary[i] == kU));
    }
    for (const PropertyCheck& c : check_final_properties(s, primary, f)) {
      if (c.name == "true-but-not-primary-true" || c.name == "excluded-middle-law") {
        continue;  // stated for the primary valuation the verdict uses
      }
      EXPECT_EQ(c.status, CheckStatus::kPass) << s.name() << " " << c.name << ": " << c.detail;
    }
  }
}

TEST(ClosurePropertiesTest, Corpus) {
  for (const auto& p : corpus_paths()) expect_closure_properties(load_system(read_file(p)));
}

TEST(ClosurePropertiesTest, RandomSystems) {
  std::mt19937 rng(5);
  for (int i = 0; i < 150; ++i) expect_closure_properties(testing::random_system(rng, 1 + i % 5, 3));
}

TEST(ClosurePropertiesTest, FlaggedChecksPassForVerdictPrimary) {
  for (const auto& p : corpus_paths()) {
    const SentenceSystem s = load_system(read_file(p));
    const Valuation primary = largest_intrinsic_fixed_point(s);
    for (const PropertyCheck& c : check_final_properties(s, primary, classical_closure(s, primary))) {
      EXPECT_NE(c.status, CheckStatus::kFail) << p << " " << c.name << ": " << c.detail;
    }
  }
}

}  // namespace
}  // namespace truthsem
