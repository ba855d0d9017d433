// Copyright 2026 The Romlex Authors.
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "romlex/types.h"

#include "doctest.h"
#include "romlex/error.h"

namespace romlex {
namespace {

TEST_CASE("variety labels") {
  CHECK(ParseVariety("rm-vallader") == Variety::kVallader);
  CHECK(ParseVariety("Vallader") == Variety::kVallader);
  CHECK(ParseVariety(" rg ") == Variety::kRumantschGrischun);
  CHECK(ParseVariety("rumantsch-grischun") == Variety::kRumantschGrischun);
  CHECK(ParseVariety("rm-sursilv") == Variety::kSursilvan);
  for (Variety v : kAllVarieties) {
    CHECK(ParseVariety(VarietyTag(v)) == v);
    CHECK(ParseVariety(VarietyName(v)) == v);
  }
  CHECK_THROWS_AS(ParseVariety("ladin"), Error);
  try {
    ParseVariety("xx");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kUnknownVariety);
  }
}

TEST_CASE("canonical variety order") {
  CHECK(Variety::kSursilvan < Variety::kSutsilvan);
  CHECK(Variety::kSurmiran < Variety::kVallader);
  CHECK(Variety::kVallader < Variety::kRumantschGrischun);
}

TEST_CASE("feature serialization follows the output table layout") {
  FeatureBundle f;
  f.pos = PosCategory::kVerb;
  f.verb_form = VerbForm::kPtcp;
  f.tense = Tense::kPst;
  f.gender = Gender::kFem;
  f.number = Number::kSg;
  CHECK(f.Serialize() ==
        "PoS=V; VerbForm=PTCP; Tense=PST; Gender=FEM; Number=SG");
  CHECK(f.SerializeCompact() == "V;PTCP;PST;FEM;SG");

  FeatureBundle adj;
  adj.pos = PosCategory::kAdjective;
  adj.gender = Gender::kFem;
  adj.number = Number::kSg;
  CHECK(adj.Serialize() == "PoS=ADJ; Gender=FEM; Number=SG");
  CHECK(FeatureBundle{}.Serialize() == "PoS=X");
}

TEST_CASE("feature parsing accepts both notations in any key order") {
  FeatureBundle a = FeatureBundle::Parse("Number=SG; PoS=N; Gender=MASC");
  CHECK(a.Serialize() == "PoS=N; Gender=MASC; Number=SG");
  CHECK(FeatureBundle::Parse("ADJ;MASC;SG") ==
        FeatureBundle::Parse("PoS=ADJ; Gender=MASC; Number=SG"));
  FeatureBundle v = FeatureBundle::Parse(
      "PoS=V; VerbForm=FIN; Tense=IMPF; Mood=IND; Person=3; Number=SG");
  CHECK(v.person == 3);
  CHECK(v.mood == Mood::kInd);
}

TEST_CASE("feature parsing rejects bad input") {
  for (const char *bad :
       {"", "PoS=Q", "Gender=FEM", "PoS=N; PoS=V", "PoS=N; Tense=PST",
        "PoS=V; Colour=RED", "ADJ;MASC;FEM", "PoS=V; Person=9"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(FeatureBundle::Parse(bad), Error);
  }
}

TEST_CASE("feature serialization round-trips over the whole inventory") {
  int checked = 0;
  for (PosCategory pos : kAllPosCategories) {
    for (int g = -1; g < 2; ++g) {
      for (int n = -1; n < 2; ++n) {
        for (int vf = -1; vf < 4; ++vf) {
          FeatureBundle f;
          f.pos = pos;
          if (g >= 0) f.gender = static_cast<Gender>(g);
          if (n >= 0) f.number = static_cast<Number>(n);
          if (vf >= 0 && pos == PosCategory::kVerb) {
            f.verb_form = static_cast<VerbForm>(vf);
            f.tense = static_cast<Tense>(vf);
            f.mood = static_cast<Mood>(vf);
            f.person = vf % 3 + 1;
          }
          REQUIRE(f.Valid());
          CHECK(FeatureBundle::Parse(f.Serialize()) == f);
          CHECK(FeatureBundle::Parse(f.SerializeCompact()) == f);
          ++checked;
        }
      }
    }
  }
  CHECK(checked == 4 * 3 * 3 * 5);
}

TEST_CASE("raw entry validation") {
  RawEntry ok{
      "armaziun", "Bewaffnung", std::nullopt, "f", Variety::kRumantschGrischun,
      1};
  CHECK_NOTHROW(ok.Validate());
  RawEntry blank_romansh = ok;
  blank_romansh.romansh_field = "  ";
  CHECK_THROWS_AS(blank_romansh.Validate(), Error);
  RawEntry blank_german = ok;
  blank_german.german_field = " ";
  CHECK_THROWS_AS(blank_german.Validate(), Error);
  blank_german.pos_hint = "adj";
  CHECK_NOTHROW(blank_german.Validate());
}

TEST_CASE("analysis order puts features first") {
  Analysis adj{"fomantà", FeatureBundle::Parse("ADJ;FEM;SG"), "hungrig",
               Variety::kVallader};
  Analysis noun{"fomantada", FeatureBundle::Parse("N;FEM;SG"), "Hungrige",
                Variety::kVallader};
  Analysis verb{"fomantar", FeatureBundle::Parse("V;PTCP;PST;FEM;SG"),
                "aushungern", Variety::kVallader};
  CHECK(AnalysisLess(adj, noun));
  CHECK(AnalysisLess(noun, verb));
  CHECK_FALSE(AnalysisLess(verb, adj));
  CHECK_FALSE(AnalysisLess(adj, adj));
}

}  // namespace
}  // namespace romlex
