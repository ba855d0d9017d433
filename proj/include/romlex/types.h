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

// Shared domain types: varieties, part-of-speech categories, morphological
// feature bundles and the record types that flow between the entry parser,
// the lexicon store and the lemmatizer.

#ifndef ROMLEX_TYPES_H_
#define ROMLEX_TYPES_H_

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace romlex {

// The six written Romansh varieties. The enumerator order is the canonical
// order used for every tie-break in the toolkit.
enum class Variety {
  kSursilvan,
  kSutsilvan,
  kSurmiran,
  kPuter,
  kVallader,
  kRumantschGrischun,
};

inline constexpr std::array<Variety, 6> kAllVarieties = {
    Variety::kSursilvan, Variety::kSutsilvan, Variety::kSurmiran,
    Variety::kPuter,     Variety::kVallader,  Variety::kRumantschGrischun,
};

// Short lowercase name, e.g. "vallader" or "rumgr".
std::string_view VarietyName(Variety variety);

// Language tag, e.g. "rm-vallader". This is the canonical label.
std::string_view VarietyTag(Variety variety);

// Accepts the canonical tag, the short name and a few common aliases
// ("rg", "rumantsch-grischun"), case-insensitively. Throws
// Error(kUnknownVariety) for anything else.
Variety ParseVariety(std::string_view label);

enum class PosCategory { kNoun, kVerb, kAdjective, kOther };

inline constexpr std::array<PosCategory, 4> kAllPosCategories = {
    PosCategory::kNoun, PosCategory::kVerb, PosCategory::kAdjective,
    PosCategory::kOther};

// "N", "V", "ADJ" or "X".
std::string_view PosLabel(PosCategory pos);
PosCategory ParsePosLabel(std::string_view label);

enum class Gender { kMasc, kFem };
enum class Number { kSg, kPl };
enum class VerbForm { kFin, kInf, kPtcp, kGer };
enum class Tense { kPrs, kPst, kImpf, kFut };
enum class Mood { kInd, kSubj, kCond, kImp };

// Morphological features of a single form. Verb-only slots (verb_form,
// tense, person, mood) must stay empty for other parts of speech.
struct FeatureBundle {
  PosCategory pos = PosCategory::kOther;
  std::optional<Gender> gender;
  std::optional<Number> number;
  std::optional<VerbForm> verb_form;
  std::optional<Tense> tense;
  std::optional<int> person;
  std::optional<Mood> mood;

  bool Valid() const;

  // Canonical "PoS=V; VerbForm=PTCP; Tense=PST; Gender=FEM; Number=SG".
  std::string Serialize() const;

  // Compact "ADJ;MASC;SG" notation used in skeleton files.
  std::string SerializeCompact() const;

  // Parses either the key=value form (keys in any order) or the compact
  // form. Throws Error(kInvalidArgument) on unknown keys or values,
  // duplicated keys or verb features on a non-verb.
  static FeatureBundle Parse(std::string_view text);

  auto operator<=>(const FeatureBundle &) const = default;
};

// One unprocessed dictionary row.
struct RawEntry {
  std::string romansh_field;
  std::string german_field;
  std::optional<std::string> pos_hint;
  std::optional<std::string> gender_hint;
  Variety variety = Variety::kRumantschGrischun;
  int source_line = 0;

  // Throws Error(kMalformedEntry) when the Romansh field is blank, or when
  // the German field is blank and no POS hint is available either.
  void Validate() const;

  auto operator<=>(const RawEntry &) const = default;
};

// One surface form mapped to a lemma. The atomic lexicon unit.
struct FormRecord {
  std::string surface;
  std::string lemma;
  FeatureBundle features;
  std::string gloss;
  Variety variety = Variety::kRumantschGrischun;

  auto operator<=>(const FormRecord &) const = default;
};

// A lemmatizer answer for one surface form.
struct Analysis {
  std::string lemma;
  FeatureBundle features;
  std::string gloss;
  Variety variety = Variety::kRumantschGrischun;

  bool operator==(const Analysis &) const = default;
};

// Canonical analysis order: feature serialization, then lemma, then gloss,
// then variety. Grouping by feature string first keeps adjective, noun and
// verb readings of an ambiguous form together.
bool AnalysisLess(const Analysis &a, const Analysis &b);

Analysis ToAnalysis(const FormRecord &record);

}  // namespace romlex

#endif  // ROMLEX_TYPES_H_
