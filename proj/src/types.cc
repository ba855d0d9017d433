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

#include "romlex/types.h"

#include <string>
#include <tuple>
#include <vector>

#include "romlex/error.h"
#include "romlex/normalize.h"

namespace romlex {

const char *ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedEntry:
      return "MalformedEntry";
    case ErrorCode::kUnsupportedPattern:
      return "UnsupportedPattern";
    case ErrorCode::kMultiWord:
      return "MultiWord";
    case ErrorCode::kVarietyMismatch:
      return "VarietyMismatch";
    case ErrorCode::kIncompatibleVersion:
      return "IncompatibleVersion";
    case ErrorCode::kCorruptFile:
      return "CorruptFile";
    case ErrorCode::kUnknownVariety:
      return "UnknownVariety";
    case ErrorCode::kEmptyInput:
      return "EmptyInput";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kIo:
      return "Io";
  }
  return "Unknown";
}

namespace {

struct VarietyLabels {
  Variety variety;
  std::string_view name;
  std::string_view tag;
};

constexpr VarietyLabels kVarietyLabels[] = {
    {Variety::kSursilvan, "sursilvan", "rm-sursilvan"},
    {Variety::kSutsilvan, "sutsilvan", "rm-sutsilvan"},
    {Variety::kSurmiran, "surmiran", "rm-surmiran"},
    {Variety::kPuter, "puter", "rm-puter"},
    {Variety::kVallader, "vallader", "rm-vallader"},
    {Variety::kRumantschGrischun, "rumgr", "rm-rumgr"},
};

const VarietyLabels &LabelsFor(Variety variety) {
  return kVarietyLabels[static_cast<int>(variety)];
}

template <typename Enum, size_t N>
struct EnumTable {
  std::array<std::pair<Enum, std::string_view>, N> entries;

  std::string_view Name(Enum value) const {
    for (const auto &[e, name] : entries) {
      if (e == value) return name;
    }
    return "?";
  }

  std::optional<Enum> Find(std::string_view name) const {
    for (const auto &[e, n] : entries) {
      if (n == name) return e;
    }
    return std::nullopt;
  }
};

constexpr EnumTable<PosCategory, 4> kPosTable{{{
    {PosCategory::kNoun, "N"},
    {PosCategory::kVerb, "V"},
    {PosCategory::kAdjective, "ADJ"},
    {PosCategory::kOther, "X"},
}}};

constexpr EnumTable<Gender, 2> kGenderTable{{{
    {Gender::kMasc, "MASC"},
    {Gender::kFem, "FEM"},
}}};

constexpr EnumTable<Number, 2> kNumberTable{{{
    {Number::kSg, "SG"},
    {Number::kPl, "PL"},
}}};

constexpr EnumTable<VerbForm, 4> kVerbFormTable{{{
    {VerbForm::kFin, "FIN"},
    {VerbForm::kInf, "INF"},
    {VerbForm::kPtcp, "PTCP"},
    {VerbForm::kGer, "GER"},
}}};

constexpr EnumTable<Tense, 4> kTenseTable{{{
    {Tense::kPrs, "PRS"},
    {Tense::kPst, "PST"},
    {Tense::kImpf, "IMPF"},
    {Tense::kFut, "FUT"},
}}};

constexpr EnumTable<Mood, 4> kMoodTable{{{
    {Mood::kInd, "IND"},
    {Mood::kSubj, "SUBJ"},
    {Mood::kCond, "COND"},
    {Mood::kImp, "IMP"},
}}};

[[noreturn]] void BadFeatures(std::string_view text, std::string_view why) {
  throw Error(ErrorCode::kInvalidArgument, "invalid feature bundle '" +
                                               std::string(text) +
                                               "': " + std::string(why));
}

// Keys in serialization order.
enum class FeatureKey {
  kPos,
  kVerbForm,
  kTense,
  kMood,
  kPerson,
  kGender,
  kNumber
};

std::optional<FeatureKey> ParseKey(std::string_view key) {
  if (key == "PoS" || key == "POS") return FeatureKey::kPos;
  if (key == "VerbForm") return FeatureKey::kVerbForm;
  if (key == "Tense") return FeatureKey::kTense;
  if (key == "Mood") return FeatureKey::kMood;
  if (key == "Person") return FeatureKey::kPerson;
  if (key == "Gender") return FeatureKey::kGender;
  if (key == "Number") return FeatureKey::kNumber;
  return std::nullopt;
}

// Sets one slot; returns false if the value does not belong to the key.
bool SetSlot(FeatureBundle *bundle, FeatureKey key, std::string_view value) {
  switch (key) {
    case FeatureKey::kPos:
      if (auto v = kPosTable.Find(value)) {
        bundle->pos = *v;
        return true;
      }
      return false;
    case FeatureKey::kGender:
      if (auto v = kGenderTable.Find(value)) {
        bundle->gender = v;
        return true;
      }
      return false;
    case FeatureKey::kNumber:
      if (auto v = kNumberTable.Find(value)) {
        bundle->number = v;
        return true;
      }
      return false;
    case FeatureKey::kVerbForm:
      if (auto v = kVerbFormTable.Find(value)) {
        bundle->verb_form = v;
        return true;
      }
      return false;
    case FeatureKey::kTense:
      if (auto v = kTenseTable.Find(value)) {
        bundle->tense = v;
        return true;
      }
      return false;
    case FeatureKey::kMood:
      if (auto v = kMoodTable.Find(value)) {
        bundle->mood = v;
        return true;
      }
      return false;
    case FeatureKey::kPerson:
      if (value == "1" || value == "2" || value == "3") {
        bundle->person = value[0] - '0';
        return true;
      }
      return false;
  }
  return false;
}

// Compact notation carries no keys; every value names its own slot.
std::optional<FeatureKey> KeyForValue(std::string_view value) {
  if (kGenderTable.Find(value)) return FeatureKey::kGender;
  if (kNumberTable.Find(value)) return FeatureKey::kNumber;
  if (kVerbFormTable.Find(value)) return FeatureKey::kVerbForm;
  if (kTenseTable.Find(value)) return FeatureKey::kTense;
  if (kMoodTable.Find(value)) return FeatureKey::kMood;
  if (value == "1" || value == "2" || value == "3") return FeatureKey::kPerson;
  return std::nullopt;
}

std::vector<std::string_view> SplitOn(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  size_t start = 0;
  while (true) {
    size_t pos = text.find(sep, start);
    parts.push_back(Trim(text.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

std::string_view VarietyName(Variety variety) {
  return LabelsFor(variety).name;
}

std::string_view VarietyTag(Variety variety) { return LabelsFor(variety).tag; }

Variety ParseVariety(std::string_view label) {
  std::string lower = AsciiLower(Trim(label));
  for (const auto &labels : kVarietyLabels) {
    if (lower == labels.name || lower == labels.tag) return labels.variety;
  }
  if (lower == "rg" || lower == "rm-rg" || lower == "rumantsch-grischun" ||
      lower == "rumantschgrischun" || lower == "rumantsch_grischun") {
    return Variety::kRumantschGrischun;
  }
  if (lower == "rm-sursilv") return Variety::kSursilvan;
  if (lower == "rm-sutsilv") return Variety::kSutsilvan;
  throw Error(ErrorCode::kUnknownVariety,
              "unknown variety '" + std::string(label) + "'");
}

std::string_view PosLabel(PosCategory pos) { return kPosTable.Name(pos); }

PosCategory ParsePosLabel(std::string_view label) {
  if (auto pos = kPosTable.Find(Trim(label))) return *pos;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown PoS label '" + std::string(label) + "'");
}

bool FeatureBundle::Valid() const {
  if (pos != PosCategory::kVerb && (verb_form || tense || person || mood)) {
    return false;
  }
  if (person && (*person < 1 || *person > 3)) return false;
  return true;
}

std::string FeatureBundle::Serialize() const {
  std::string out = "PoS=";
  out += PosLabel(pos);
  auto add = [&out](std::string_view key, std::string_view value) {
    out += "; ";
    out += key;
    out += '=';
    out += value;
  };
  if (verb_form) add("VerbForm", kVerbFormTable.Name(*verb_form));
  if (tense) add("Tense", kTenseTable.Name(*tense));
  if (mood) add("Mood", kMoodTable.Name(*mood));
  if (person) add("Person", std::to_string(*person));
  if (gender) add("Gender", kGenderTable.Name(*gender));
  if (number) add("Number", kNumberTable.Name(*number));
  return out;
}

std::string FeatureBundle::SerializeCompact() const {
  std::string out(PosLabel(pos));
  auto add = [&out](std::string_view value) {
    out += ';';
    out += value;
  };
  if (verb_form) add(kVerbFormTable.Name(*verb_form));
  if (tense) add(kTenseTable.Name(*tense));
  if (mood) add(kMoodTable.Name(*mood));
  if (person) add(std::to_string(*person));
  if (gender) add(kGenderTable.Name(*gender));
  if (number) add(kNumberTable.Name(*number));
  return out;
}

FeatureBundle FeatureBundle::Parse(std::string_view text) {
  std::vector<std::string_view> parts = SplitOn(Trim(text), ';');
  if (parts.empty() || parts[0].empty()) BadFeatures(text, "empty");

  FeatureBundle bundle;
  bool seen[7] = {};
  const bool keyed = parts[0].find('=') != std::string_view::npos;
  for (size_t i = 0; i < parts.size(); ++i) {
    std::string_view part = parts[i];
    if (part.empty()) BadFeatures(text, "empty slot");
    std::optional<FeatureKey> key;
    std::string_view value;
    if (keyed) {
      size_t eq = part.find('=');
      if (eq == std::string_view::npos) BadFeatures(text, "missing '='");
      key = ParseKey(Trim(part.substr(0, eq)));
      value = Trim(part.substr(eq + 1));
      if (!key) BadFeatures(text, "unknown key");
    } else {
      value = part;
      key = i == 0 ? FeatureKey::kPos : KeyForValue(value);
      if (!key) BadFeatures(text, "unknown value");
    }
    int slot = static_cast<int>(*key);
    if (seen[slot]) BadFeatures(text, "duplicated key");
    seen[slot] = true;
    if (!SetSlot(&bundle, *key, value)) BadFeatures(text, "unknown value");
  }
  if (!seen[static_cast<int>(FeatureKey::kPos)]) BadFeatures(text, "no PoS");
  if (!bundle.Valid()) BadFeatures(text, "verb features on a non-verb");
  return bundle;
}

void RawEntry::Validate() const {
  if (Trim(romansh_field).empty()) {
    throw Error(
        ErrorCode::kMalformedEntry,
        "line " + std::to_string(source_line) + ": empty Romansh field");
  }
  const bool has_pos = pos_hint && !Trim(*pos_hint).empty();
  if (Trim(german_field).empty() && !has_pos) {
    throw Error(ErrorCode::kMalformedEntry,
                "line " + std::to_string(source_line) +
                    ": empty German field and no PoS annotation");
  }
}

bool AnalysisLess(const Analysis &a, const Analysis &b) {
  std::string fa = a.features.Serialize();
  std::string fb = b.features.Serialize();
  return std::tie(fa, a.lemma, a.gloss, a.variety) <
         std::tie(fb, b.lemma, b.gloss, b.variety);
}

Analysis ToAnalysis(const FormRecord &record) {
  return Analysis{record.lemma, record.features, record.gloss, record.variety};
}

}  // namespace romlex
