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

#include "romlex/entry_parser.h"

#include <unicode/uchar.h>

#include <algorithm>
#include <string>
#include <vector>

#include "romlex/error.h"
#include "romlex/normalize.h"

namespace romlex {

namespace {

[[noreturn]] void Malformed(const std::string &what) {
  throw Error(ErrorCode::kMalformedEntry, what);
}

[[noreturn]] void Unsupported(const std::string &signature,
                              const std::string &why) {
  throw Error(ErrorCode::kUnsupportedPattern,
              "unsupported pattern '" + signature + "': " + why);
}

// Punctuation that separates pattern tokens. Apostrophes, hyphens, slashes
// and dots belong to words ("d’", "m/f", "m.").
bool IsStructuralPunct(char32_t c) {
  if (IsApostrophe(c) || c == '-' || c == '/' || c == '.' || c == 0x2010 ||
      c == 0x2011) {
    return false;
  }
  return u_ispunct(c);
}

std::string Slice(const std::string &text, const std::vector<CodePoint> &cps,
                  size_t first, size_t last) {
  size_t begin = cps[first].offset;
  size_t end = cps[last].offset + cps[last].length;
  return text.substr(begin, end - begin);
}

// Parsed structure of a Romansh field.
struct Inflection {
  std::string word;
  std::vector<std::string> tags;
};

struct Item {
  std::string word;
  std::vector<std::string> tags;
  std::optional<Inflection> inflection;
};

using Group = std::vector<Item>;

class GroupParser {
 public:
  GroupParser(const std::vector<PatternToken> &tokens, std::string signature)
      : tokens_(tokens), signature_(std::move(signature)) {}

  std::vector<Group> Run() {
    std::vector<Group> groups;
    while (true) {
      groups.push_back(ParseGroup());
      if (AtEnd()) break;
      Expect(";");
    }
    return groups;
  }

 private:
  bool AtEnd() const { return pos_ >= tokens_.size(); }

  bool IsPunct(std::string_view p) const {
    return !AtEnd() && tokens_[pos_].kind == PatternKind::kPunct &&
           tokens_[pos_].text == p;
  }

  bool IsKind(PatternKind kind) const {
    return !AtEnd() && tokens_[pos_].kind == kind;
  }

  void Expect(std::string_view p) {
    if (!IsPunct(p)) {
      Unsupported(signature_, "expected '" + std::string(p) + "'");
    }
    ++pos_;
  }

  Group ParseGroup() {
    Group group;
    group.push_back(ParseItem());
    while (IsPunct(",")) {
      ++pos_;
      group.push_back(ParseItem());
    }
    return group;
  }

  Item ParseItem() {
    if (!IsKind(PatternKind::kWord)) Unsupported(signature_, "expected a word");
    Item item;
    item.word = tokens_[pos_++].text;
    if (!IsPunct("(")) return item;
    ++pos_;
    if (IsKind(PatternKind::kTag)) {
      item.tags = ParseTags();
    } else if (IsKind(PatternKind::kWord)) {
      Inflection inflection;
      inflection.word = tokens_[pos_++].text;
      if (!IsPunct(",")) {
        Unsupported(signature_, "inflected form without a tag");
      }
      ++pos_;
      inflection.tags = ParseTags();
      item.inflection = std::move(inflection);
    } else {
      Unsupported(signature_, "unexpected parenthetical content");
    }
    Expect(")");
    return item;
  }

  // MT (',' MT)*
  std::vector<std::string> ParseTags() {
    std::vector<std::string> tags;
    while (true) {
      if (!IsKind(PatternKind::kTag)) Unsupported(signature_, "expected a tag");
      tags.push_back(tokens_[pos_++].text);
      if (!IsPunct(",")) break;
      ++pos_;
    }
    return tags;
  }

  const std::vector<PatternToken> &tokens_;
  std::string signature_;
  size_t pos_ = 0;
};

// Interpretation of the gender column.
struct GenderHint {
  std::vector<Gender> genders;  // one entry, or two for "m/f"
  std::optional<Number> number;
};

GenderHint ParseGenderHint(const std::optional<std::string> &hint) {
  GenderHint result;
  if (!hint) return result;
  std::string text = AsciiLower(*hint);
  std::replace(text.begin(), text.end(), ',', ' ');
  text.erase(std::remove(text.begin(), text.end(), '.'), text.end());
  size_t start = 0;
  while (start < text.size()) {
    size_t end = text.find(' ', start);
    if (end == std::string::npos) end = text.size();
    std::string piece = text.substr(start, end - start);
    start = end + 1;
    if (piece == "m") {
      result.genders = {Gender::kMasc};
    } else if (piece == "f") {
      result.genders = {Gender::kFem};
    } else if (piece == "m/f") {
      result.genders = {Gender::kMasc, Gender::kFem};
    } else if (piece == "f/m") {
      result.genders = {Gender::kFem, Gender::kMasc};
    } else if (piece == "pl") {
      result.number = Number::kPl;
    } else if (piece == "sg") {
      result.number = Number::kSg;
    }
    // Anything else carries no gender information and is ignored.
  }
  return result;
}

void ApplyTags(const std::vector<std::string> &tags,
               const std::string &signature, FeatureBundle *features) {
  for (const std::string &tag : tags) {
    if (tag == "m") {
      features->gender = Gender::kMasc;
    } else if (tag == "f") {
      features->gender = Gender::kFem;
    } else if (tag == "sg") {
      features->number = Number::kSg;
    } else if (tag == "pl") {
      features->number = Number::kPl;
    } else {
      Unsupported(signature, "tag '" + tag + "' inside the Romansh field");
    }
  }
}

FeatureBundle BaseFeatures(PosCategory pos) {
  FeatureBundle features;
  features.pos = pos;
  switch (pos) {
    case PosCategory::kNoun:
    case PosCategory::kAdjective:
      features.number = Number::kSg;
      break;
    case PosCategory::kVerb:
      features.verb_form = VerbForm::kInf;
      break;
    case PosCategory::kOther:
      break;
  }
  return features;
}

// Picks variant k of a word with `count` variants, broadcasting words that
// have no optional material.
const std::string &Variant(const std::vector<std::string> &variants, size_t k,
                           size_t count, const std::string &signature) {
  if (variants.size() == 1) return variants[0];
  if (variants.size() != count) {
    Unsupported(signature, "optional infixes do not line up");
  }
  return variants[k];
}

// Records grouped by the unit that gendered glosses are aligned with.
using Units = std::vector<std::vector<FormRecord>>;

void AddRecord(Units *units, size_t unit, const std::string &surface,
               const std::string &lemma, const FeatureBundle &features,
               Variety variety) {
  if (units->size() <= unit) units->resize(unit + 1);
  (*units)[unit].push_back(FormRecord{surface, lemma, features, "", variety});
}

// Emits every lemma variant of one item (nouns, verbs, other).
void EmitItem(const Item &item, const FeatureBundle &features,
              const std::string &signature, Variety variety, size_t unit,
              Units *units) {
  std::vector<std::string> lemmas = ExpandParenthetical(item.word);
  std::vector<std::string> forms;
  FeatureBundle inflected = features;
  if (item.inflection) {
    forms = ExpandParenthetical(item.inflection->word);
    ApplyTags(item.inflection->tags, signature, &inflected);
  }
  const size_t count = std::max(lemmas.size(), forms.size());
  for (size_t k = 0; k < count; ++k) {
    const std::string &lemma = Variant(lemmas, k, count, signature);
    AddRecord(units, unit, lemma, lemma, features, variety);
    if (item.inflection) {
      AddRecord(units, unit, Variant(forms, k, count, signature), lemma,
                inflected, variety);
    }
  }
}

void ParseNouns(const std::vector<Group> &groups, const GenderHint &hint,
                const std::string &signature, Variety variety, Units *units) {
  const bool by_group = groups.size() >= 2;
  const size_t unit_count = by_group ? groups.size() : groups[0].size();
  for (size_t g = 0; g < groups.size(); ++g) {
    for (size_t i = 0; i < groups[g].size(); ++i) {
      const Item &item = groups[g][i];
      const size_t unit = by_group ? g : i;
      FeatureBundle features = BaseFeatures(PosCategory::kNoun);
      if (hint.genders.size() == 2 && unit_count == 2) {
        features.gender = hint.genders[unit];
      } else if (hint.genders.size() == 1) {
        features.gender = hint.genders[0];
      }
      if (hint.number) features.number = hint.number;
      ApplyTags(item.tags, signature, &features);
      EmitItem(item, features, signature, variety, unit, units);
    }
  }
}

// Adjectives: within a group the first item is the masculine citation form
// and the second its feminine form. With an "m/f" hint over two groups, the
// second group holds the feminine forms of the first.
void ParseAdjectives(const std::vector<Group> &groups, const GenderHint &hint,
                     const std::string &signature, Variety variety,
                     Units *units) {
  const bool paired_groups = groups.size() == 2 && hint.genders.size() == 2;
  const bool by_group = groups.size() >= 2;
  std::vector<std::string> paired_lemmas;
  if (paired_groups) {
    for (const Group &group : groups) {
      if (group.size() != 1) {
        Unsupported(signature, "gendered adjective groups with variants");
      }
    }
    paired_lemmas = ExpandParenthetical(groups[0][0].word);
  }

  for (size_t g = 0; g < groups.size(); ++g) {
    const Group &group = groups[g];
    if (group.size() > 2) {
      Unsupported(signature, "more than two adjective forms in a group");
    }
    // Collect the variants of every word in the group.
    std::vector<std::vector<std::string>> bases;
    std::vector<std::vector<std::string>> forms;
    size_t count = paired_groups ? paired_lemmas.size() : 1;
    for (const Item &item : group) {
      bases.push_back(ExpandParenthetical(item.word));
      count = std::max(count, bases.back().size());
      forms.emplace_back();
      if (item.inflection) {
        forms.back() = ExpandParenthetical(item.inflection->word);
        count = std::max(count, forms.back().size());
      }
    }
    const std::vector<std::string> &lemma_source =
        paired_groups ? paired_lemmas : bases[0];

    for (size_t k = 0; k < count; ++k) {
      const std::string &lemma = Variant(lemma_source, k, count, signature);
      for (size_t i = 0; i < group.size(); ++i) {
        const Item &item = group[i];
        const size_t unit = by_group ? g : i;
        FeatureBundle features = BaseFeatures(PosCategory::kAdjective);
        if (paired_groups) {
          features.gender = hint.genders[g];
        } else {
          features.gender = i == 0 ? Gender::kMasc : Gender::kFem;
        }
        ApplyTags(item.tags, signature, &features);
        AddRecord(units, unit, Variant(bases[i], k, count, signature), lemma,
                  features, variety);
        if (item.inflection) {
          FeatureBundle inflected = features;
          ApplyTags(item.inflection->tags, signature, &inflected);
          AddRecord(units, unit, Variant(forms[i], k, count, signature), lemma,
                    inflected, variety);
        }
      }
    }
  }
}

// Verbs and other categories: every item is a lemma of its own.
void ParseUninflected(PosCategory pos, const std::vector<Group> &groups,
                      const std::string &signature, Variety variety,
                      Units *units) {
  size_t unit = 0;
  for (const Group &group : groups) {
    for (const Item &item : group) {
      if (!item.tags.empty() || item.inflection) {
        Unsupported(signature, "parenthetical material on a " +
                                   std::string(PosLabel(pos)) + " entry");
      }
      EmitItem(item, BaseFeatures(pos), signature, variety, unit++, units);
    }
  }
}

}  // namespace

TagInventory TagInventory::Default() {
  return TagInventory({"m", "f", "m/f", "sg", "pl", "adj", "v", "n", "adv",
                       "pron", "prep", "conj"});
}

std::optional<std::string> TagInventory::Match(std::string_view word) const {
  std::string key = AsciiLower(word);
  key.erase(std::remove(key.begin(), key.end(), '.'), key.end());
  if (key.empty() || tags_.count(key) == 0) return std::nullopt;
  return key;
}

std::vector<PatternToken> EntryParser::Lex(std::string_view field) const {
  const std::string text = NormalizeText(field);
  const std::vector<CodePoint> cps = DecodeUtf8(text);
  std::vector<PatternToken> tokens;
  std::string word;
  char32_t last_in_word = 0;
  int depth = 0;

  auto push_word = [&](std::string w) {
    if (!tokens.empty() && (tokens.back().kind == PatternKind::kWord ||
                            tokens.back().kind == PatternKind::kMultiWord)) {
      tokens.back().kind = PatternKind::kMultiWord;
      tokens.back().text += " " + w;
    } else {
      tokens.push_back({PatternKind::kWord, std::move(w)});
    }
  };
  auto flush = [&] {
    if (word.empty()) return;
    if (auto tag = tags_.Match(word)) {
      tokens.push_back({PatternKind::kTag, *tag});
    } else {
      size_t end = word.find_last_not_of('.');
      if (end == std::string::npos) {
        for (size_t i = 0; i < word.size(); ++i) {
          tokens.push_back({PatternKind::kPunct, "."});
        }
      } else {
        size_t dots = word.size() - end - 1;
        push_word(word.substr(0, end + 1));
        for (size_t i = 0; i < dots; ++i) {
          tokens.push_back({PatternKind::kPunct, "."});
        }
      }
    }
    word.clear();
    last_in_word = 0;
  };

  for (size_t i = 0; i < cps.size(); ++i) {
    const char32_t c = cps[i].value;
    if (IsSpace(c)) {
      flush();
      continue;
    }
    if (c == '(') {
      // Optional material written inside a word stays part of the word.
      size_t j = i + 1;
      while (j < cps.size() && IsLetter(cps[j].value)) ++j;
      if (j > i + 1 && j < cps.size() && cps[j].value == ')') {
        const bool left = last_in_word != 0 && IsLetter(last_in_word);
        const bool right = j + 1 < cps.size() && IsLetter(cps[j + 1].value);
        if (left || right) {
          word += Slice(text, cps, i, j);
          last_in_word = ')';
          i = j;
          continue;
        }
      }
      flush();
      ++depth;
      tokens.push_back({PatternKind::kPunct, "("});
      continue;
    }
    if (c == ')') {
      flush();
      if (--depth < 0) Malformed("unbalanced ')' in '" + text + "'");
      tokens.push_back({PatternKind::kPunct, ")"});
      continue;
    }
    if (c == '[') {
      flush();
      size_t j = i + 1;
      while (j < cps.size() && cps[j].value != ']') ++j;
      if (j == cps.size()) Malformed("unbalanced '[' in '" + text + "'");
      std::string content;
      if (j > i + 1) content = Trim(Slice(text, cps, i + 1, j - 1));
      if (auto tag = tags_.Match(content)) {
        tokens.push_back({PatternKind::kTag, *tag});
      } else {
        // Unknown bracketed annotations never pass for words.
        tokens.push_back({PatternKind::kMultiWord, "[" + content + "]"});
      }
      i = j;
      continue;
    }
    if (c == ']') Malformed("unbalanced ']' in '" + text + "'");
    if (IsStructuralPunct(c)) {
      flush();
      tokens.push_back({PatternKind::kPunct, Slice(text, cps, i, i)});
      continue;
    }
    word += Slice(text, cps, i, i);
    last_in_word = c;
  }
  flush();
  if (depth != 0) Malformed("unbalanced '(' in '" + text + "'");
  return tokens;
}

std::string RenderSignature(const std::vector<PatternToken> &tokens) {
  std::string out;
  bool after_open = false;
  for (const PatternToken &token : tokens) {
    std::string_view piece;
    bool attach_left = false;
    switch (token.kind) {
      case PatternKind::kWord:
        piece = "w";
        break;
      case PatternKind::kMultiWord:
        piece = "w+";
        break;
      case PatternKind::kTag:
        piece = "MT";
        break;
      case PatternKind::kPunct:
        piece = token.text;
        attach_left = piece == "," || piece == ";" || piece == ")" ||
                      piece == "." || piece == ":" || piece == "!" ||
                      piece == "?";
        break;
    }
    if (!out.empty() && !attach_left && !after_open) out += ' ';
    out += piece;
    after_open = token.kind == PatternKind::kPunct && piece == "(";
  }
  return out;
}

PatternSignature EntryParser::Signature(const RawEntry &entry) const {
  if (Trim(entry.romansh_field).empty()) {
    Malformed("empty Romansh field");
  }
  PatternSignature signature;
  signature.tokens = Lex(entry.romansh_field);
  signature.rendered = RenderSignature(signature.tokens);
  return signature;
}

std::optional<PosCategory> PosFromHint(std::string_view hint) {
  std::string key = AsciiLower(Trim(hint));
  key.erase(std::remove(key.begin(), key.end(), '.'), key.end());
  if (key.empty()) return std::nullopt;
  if (key == "n" || key == "noun" || key == "subst" || key == "nomen") {
    return PosCategory::kNoun;
  }
  if (key == "v" || key == "verb" || key == "vb" || key == "tr" ||
      key == "intr" || key == "refl") {
    return PosCategory::kVerb;
  }
  if (key == "adj" || key == "adjective") {
    return PosCategory::kAdjective;
  }
  return PosCategory::kOther;
}

std::optional<PosCategory> EntryParser::InferPos(const RawEntry &entry) const {
  bool upper_initial = false;
  bool found = false;
  for (const CodePoint &cp : DecodeUtf8(entry.german_field)) {
    if (IsLetter(cp.value)) {
      upper_initial = IsUpper(cp.value);
      found = true;
      break;
    }
  }
  if (!found || !upper_initial) return std::nullopt;
  try {
    for (const PatternToken &token : Lex(entry.romansh_field)) {
      if (token.kind == PatternKind::kTag && token.text == "v") {
        return std::nullopt;
      }
    }
  } catch (const Error &) {
    // Structure problems are reported by Parse, not here.
  }
  return PosCategory::kNoun;
}

PosCategory EntryParser::ResolvePos(const RawEntry &entry) const {
  if (entry.pos_hint) {
    if (auto pos = PosFromHint(*entry.pos_hint)) return *pos;
  }
  return InferPos(entry).value_or(PosCategory::kOther);
}

std::vector<FormRecord> EntryParser::Parse(const RawEntry &entry) const {
  entry.Validate();
  const std::vector<PatternToken> tokens = Lex(entry.romansh_field);
  const std::string signature = RenderSignature(tokens);
  for (const PatternToken &token : tokens) {
    if (token.kind == PatternKind::kMultiWord) {
      if (token.text.front() == '[') {
        Unsupported(signature, "unknown annotation " + token.text);
      }
      throw Error(ErrorCode::kMultiWord,
                  "multi-word entry '" + entry.romansh_field + "'");
    }
  }
  const std::vector<Group> groups = GroupParser(tokens, signature).Run();
  const PosCategory pos = ResolvePos(entry);
  const GenderHint hint = ParseGenderHint(entry.gender_hint);

  Units units;
  switch (pos) {
    case PosCategory::kNoun:
      ParseNouns(groups, hint, signature, entry.variety, &units);
      break;
    case PosCategory::kAdjective:
      ParseAdjectives(groups, hint, signature, entry.variety, &units);
      break;
    case PosCategory::kVerb:
    case PosCategory::kOther:
      ParseUninflected(pos, groups, signature, entry.variety, &units);
      break;
  }

  std::vector<std::string> glosses;
  if (Trim(entry.german_field).empty()) {
    glosses.push_back("");
  } else {
    glosses = ExpandGloss(entry.german_field);
  }
  const bool aligned = glosses.size() > 1 && glosses.size() == units.size();

  std::vector<FormRecord> records;
  for (size_t u = 0; u < units.size(); ++u) {
    for (const FormRecord &record : units[u]) {
      if (aligned) {
        records.push_back(record);
        records.back().gloss = glosses[u];
        continue;
      }
      for (const std::string &gloss : glosses) {
        records.push_back(record);
        records.back().gloss = gloss;
      }
    }
  }

  std::vector<FormRecord> unique;
  for (FormRecord &record : records) {
    if (std::find(unique.begin(), unique.end(), record) == unique.end()) {
      unique.push_back(std::move(record));
    }
  }
  return unique;
}

std::vector<std::string> ExpandParenthetical(std::string_view word) {
  // Split into literal segments and optional groups.
  std::vector<std::string> literals(1);
  std::vector<std::string> groups;
  bool open = false;
  for (char c : word) {
    if (c == '(') {
      if (open) Malformed("nested '(' in '" + std::string(word) + "'");
      open = true;
      groups.emplace_back();
    } else if (c == ')') {
      if (!open) Malformed("unbalanced ')' in '" + std::string(word) + "'");
      open = false;
      literals.emplace_back();
    } else if (open) {
      groups.back() += c;
    } else {
      literals.back() += c;
    }
  }
  if (open) Malformed("unbalanced '(' in '" + std::string(word) + "'");

  const size_t n = groups.size();
  std::vector<std::string> out;
  out.reserve(size_t{1} << n);
  for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
    std::string variant = literals[0];
    for (size_t g = 0; g < n; ++g) {
      // The first group is the most significant bit.
      if (mask & (size_t{1} << (n - 1 - g))) variant += groups[g];
      variant += literals[g + 1];
    }
    out.push_back(std::move(variant));
  }
  return out;
}

std::vector<std::string> ExpandGloss(std::string_view gloss) {
  const std::string text(Trim(gloss));
  const std::vector<CodePoint> cps = DecodeUtf8(text);

  // Balanced, non-nested parentheses or the gloss is taken literally.
  int depth = 0;
  bool nested = false;
  for (const CodePoint &cp : cps) {
    if (cp.value == '(') ++depth;
    if (cp.value == ')') --depth;
    nested = nested || depth < 0 || depth > 1;
  }

  std::string without;
  std::string with;
  bool any = false;
  for (size_t i = 0; i < cps.size() && !nested && depth == 0; ++i) {
    if (cps[i].value == '(' && i > 0 && IsLetter(cps[i - 1].value)) {
      size_t j = i + 1;
      while (j < cps.size() && IsLetter(cps[j].value)) ++j;
      if (j > i + 1 && j < cps.size() && cps[j].value == ')') {
        with += Slice(text, cps, i + 1, j - 1);
        any = true;
        i = j;
        continue;
      }
    }
    std::string piece = Slice(text, cps, i, i);
    without += piece;
    with += piece;
  }
  std::vector<std::string> out = {text};
  if (any) out = {without, with};
  return out;
}

namespace {

const EntryParser &DefaultParser() {
  static const EntryParser parser;
  return parser;
}

}  // namespace

PatternSignature ComputeSignature(const RawEntry &entry) {
  return DefaultParser().Signature(entry);
}

std::optional<PosCategory> InferPos(const RawEntry &entry) {
  return DefaultParser().InferPos(entry);
}

std::vector<FormRecord> ParseEntry(const RawEntry &entry) {
  return DefaultParser().Parse(entry);
}

}  // namespace romlex
