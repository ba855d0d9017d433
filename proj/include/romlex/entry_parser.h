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

// Turns raw dictionary rows into FormRecords.
//
// The Romansh field of a row is first lexed into pattern tokens: single
// words (w), multi-word spans (w+), punctuation and morphological tags
// (MT, e.g. "m.", "pl"). The token kinds form the entry's signature, e.g.
//
//   armaziun                                       w
//   admiratur, admiratura                          w, w
//   arrestà (arrestats, pl); arrestada (...)       w (w, MT); w (w, MT)
//
// Parsing then follows a small grammar over those tokens:
//
//   field  := group (';' group)*
//   group  := item (',' item)*
//   item   := w | w '(' MT (',' MT)* ')' | w '(' w (',' MT)+ ')'
//
// The first word of an item is a lemma (for adjectives, the second item of a
// group is the feminine form of the first). Parenthesised word material is
// an inflected form of that lemma. Optional infixes written inside a word,
// e.g. "antalg(iant)evel", produce parallel lemma variants. Anything outside
// the grammar is rejected with kUnsupportedPattern; entries containing
// multi-word spans are rejected with kMultiWord.

#ifndef ROMLEX_ENTRY_PARSER_H_
#define ROMLEX_ENTRY_PARSER_H_

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "romlex/types.h"

namespace romlex {

enum class PatternKind { kWord, kMultiWord, kPunct, kTag };

struct PatternToken {
  PatternKind kind;
  // Word text, the punctuation character, or the normalized tag ("pl").
  std::string text;

  bool operator==(const PatternToken &) const = default;
};

// Structural shape of a Romansh field. Two signatures are equal iff their
// renderings are equal; tag values and word contents are carried in the
// tokens but do not take part in the comparison.
struct PatternSignature {
  std::vector<PatternToken> tokens;
  std::string rendered;

  bool operator==(const PatternSignature &other) const {
    return rendered == other.rendered;
  }
  auto operator<=>(const PatternSignature &other) const {
    return rendered <=> other.rendered;
  }
};

// Closed list of morphological tags. Tags match case-insensitively, with
// or without a trailing dot.
class TagInventory {
 public:
  // {m, f, m/f, sg, pl, adj, v, n, adv, pron, prep, conj}
  static TagInventory Default();

  explicit TagInventory(std::set<std::string> tags) : tags_(std::move(tags)) {}

  // Returns the normalized tag if the word is a known tag.
  std::optional<std::string> Match(std::string_view word) const;

  const std::set<std::string> &tags() const { return tags_; }

 private:
  std::set<std::string> tags_;
};

class EntryParser {
 public:
  EntryParser() : tags_(TagInventory::Default()) {}
  explicit EntryParser(TagInventory tags) : tags_(std::move(tags)) {}

  // Lexes a Romansh field. Throws Error(kMalformedEntry) on unbalanced
  // parentheses or brackets.
  std::vector<PatternToken> Lex(std::string_view romansh_field) const;

  PatternSignature Signature(const RawEntry &entry) const;

  // Returns the PoS category from the hint, else the inferred one, else
  // kOther.
  PosCategory ResolvePos(const RawEntry &entry) const;

  std::optional<PosCategory> InferPos(const RawEntry &entry) const;

  // Throws kMalformedEntry, kMultiWord or kUnsupportedPattern.
  std::vector<FormRecord> Parse(const RawEntry &entry) const;

  const TagInventory &tags() const { return tags_; }

 private:
  TagInventory tags_;
};

// Renders a token sequence, e.g. "w (w, MT); w (w, MT)".
std::string RenderSignature(const std::vector<PatternToken> &tokens);

// Convenience wrappers around a default-configured EntryParser.
PatternSignature ComputeSignature(const RawEntry &entry);
std::optional<PosCategory> InferPos(const RawEntry &entry);
std::vector<FormRecord> ParseEntry(const RawEntry &entry);

// Maps a dictionary PoS annotation ("adj", "v.", "subst") to a category.
// Returns nullopt for a blank annotation; unrecognised ones map to kOther.
std::optional<PosCategory> PosFromHint(std::string_view hint);

// "antalg(iant)evel" -> {"antalgevel", "antalgiantevel"}. With several
// groups the result has 2^n elements; the first group varies slowest and
// exclusion comes before inclusion. Throws kMalformedEntry on unbalanced or
// nested parentheses.
std::vector<std::string> ExpandParenthetical(std::string_view word);

// "Bewunderer(in)" -> {"Bewunderer", "Bewundererin"}. All suffix groups are
// toggled together. Malformed parentheses yield the literal gloss.
std::vector<std::string> ExpandGloss(std::string_view gloss);

}  // namespace romlex

#endif  // ROMLEX_ENTRY_PARSER_H_
