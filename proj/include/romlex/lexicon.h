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

#ifndef ROMLEX_LEXICON_H_
#define ROMLEX_LEXICON_H_

#include <array>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "romlex/types.h"

namespace romlex {

struct LexiconStats {
  // |mapped forms ∪ fallback words|
  size_t vocab_size = 0;
  // Number of distinct lookup keys that lead to at least one analysis.
  size_t mapped_forms = 0;
  // Distinct (lemma, PoS) pairs.
  size_t lemma_count = 0;
  // Indexed by PosCategory.
  std::array<size_t, 4> lemmas_by_pos = {};

  bool operator==(const LexiconStats &) const = default;
};

enum class Knowledge { kLemmatizable, kFallbackOnly, kUnknown };

std::string_view KnowledgeName(Knowledge knowledge);

// Immutable per-variety lexicon: lookup key -> analyses, plus a flat
// fallback vocabulary that is consulted only when a form has no analysis.
class Lexicon {
 public:
  Lexicon() = default;

  // Records are normalized, deduplicated and canonically ordered, so the
  // result does not depend on input order or repetition. Throws
  // Error(kVarietyMismatch) if a record belongs to another variety.
  static Lexicon Build(std::vector<FormRecord> records,
                       const std::vector<std::string> &fallback_words,
                       Variety variety);

  // Analyses for a surface form, deduplicated and sorted; empty if absent.
  const std::vector<Analysis> &Lookup(std::string_view surface) const;

  Knowledge IsKnown(std::string_view surface) const;

  Variety variety() const { return variety_; }
  const LexiconStats &stats() const { return stats_; }
  const std::vector<FormRecord> &records() const { return records_; }

  // Sorted fallback keys.
  std::vector<std::string> FallbackWords() const;

  // Versioned line-oriented text format (".lexc"). Load throws
  // Error(kIncompatibleVersion) or Error(kCorruptFile).
  void Save(const std::filesystem::path &path) const;
  static Lexicon Load(const std::filesystem::path &path);
  std::string Serialize() const;
  static Lexicon Deserialize(std::string_view data);

  bool operator==(const Lexicon &other) const;

 private:
  void Index();

  Variety variety_ = Variety::kRumantschGrischun;
  std::vector<FormRecord> records_;
  std::unordered_map<std::string, std::vector<Analysis>> index_;
  std::unordered_set<std::string> fallback_;
  LexiconStats stats_;
};

inline constexpr int kLexiconFormatVersion = 1;

// Loaded lexicons keyed (and iterated) in canonical variety order. Missing
// varieties are allowed.
using LexiconSet = std::map<Variety, Lexicon>;

// Loads every "*.lexc" file in a directory. Throws Error(kIo) if the
// directory is missing or holds no lexicon.
LexiconSet LoadLexiconSet(const std::filesystem::path &dir);

}  // namespace romlex

#endif  // ROMLEX_LEXICON_H_
