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

#ifndef ROMLEX_LEMMATIZER_H_
#define ROMLEX_LEMMATIZER_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "romlex/lexicon.h"
#include "romlex/tokenizer.h"
#include "romlex/types.h"

namespace romlex {

struct TokenAnalysis {
  // Original casing.
  std::string token;
  std::vector<Analysis> analyses;
  Knowledge known = Knowledge::kUnknown;
};

struct LemmatizeResult {
  Variety variety = Variety::kSursilvan;
  // Set when the variety was detected rather than requested.
  bool detected = false;
  std::vector<TokenAnalysis> tokens;
};

// Analyzes every token of `text` (punctuation included) against one
// lexicon. Without a variety the best-scoring one is used. Throws
// Error(kUnknownVariety) if the requested variety is not loaded and
// Error(kEmptyInput) if the text has no tokens.
LemmatizeResult Lemmatize(std::string_view text, std::optional<Variety> variety,
                          const LexiconSet &lexicons,
                          const TokenizerConfig &config = {});

// Analyses of one form in every loaded variety, in canonical variety order.
std::vector<Analysis> LemmatizeAllVarieties(std::string_view token,
                                            const LexiconSet &lexicons);

// {"token": ..., "known": ..., "analyses": [{"lemma", "features", "gloss",
// "variety"}, ...]} on one line.
std::string TokenAnalysisJson(const TokenAnalysis &analysis);

// Variety, "lemma [features]" and gloss columns, one analysis per row.
std::string FormatAnalysisTable(const std::vector<Analysis> &analyses);

// Per token: a header line, then its analysis table.
std::string FormatLemmatizeResult(const LemmatizeResult &result);

}  // namespace romlex

#endif  // ROMLEX_LEMMATIZER_H_
