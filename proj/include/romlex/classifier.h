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

// Variety and language identification by recognition ratio.
//
// A text's score for a variety is the fraction of its tokens that the
// variety's lexicon recognizes, either through an analysis or through the
// fallback vocabulary. The variety with the highest score wins (ties go to
// the earlier variety in canonical order), and the winning score doubles as
// a Romansh-vs-other language score compared against a threshold.

#ifndef ROMLEX_CLASSIFIER_H_
#define ROMLEX_CLASSIFIER_H_

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "romlex/lexicon.h"
#include "romlex/tokenizer.h"
#include "romlex/types.h"

namespace romlex {

enum class ScoreMode { kAsIs, kSetOfWords, kSetOfWordsNoStopwords };

// "as-is", "set", "set-nostop".
std::string_view ScoreModeName(ScoreMode mode);
ScoreMode ParseScoreMode(std::string_view name);

inline constexpr double kDefaultLidThreshold = 0.6;

struct ScoreReport {
  std::map<Variety, double> scores;
  Variety winning_variety = Variety::kSursilvan;
  double winning_score = 0.0;
  size_t token_count = 0;
  ScoreMode mode = ScoreMode::kAsIs;
};

struct LidDecision {
  ScoreReport report;
  double threshold = kDefaultLidThreshold;
  bool is_romansh = false;
};

struct ThresholdResult {
  double threshold = 0.0;
  int misclassified = 0;
  double margin = 0.0;
};

// Case-folded stopword set.
class Stopwords {
 public:
  Stopwords() = default;

  void Add(std::string_view word);
  bool Contains(std::string_view word) const;
  size_t size() const { return words_.size(); }

  // One word per line; '#' starts a comment.
  void AddFile(const std::filesystem::path &path);
  // Every "*.txt" file in a directory.
  static Stopwords LoadDirectory(const std::filesystem::path &dir);

 private:
  std::unordered_set<std::string> words_;
};

// Fraction of tokens that are lemmatizable or in the fallback vocabulary.
// Throws Error(kEmptyInput) on an empty token list.
double ScoreVariety(const std::vector<std::string> &tokens,
                    const Lexicon &lexicon);

// Scores every loaded variety on an already prepared token list.
ScoreReport ScoreTokens(const std::vector<std::string> &tokens,
                        const LexiconSet &lexicons,
                        ScoreMode mode = ScoreMode::kAsIs);

// AsIs: unchanged. SetOfWords: first occurrence of every case-folded word.
// SetOfWordsNoStopwords: the same, minus stopwords.
std::vector<std::string> PreprocessForLid(
    const std::vector<std::string> &tokens, ScoreMode mode,
    const Stopwords &stopwords = {});

// Tokenizes, drops ". , ! ? ; :" and applies PreprocessForLid.
std::vector<std::string> LidTokens(std::string_view text, ScoreMode mode,
                                   const Stopwords &stopwords = {},
                                   const TokenizerConfig &config = {});

// Throws Error(kEmptyInput) if no word token remains.
ScoreReport IdentifyVariety(std::string_view text, const LexiconSet &lexicons,
                            const TokenizerConfig &config = {});

// Throws Error(kInvalidArgument) for a threshold outside [0, 1] and
// Error(kEmptyInput) if no token remains.
LidDecision IdentifyLanguage(std::string_view text, const LexiconSet &lexicons,
                             ScoreMode mode = ScoreMode::kSetOfWords,
                             double threshold = kDefaultLidThreshold,
                             const Stopwords &stopwords = {},
                             const TokenizerConfig &config = {});

// Mean of the per-variety scores instead of the maximum.
double AverageScore(std::string_view text, const LexiconSet &lexicons,
                    ScoreMode mode = ScoreMode::kSetOfWords,
                    const Stopwords &stopwords = {},
                    const TokenizerConfig &config = {});

// Picks the threshold that misclassifies the fewest samples (a positive
// below it or a negative at or above it), then the one farthest from the
// nearest sample, then the lowest. Candidates are 0, 1 and the midpoints
// between adjacent distinct scores. Throws Error(kEmptyInput) if either
// list is empty.
ThresholdResult FindThreshold(const std::vector<double> &positive_scores,
                              const std::vector<double> &negative_scores);

}  // namespace romlex

#endif  // ROMLEX_CLASSIFIER_H_
