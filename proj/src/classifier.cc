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

#include "romlex/classifier.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>

#include "romlex/error.h"
#include "romlex/normalize.h"

namespace romlex {

namespace {

// Margins closer than this count as equal.
constexpr double kMarginEpsilon = 1e-12;

}  // namespace

std::string_view ScoreModeName(ScoreMode mode) {
  switch (mode) {
    case ScoreMode::kAsIs:
      return "as-is";
    case ScoreMode::kSetOfWords:
      return "set";
    case ScoreMode::kSetOfWordsNoStopwords:
      return "set-nostop";
  }
  return "as-is";
}

ScoreMode ParseScoreMode(std::string_view name) {
  std::string lower = AsciiLower(Trim(name));
  if (lower == "as-is" || lower == "asis") return ScoreMode::kAsIs;
  if (lower == "set" || lower == "set-of-words") return ScoreMode::kSetOfWords;
  if (lower == "set-nostop" || lower == "set-no-stopwords") {
    return ScoreMode::kSetOfWordsNoStopwords;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown score mode '" + std::string(name) + "'");
}

void Stopwords::Add(std::string_view word) {
  std::string key = LookupKey(Trim(word));
  if (!key.empty()) words_.insert(std::move(key));
}

bool Stopwords::Contains(std::string_view word) const {
  return words_.count(LookupKey(word)) != 0;
}

void Stopwords::AddFile(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read '" + path.string() + "'");
  std::string line;
  while (std::getline(in, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    Add(line);
  }
}

Stopwords Stopwords::LoadDirectory(const std::filesystem::path &dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    throw Error(ErrorCode::kIo,
                "stopword directory '" + dir.string() + "' does not exist");
  }
  Stopwords stopwords;
  for (const auto &file : std::filesystem::directory_iterator(dir)) {
    if (file.path().extension() == ".txt") stopwords.AddFile(file.path());
  }
  return stopwords;
}

double ScoreVariety(const std::vector<std::string> &tokens,
                    const Lexicon &lexicon) {
  if (tokens.empty()) throw Error(ErrorCode::kEmptyInput, "no tokens to score");
  size_t known = 0;
  for (const std::string &token : tokens) {
    if (lexicon.IsKnown(token) != Knowledge::kUnknown) ++known;
  }
  return static_cast<double>(known) / static_cast<double>(tokens.size());
}

ScoreReport ScoreTokens(const std::vector<std::string> &tokens,
                        const LexiconSet &lexicons, ScoreMode mode) {
  if (lexicons.empty()) {
    throw Error(ErrorCode::kUnknownVariety, "no lexicon loaded");
  }
  if (tokens.empty()) throw Error(ErrorCode::kEmptyInput, "no tokens to score");
  ScoreReport report;
  report.mode = mode;
  report.token_count = tokens.size();
  bool first = true;
  // LexiconSet iterates in canonical order, so a strict '>' keeps the
  // earliest variety on ties.
  for (const auto &[variety, lexicon] : lexicons) {
    double score = ScoreVariety(tokens, lexicon);
    report.scores[variety] = score;
    if (first || score > report.winning_score) {
      report.winning_variety = variety;
      report.winning_score = score;
      first = false;
    }
  }
  return report;
}

std::vector<std::string> PreprocessForLid(
    const std::vector<std::string> &tokens, ScoreMode mode,
    const Stopwords &stopwords) {
  if (mode == ScoreMode::kAsIs) return tokens;
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  for (const std::string &token : tokens) {
    if (!seen.insert(LookupKey(token)).second) continue;
    if (mode == ScoreMode::kSetOfWordsNoStopwords &&
        stopwords.Contains(token)) {
      continue;
    }
    out.push_back(token);
  }
  return out;
}

std::vector<std::string> LidTokens(std::string_view text, ScoreMode mode,
                                   const Stopwords &stopwords,
                                   const TokenizerConfig &config) {
  return PreprocessForLid(RemoveIgnoredPunctuation(Tokenize(text, config)),
                          mode, stopwords);
}

ScoreReport IdentifyVariety(std::string_view text, const LexiconSet &lexicons,
                            const TokenizerConfig &config) {
  std::vector<std::string> tokens =
      RemoveIgnoredPunctuation(Tokenize(text, config));
  if (tokens.empty()) {
    throw Error(ErrorCode::kEmptyInput, "no word tokens in input");
  }
  return ScoreTokens(tokens, lexicons, ScoreMode::kAsIs);
}

LidDecision IdentifyLanguage(std::string_view text, const LexiconSet &lexicons,
                             ScoreMode mode, double threshold,
                             const Stopwords &stopwords,
                             const TokenizerConfig &config) {
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw Error(
        ErrorCode::kInvalidArgument,
        "threshold must lie in [0, 1], got " + std::to_string(threshold));
  }
  std::vector<std::string> tokens = LidTokens(text, mode, stopwords, config);
  if (tokens.empty()) {
    throw Error(ErrorCode::kEmptyInput, "no word tokens in input");
  }
  LidDecision decision;
  decision.report = ScoreTokens(tokens, lexicons, mode);
  decision.threshold = threshold;
  decision.is_romansh = decision.report.winning_score >= threshold;
  return decision;
}

double AverageScore(std::string_view text, const LexiconSet &lexicons,
                    ScoreMode mode, const Stopwords &stopwords,
                    const TokenizerConfig &config) {
  std::vector<std::string> tokens = LidTokens(text, mode, stopwords, config);
  if (tokens.empty()) {
    throw Error(ErrorCode::kEmptyInput, "no word tokens in input");
  }
  ScoreReport report = ScoreTokens(tokens, lexicons, mode);
  double sum = 0.0;
  for (const auto &[variety, score] : report.scores) sum += score;
  return sum / static_cast<double>(report.scores.size());
}

ThresholdResult FindThreshold(const std::vector<double> &positive_scores,
                              const std::vector<double> &negative_scores) {
  if (positive_scores.empty() || negative_scores.empty()) {
    throw Error(ErrorCode::kEmptyInput,
                "threshold search needs both positive and negative scores");
  }
  std::vector<double> pos = positive_scores;
  std::vector<double> neg = negative_scores;
  std::sort(pos.begin(), pos.end());
  std::sort(neg.begin(), neg.end());
  std::vector<double> pooled = pos;
  pooled.insert(pooled.end(), neg.begin(), neg.end());
  std::sort(pooled.begin(), pooled.end());
  pooled.erase(std::unique(pooled.begin(), pooled.end()), pooled.end());

  std::vector<double> candidates = {0.0, 1.0};
  for (size_t i = 0; i + 1 < pooled.size(); ++i) {
    candidates.push_back((pooled[i] + pooled[i + 1]) / 2.0);
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());

  ThresholdResult best;
  bool have_best = false;
  for (double theta : candidates) {
    // Positives strictly below theta, negatives at or above it.
    const auto pos_below = std::lower_bound(pos.begin(), pos.end(), theta);
    const auto neg_below = std::lower_bound(neg.begin(), neg.end(), theta);
    const int errors = static_cast<int>(pos_below - pos.begin()) +
                       static_cast<int>(neg.end() - neg_below);

    // Distance to the nearest sample on either side.
    double margin = std::numeric_limits<double>::infinity();
    auto above = std::lower_bound(pooled.begin(), pooled.end(), theta);
    if (above != pooled.end()) margin = std::min(margin, *above - theta);
    if (above != pooled.begin()) {
      margin = std::min(margin, theta - *std::prev(above));
    }

    const bool better =
        !have_best || errors < best.misclassified ||
        (errors == best.misclassified && margin > best.margin + kMarginEpsilon);
    if (better) {
      best = ThresholdResult{theta, errors, margin};
      have_best = true;
    }
  }
  return best;
}

}  // namespace romlex
