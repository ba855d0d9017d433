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

// Evaluation over labeled text samples: lemmatizer coverage, variety
// identification accuracy and language-identification score
// distributions, each broken down by text length.

#ifndef ROMLEX_EVAL_H_
#define ROMLEX_EVAL_H_

#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "romlex/classifier.h"
#include "romlex/lexicon.h"
#include "romlex/tokenizer.h"
#include "romlex/types.h"

namespace romlex {

// Token counts in [lower, upper); no upper bound when `upper` is unset.
struct LengthBucket {
  size_t lower = 0;
  std::optional<size_t> upper;

  bool Contains(size_t token_count) const;
  // "50-300" or "800+".
  std::string Label() const;
};

// 2-10, 10-50, 50-300, 300-800, 800+.
std::vector<LengthBucket> VarietyBuckets();
// 50-300, 300-800, 800-2000.
std::vector<LengthBucket> LidBuckets();

std::optional<size_t> FindBucket(size_t token_count,
                                 const std::vector<LengthBucket> &buckets);

struct LabeledSample {
  std::string id;
  std::string text;
  std::optional<Variety> gold_variety;
  std::optional<std::string> gold_language;
  // Tokens left after dropping ". , ! ? ; :".
  size_t token_count = 0;
};

LabeledSample MakeSample(std::string id, std::string text,
                         std::optional<Variety> gold_variety,
                         std::optional<std::string> gold_language,
                         const TokenizerConfig &config = {});

// JSON lines with "text" and optional "id", "variety", "language". Blank
// lines are skipped; a missing id becomes the line number. Throws
// Error(kCorruptFile) on a malformed line.
std::vector<LabeledSample> ReadSamplesJsonl(std::istream &in,
                                            const TokenizerConfig &config = {});

// "rm", "roh", "romansh", "rumantsch" or any "rm-..." tag.
bool IsRomanshLabel(std::string_view label);

struct CoverageCount {
  size_t lemmatizable = 0;
  size_t total = 0;

  double Ratio() const;
};

// Only forms with an analysis count; fallback words do not. Throws
// Error(kEmptyInput) if no word token remains.
CoverageCount Coverage(const LabeledSample &sample, const Lexicon &lexicon,
                       const TokenizerConfig &config = {});

// One cell: the mean of its samples' ratios plus pooled counts.
struct TableCell {
  size_t samples = 0;
  double ratio_sum = 0.0;
  size_t numerator = 0;
  size_t denominator = 0;

  void Add(size_t num, size_t den);
  std::optional<double> Mean() const;
  std::optional<double> Pooled() const;
};

// Rows are varieties, columns length buckets. The "All" row and column
// hold pooled totals.
struct EvalTable {
  std::vector<LengthBucket> buckets;
  std::map<Variety, std::vector<TableCell>> cells;
  std::map<Variety, TableCell> row_all;
  std::vector<TableCell> column_all;
  TableCell all;
  size_t skipped = 0;

  // Cell values are means of per-sample ratios; "All" values are pooled.
  std::string FormatTsv() const;
  std::string FormatPretty() const;
};

EvalTable CoverageTable(const std::vector<LabeledSample> &samples,
                        const LexiconSet &lexicons,
                        const std::vector<LengthBucket> &buckets,
                        const TokenizerConfig &config = {});

// A cell is the fraction of samples whose identified variety matches the
// gold variety.
EvalTable VarietyAccuracyTable(const std::vector<LabeledSample> &samples,
                               const LexiconSet &lexicons,
                               const std::vector<LengthBucket> &buckets,
                               const TokenizerConfig &config = {});

struct LidRow {
  std::string id;
  std::string gold;
  bool gold_romansh = false;
  double winning_score = 0.0;
  Variety winning_variety = Variety::kSursilvan;
  size_t token_count = 0;
  std::optional<size_t> bucket;
};

struct BucketThreshold {
  // Empty for the pooled "all" entry.
  std::optional<LengthBucket> bucket;
  size_t positives = 0;
  size_t negatives = 0;
  // Unset when a class has no samples.
  std::optional<ThresholdResult> result;
};

struct LidReport {
  ScoreMode mode = ScoreMode::kSetOfWords;
  std::vector<LidRow> rows;
  std::vector<BucketThreshold> thresholds;
  size_t skipped = 0;

  // id,gold,winning_score,winning_variety,token_count,bucket
  std::string FormatCsv() const;
  std::string FormatThresholds() const;
};

// Every sample needs a gold language. Samples outside every bucket still
// produce a row and count towards the pooled threshold.
LidReport LidDistributions(
    const std::vector<LabeledSample> &samples, const LexiconSet &lexicons,
    ScoreMode mode = ScoreMode::kSetOfWords,
    const std::vector<LengthBucket> &buckets = LidBuckets(),
    const Stopwords &stopwords = {}, const TokenizerConfig &config = {});

}  // namespace romlex

#endif  // ROMLEX_EVAL_H_
