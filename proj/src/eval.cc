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

#include "romlex/eval.h"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "romlex/error.h"
#include "romlex/normalize.h"

namespace romlex {

namespace {

std::string Fixed(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", digits, value);
  return buffer;
}

std::string CellText(const std::optional<double> &value) {
  return value ? Fixed(*value, 3) : "";
}

std::vector<std::string> WordTokens(std::string_view text,
                                    const TokenizerConfig &config) {
  return RemoveIgnoredPunctuation(Tokenize(text, config));
}

// Adds one sample's counts to its cell and to the pooled marginals.
void Record(EvalTable *table, Variety variety, size_t bucket, size_t num,
            size_t den) {
  auto &row = table->cells[variety];
  if (row.empty()) row.resize(table->buckets.size());
  row[bucket].Add(num, den);
  table->row_all[variety].Add(num, den);
  table->column_all[bucket].Add(num, den);
  table->all.Add(num, den);
}

EvalTable EmptyTable(const std::vector<LengthBucket> &buckets) {
  EvalTable table;
  table.buckets = buckets;
  table.column_all.resize(buckets.size());
  return table;
}

}  // namespace

bool LengthBucket::Contains(size_t token_count) const {
  return token_count >= lower && (!upper || token_count < *upper);
}

std::string LengthBucket::Label() const {
  if (!upper) return std::to_string(lower) + "+";
  return std::to_string(lower) + "-" + std::to_string(*upper);
}

std::vector<LengthBucket> VarietyBuckets() {
  return {{2, 10}, {10, 50}, {50, 300}, {300, 800}, {800, std::nullopt}};
}

std::vector<LengthBucket> LidBuckets() {
  return {{50, 300}, {300, 800}, {800, 2000}};
}

std::optional<size_t> FindBucket(size_t token_count,
                                 const std::vector<LengthBucket> &buckets) {
  for (size_t i = 0; i < buckets.size(); ++i) {
    if (buckets[i].Contains(token_count)) return i;
  }
  return std::nullopt;
}

LabeledSample MakeSample(std::string id, std::string text,
                         std::optional<Variety> gold_variety,
                         std::optional<std::string> gold_language,
                         const TokenizerConfig &config) {
  LabeledSample sample;
  sample.id = std::move(id);
  sample.text = std::move(text);
  sample.gold_variety = gold_variety;
  sample.gold_language = std::move(gold_language);
  sample.token_count = WordTokens(sample.text, config).size();
  return sample;
}

std::vector<LabeledSample> ReadSamplesJsonl(std::istream &in,
                                            const TokenizerConfig &config) {
  std::vector<LabeledSample> samples;
  std::string line;
  size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (Trim(line).empty()) continue;
    const std::string where = "samples line " + std::to_string(line_number);
    nlohmann::json json = nlohmann::json::parse(line, nullptr, false);
    if (json.is_discarded() || !json.is_object()) {
      throw Error(ErrorCode::kCorruptFile, where + ": not a JSON object");
    }
    if (!json.contains("text") || !json["text"].is_string()) {
      throw Error(ErrorCode::kCorruptFile, where + ": missing \"text\"");
    }
    std::string id = std::to_string(line_number);
    if (json.contains("id")) {
      id = json["id"].is_string() ? json["id"].get<std::string>()
                                  : json["id"].dump();
    }
    std::optional<Variety> variety;
    std::optional<std::string> language;
    try {
      if (json.contains("variety") && !json["variety"].is_null()) {
        variety = ParseVariety(json["variety"].get<std::string>());
      }
      if (json.contains("language") && !json["language"].is_null()) {
        language = json["language"].get<std::string>();
      }
    } catch (const nlohmann::json::exception &) {
      throw Error(ErrorCode::kCorruptFile, where + ": labels must be strings");
    } catch (const Error &e) {
      throw Error(ErrorCode::kCorruptFile, where + ": " + e.what());
    }
    samples.push_back(MakeSample(std::move(id), json["text"].get<std::string>(),
                                 variety, std::move(language), config));
  }
  return samples;
}

bool IsRomanshLabel(std::string_view label) {
  std::string lower = AsciiLower(Trim(label));
  return lower == "rm" || lower == "roh" || lower == "romansh" ||
         lower == "rumantsch" || lower.rfind("rm-", 0) == 0;
}

double CoverageCount::Ratio() const {
  return total == 0 ? 0.0 : static_cast<double>(lemmatizable) / total;
}

CoverageCount Coverage(const LabeledSample &sample, const Lexicon &lexicon,
                       const TokenizerConfig &config) {
  std::vector<std::string> tokens = WordTokens(sample.text, config);
  if (tokens.empty()) {
    throw Error(ErrorCode::kEmptyInput, "sample '" + sample.id + "' is empty");
  }
  CoverageCount count;
  count.total = tokens.size();
  for (const std::string &token : tokens) {
    if (lexicon.IsKnown(token) == Knowledge::kLemmatizable) {
      ++count.lemmatizable;
    }
  }
  return count;
}

void TableCell::Add(size_t num, size_t den) {
  ++samples;
  numerator += num;
  denominator += den;
  ratio_sum += den == 0 ? 0.0 : static_cast<double>(num) / den;
}

std::optional<double> TableCell::Mean() const {
  if (samples == 0) return std::nullopt;
  return ratio_sum / static_cast<double>(samples);
}

std::optional<double> TableCell::Pooled() const {
  if (denominator == 0) return std::nullopt;
  return static_cast<double>(numerator) / denominator;
}

std::string EvalTable::FormatTsv() const {
  std::ostringstream out;
  out << "variety";
  for (const LengthBucket &bucket : buckets) out << '\t' << bucket.Label();
  out << "\tAll\n";
  for (const auto &[variety, row] : cells) {
    out << VarietyTag(variety);
    for (const TableCell &cell : row) out << '\t' << CellText(cell.Mean());
    out << '\t' << CellText(row_all.at(variety).Pooled()) << '\n';
  }
  out << "All";
  for (const TableCell &cell : column_all)
    out << '\t' << CellText(cell.Pooled());
  out << '\t' << CellText(all.Pooled()) << '\n';
  return out.str();
}

std::string EvalTable::FormatPretty() const {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header = {"variety"};
  for (const LengthBucket &bucket : buckets) header.push_back(bucket.Label());
  header.push_back("All");
  rows.push_back(header);
  for (const auto &[variety, row] : cells) {
    std::vector<std::string> line = {std::string(VarietyTag(variety))};
    for (const TableCell &cell : row) {
      line.push_back(cell.samples ? CellText(cell.Mean()) : "-");
    }
    line.push_back(CellText(row_all.at(variety).Pooled()));
    rows.push_back(line);
  }
  std::vector<std::string> total = {"All"};
  for (const TableCell &cell : column_all) {
    total.push_back(cell.samples ? CellText(cell.Pooled()) : "-");
  }
  total.push_back(all.samples ? CellText(all.Pooled()) : "-");
  rows.push_back(total);

  std::vector<size_t> widths(header.size(), 0);
  for (const auto &row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      widths[i] = std::max(widths[i], row[i].size());
    }
  }
  std::ostringstream out;
  for (const auto &row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << "  ";
      std::string cell = row[i];
      cell.resize(widths[i], ' ');
      out << cell;
    }
    out << '\n';
  }
  out << "skipped: " << skipped << '\n';
  return out.str();
}

EvalTable CoverageTable(const std::vector<LabeledSample> &samples,
                        const LexiconSet &lexicons,
                        const std::vector<LengthBucket> &buckets,
                        const TokenizerConfig &config) {
  EvalTable table = EmptyTable(buckets);
  for (const LabeledSample &sample : samples) {
    if (!sample.gold_variety) {
      throw Error(ErrorCode::kInvalidArgument,
                  "sample '" + sample.id + "' has no gold variety");
    }
    auto lexicon = lexicons.find(*sample.gold_variety);
    std::optional<size_t> bucket = FindBucket(sample.token_count, buckets);
    if (lexicon == lexicons.end() || !bucket || sample.token_count == 0) {
      ++table.skipped;
      continue;
    }
    CoverageCount count = Coverage(sample, lexicon->second, config);
    Record(&table, *sample.gold_variety, *bucket, count.lemmatizable,
           count.total);
  }
  return table;
}

EvalTable VarietyAccuracyTable(const std::vector<LabeledSample> &samples,
                               const LexiconSet &lexicons,
                               const std::vector<LengthBucket> &buckets,
                               const TokenizerConfig &config) {
  EvalTable table = EmptyTable(buckets);
  for (const LabeledSample &sample : samples) {
    if (!sample.gold_variety) {
      throw Error(ErrorCode::kInvalidArgument,
                  "sample '" + sample.id + "' has no gold variety");
    }
    std::optional<size_t> bucket = FindBucket(sample.token_count, buckets);
    if (!bucket || sample.token_count == 0) {
      ++table.skipped;
      continue;
    }
    ScoreReport report = IdentifyVariety(sample.text, lexicons, config);
    Record(&table, *sample.gold_variety, *bucket,
           report.winning_variety == *sample.gold_variety ? 1 : 0, 1);
  }
  return table;
}

std::string LidReport::FormatCsv() const {
  std::ostringstream out;
  out << "id,gold,winning_score,winning_variety,token_count,bucket\n";
  auto quote = [](const std::string &field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
      if (c == '"') out += '"';
      out += c;
    }
    return out + "\"";
  };
  for (const LidRow &row : rows) {
    out << quote(row.id) << ',' << quote(row.gold) << ','
        << Fixed(row.winning_score, 6) << ',' << VarietyTag(row.winning_variety)
        << ',' << row.token_count << ','
        << (row.bucket ? thresholds[*row.bucket].bucket->Label() : "") << '\n';
  }
  return out.str();
}

std::string LidReport::FormatThresholds() const {
  std::ostringstream out;
  out << "bucket\tpositives\tnegatives\tthreshold\tmisclassified\tmargin\n";
  for (const BucketThreshold &entry : thresholds) {
    out << (entry.bucket ? entry.bucket->Label() : "all") << '\t'
        << entry.positives << '\t' << entry.negatives << '\t';
    if (entry.result) {
      out << Fixed(entry.result->threshold, 6) << '\t'
          << entry.result->misclassified << '\t'
          << Fixed(entry.result->margin, 6) << '\n';
    } else {
      out << "insufficient classes\t\t\n";
    }
  }
  return out.str();
}

LidReport LidDistributions(const std::vector<LabeledSample> &samples,
                           const LexiconSet &lexicons, ScoreMode mode,
                           const std::vector<LengthBucket> &buckets,
                           const Stopwords &stopwords,
                           const TokenizerConfig &config) {
  LidReport report;
  report.mode = mode;
  // Buckets first, in order, so a row's bucket index addresses its entry.
  std::vector<std::vector<double>> pos(buckets.size() + 1);
  std::vector<std::vector<double>> neg(buckets.size() + 1);
  for (const LabeledSample &sample : samples) {
    if (!sample.gold_language) {
      throw Error(ErrorCode::kInvalidArgument,
                  "sample '" + sample.id + "' has no gold language");
    }
    std::vector<std::string> tokens =
        LidTokens(sample.text, mode, stopwords, config);
    if (tokens.empty()) {
      ++report.skipped;
      continue;
    }
    ScoreReport scores = ScoreTokens(tokens, lexicons, mode);
    LidRow row;
    row.id = sample.id;
    row.gold = *sample.gold_language;
    row.gold_romansh = IsRomanshLabel(row.gold);
    row.winning_score = scores.winning_score;
    row.winning_variety = scores.winning_variety;
    row.token_count = sample.token_count;
    row.bucket = FindBucket(sample.token_count, buckets);

    auto &target = row.gold_romansh ? pos : neg;
    target.back().push_back(row.winning_score);
    if (row.bucket) target[*row.bucket].push_back(row.winning_score);
    report.rows.push_back(std::move(row));
  }
  for (size_t i = 0; i <= buckets.size(); ++i) {
    BucketThreshold entry;
    if (i < buckets.size()) entry.bucket = buckets[i];
    entry.positives = pos[i].size();
    entry.negatives = neg[i].size();
    if (!pos[i].empty() && !neg[i].empty()) {
      entry.result = FindThreshold(pos[i], neg[i]);
    }
    report.thresholds.push_back(entry);
  }
  return report;
}

}  // namespace romlex
