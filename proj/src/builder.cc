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

#include "romlex/builder.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "romlex/error.h"
#include "romlex/normalize.h"

namespace romlex {

namespace {

std::vector<std::string> SplitTabs(const std::string &line) {
  std::vector<std::string> fields;
  std::stringstream stream(line);
  std::string field;
  while (std::getline(stream, field, '\t')) fields.push_back(field);
  if (!line.empty() && line.back() == '\t') fields.emplace_back();
  return fields;
}

// Calls `row(fields, line_number)` for every data line.
template <typename Fn>
void ForEachRow(std::istream &in, Fn row) {
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty() || line[0] == '#') continue;
    row(SplitTabs(line), line_number);
  }
}

[[noreturn]] void BadLine(int line, const std::string &what) {
  throw Error(ErrorCode::kCorruptFile,
              "line " + std::to_string(line) + ": " + what);
}

std::optional<std::string> OptionalCell(const std::vector<std::string> &fields,
                                        size_t index) {
  if (index >= fields.size() || Trim(fields[index]).empty()) {
    return std::nullopt;
  }
  return std::string(Trim(fields[index]));
}

std::ifstream OpenInput(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read '" + path.string() + "'");
  return in;
}

// Files named "<variety><extension>" in a directory, by variety.
std::map<Variety, std::filesystem::path> FilesByVariety(
    const std::filesystem::path &dir, std::string_view extension) {
  std::map<Variety, std::filesystem::path> files;
  std::error_code ec;
  if (dir.empty() || !std::filesystem::is_directory(dir, ec)) return files;
  for (const auto &file : std::filesystem::directory_iterator(dir)) {
    if (file.path().extension() != extension) continue;
    Variety variety;
    try {
      variety = ParseVariety(file.path().stem().string());
    } catch (const Error &) {
      throw Error(ErrorCode::kCorruptFile,
                  file.path().string() + ": file name is not a variety");
    }
    if (!files.emplace(variety, file.path()).second) {
      throw Error(ErrorCode::kCorruptFile,
                  file.path().string() + ": second file for " +
                      std::string(VarietyName(variety)));
    }
  }
  return files;
}

// Rethrows with the file name in front of the message.
template <typename Fn>
auto WithFile(const std::filesystem::path &path, Fn fn) {
  try {
    return fn();
  } catch (const Error &e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

}  // namespace

size_t BuildReport::RejectedTotal() const {
  size_t total = 0;
  for (const auto &[code, count] : rejected) total += count;
  return total;
}

std::vector<RawEntry> ReadDictionaryTsv(std::istream &in, Variety variety) {
  std::vector<RawEntry> entries;
  bool first = true;
  ForEachRow(in, [&](const std::vector<std::string> &fields, int line) {
    if (first && !fields.empty() && AsciiLower(Trim(fields[0])) == "romansh") {
      first = false;
      return;
    }
    first = false;
    if (fields.size() < 2 || fields.size() > 4) {
      BadLine(line, "expected 2 to 4 tab-separated columns, found " +
                        std::to_string(fields.size()));
    }
    RawEntry entry;
    entry.romansh_field = fields[0];
    entry.german_field = fields[1];
    entry.pos_hint = OptionalCell(fields, 2);
    entry.gender_hint = OptionalCell(fields, 3);
    entry.variety = variety;
    entry.source_line = line;
    entries.push_back(std::move(entry));
  });
  return entries;
}

std::vector<InflectionRow> ReadInflectionTsv(std::istream &in) {
  std::vector<InflectionRow> rows;
  ForEachRow(in, [&](const std::vector<std::string> &fields, int line) {
    if (fields.size() < 3 || fields.size() > 4) {
      BadLine(line, "expected form, lemma, features and an optional gloss");
    }
    InflectionRow row;
    row.form = std::string(Trim(fields[0]));
    row.lemma = std::string(Trim(fields[1]));
    if (row.form.empty() || row.lemma.empty()) BadLine(line, "empty form");
    try {
      row.features = FeatureBundle::Parse(fields[2]);
    } catch (const Error &e) {
      BadLine(line, e.what());
    }
    if (fields.size() == 4) row.gloss = std::string(Trim(fields[3]));
    row.source_line = line;
    rows.push_back(std::move(row));
  });
  return rows;
}

std::vector<std::string> ReadWordList(std::istream &in) {
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view word = Trim(line);
    if (word.empty() || word[0] == '#') continue;
    words.emplace_back(word);
  }
  return words;
}

CompiledLexicon CompileLexicon(Variety variety,
                               const std::vector<RawEntry> &entries,
                               const std::vector<InflectionRow> &inflections,
                               const std::vector<std::string> &fallback_words,
                               const EntryParser &parser) {
  BuildReport report;
  report.variety = variety;
  std::vector<FormRecord> records;
  for (const RawEntry &entry : entries) {
    ++report.entries;
    std::string pos = "?";
    std::string signature = "?";
    try {
      pos = std::string(PosLabel(parser.ResolvePos(entry)));
      signature = parser.Signature(entry).rendered;
      std::vector<FormRecord> parsed = parser.Parse(entry);
      for (FormRecord &record : parsed) record.variety = variety;
      records.insert(records.end(), parsed.begin(), parsed.end());
      ++report.parsed;
      ++report.patterns[{pos, signature}].parsed;
    } catch (const Error &e) {
      ++report.rejected[ErrorCodeName(e.code())];
      ++report.patterns[{pos, signature}].rejected;
      report.diagnostics.push_back("line " + std::to_string(entry.source_line) +
                                   ": " + ErrorCodeName(e.code()) + ": " +
                                   e.what());
    }
  }

  for (const InflectionRow &row : inflections) {
    ++report.inflections;
    std::vector<std::string> glosses;
    if (!row.gloss.empty()) {
      glosses.push_back(row.gloss);
    } else {
      const std::string lemma = NormalizeText(row.lemma);
      for (const FormRecord &record : records) {
        if (record.lemma == lemma && record.surface == lemma &&
            record.features.pos == row.features.pos &&
            std::find(glosses.begin(), glosses.end(), record.gloss) ==
                glosses.end()) {
          glosses.push_back(record.gloss);
        }
      }
      if (glosses.empty()) glosses.emplace_back();
    }
    for (const std::string &gloss : glosses) {
      records.push_back(
          FormRecord{row.form, row.lemma, row.features, gloss, variety});
    }
  }

  report.fallback_words = fallback_words.size();
  CompiledLexicon compiled{
      Lexicon::Build(std::move(records), fallback_words, variety), {}};
  report.stats = compiled.lexicon.stats();
  compiled.report = std::move(report);
  return compiled;
}

std::vector<CompiledLexicon> CompileDirectory(
    const std::filesystem::path &dictionary_dir,
    const std::filesystem::path &inflection_dir,
    const std::filesystem::path &fallback_dir, const EntryParser &parser) {
  std::map<Variety, std::filesystem::path> dictionaries =
      FilesByVariety(dictionary_dir, ".tsv");
  if (dictionaries.empty()) {
    throw Error(ErrorCode::kIo,
                "no dictionaries found in '" + dictionary_dir.string() + "'");
  }
  std::map<Variety, std::filesystem::path> inflections =
      FilesByVariety(inflection_dir, ".tsv");
  std::map<Variety, std::filesystem::path> fallbacks =
      FilesByVariety(fallback_dir, ".txt");

  std::vector<CompiledLexicon> out;
  for (const auto &[variety, path] : dictionaries) {
    std::vector<RawEntry> entries = WithFile(path, [&, v = variety] {
      std::ifstream in = OpenInput(path);
      return ReadDictionaryTsv(in, v);
    });
    std::vector<InflectionRow> rows;
    if (auto it = inflections.find(variety); it != inflections.end()) {
      rows = WithFile(it->second, [&] {
        std::ifstream in = OpenInput(it->second);
        return ReadInflectionTsv(in);
      });
    }
    std::vector<std::string> words;
    if (auto it = fallbacks.find(variety); it != fallbacks.end()) {
      std::ifstream in = OpenInput(it->second);
      words = ReadWordList(in);
    }
    out.push_back(WithFile(path, [&, v = variety] {
      return CompileLexicon(v, entries, rows, words, parser);
    }));
  }
  return out;
}

std::string BuildReportJson(const std::vector<BuildReport> &reports) {
  nlohmann::ordered_json json = nlohmann::ordered_json::array();
  for (const BuildReport &report : reports) {
    nlohmann::ordered_json item;
    item["variety"] = VarietyTag(report.variety);
    item["entries"] = report.entries;
    item["parsed"] = report.parsed;
    item["rejected"] = report.rejected;
    item["inflections"] = report.inflections;
    item["fallback_words"] = report.fallback_words;
    nlohmann::ordered_json lemmas;
    for (PosCategory pos : kAllPosCategories) {
      lemmas[std::string(PosLabel(pos))] =
          report.stats.lemmas_by_pos[static_cast<size_t>(pos)];
    }
    item["stats"] = {{"lemmas", lemmas},
                     {"lemma_count", report.stats.lemma_count},
                     {"mapped_forms", report.stats.mapped_forms},
                     {"vocab_size", report.stats.vocab_size}};
    nlohmann::ordered_json patterns = nlohmann::ordered_json::array();
    for (const auto &[key, tally] : report.patterns) {
      patterns.push_back({{"pos", key.first},
                          {"signature", key.second},
                          {"parsed", tally.parsed},
                          {"rejected", tally.rejected}});
    }
    item["patterns"] = patterns;
    item["diagnostics"] = report.diagnostics;
    json.push_back(item);
  }
  return json.dump(2) + "\n";
}

std::string FormatStatsTable(const std::vector<BuildReport> &reports) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"variety", "N", "V", "ADJ", "X", "mapped", "vocab", "parsed",
                  "rejected"});
  for (const BuildReport &report : reports) {
    std::vector<std::string> row = {std::string(VarietyTag(report.variety))};
    for (size_t count : report.stats.lemmas_by_pos) {
      row.push_back(std::to_string(count));
    }
    row.push_back(std::to_string(report.stats.mapped_forms));
    row.push_back(std::to_string(report.stats.vocab_size));
    row.push_back(std::to_string(report.parsed));
    row.push_back(std::to_string(report.RejectedTotal()));
    rows.push_back(std::move(row));
  }
  std::vector<size_t> widths(rows[0].size(), 0);
  for (const auto &row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      widths[i] = std::max(widths[i], row[i].size());
    }
  }
  std::ostringstream out;
  for (const auto &row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << "  ";
      if (i == 0) {
        out << row[i] << std::string(widths[i] - row[i].size(), ' ');
      } else {
        out << std::string(widths[i] - row[i].size(), ' ') << row[i];
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace romlex
