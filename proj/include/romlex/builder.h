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

// Compiles dictionary, inflection and word-list files into lexicons.
//
// Input files (UTF-8, variety from the file name stem):
//   dictionaries/<variety>.tsv   romansh  german  [pos  [gender]]
//   inflections/<variety>.tsv    form  lemma  features  [gloss]
//   fallback/<variety>.txt       one word per line
// Blank lines and lines starting with '#' are ignored everywhere. A bad
// dictionary row is rejected and counted; a file that is not in the
// expected shape is an error.

#ifndef ROMLEX_BUILDER_H_
#define ROMLEX_BUILDER_H_

#include <filesystem>
#include <istream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "romlex/entry_parser.h"
#include "romlex/lexicon.h"
#include "romlex/types.h"

namespace romlex {

struct InflectionRow {
  std::string form;
  std::string lemma;
  FeatureBundle features;
  // Empty: taken from the lemma's dictionary records.
  std::string gloss;
  int source_line = 0;
};

struct PatternTally {
  size_t parsed = 0;
  size_t rejected = 0;
};

struct BuildReport {
  Variety variety = Variety::kSursilvan;
  size_t entries = 0;
  size_t parsed = 0;
  // Keyed by ErrorCodeName.
  std::map<std::string, size_t> rejected;
  // Keyed by (PoS label, rendered signature); entries that fail to lex are
  // filed under the signature "?".
  std::map<std::pair<std::string, std::string>, PatternTally> patterns;
  size_t inflections = 0;
  size_t fallback_words = 0;
  LexiconStats stats;
  // "line N: message" for every rejected row.
  std::vector<std::string> diagnostics;

  size_t RejectedTotal() const;
};

std::vector<RawEntry> ReadDictionaryTsv(std::istream &in, Variety variety);
std::vector<InflectionRow> ReadInflectionTsv(std::istream &in);
std::vector<std::string> ReadWordList(std::istream &in);

struct CompiledLexicon {
  Lexicon lexicon;
  BuildReport report;
};

CompiledLexicon CompileLexicon(Variety variety,
                               const std::vector<RawEntry> &entries,
                               const std::vector<InflectionRow> &inflections,
                               const std::vector<std::string> &fallback_words,
                               const EntryParser &parser = EntryParser());

// Compiles every "<variety>.tsv" in `dictionary_dir`; the other two
// directories are optional. Throws Error(kIo) if no dictionary is found and
// Error(kCorruptFile) naming the file on a malformed file.
std::vector<CompiledLexicon> CompileDirectory(
    const std::filesystem::path &dictionary_dir,
    const std::filesystem::path &inflection_dir,
    const std::filesystem::path &fallback_dir,
    const EntryParser &parser = EntryParser());

std::string BuildReportJson(const std::vector<BuildReport> &reports);

// Lemma counts per PoS, mapped forms and vocabulary size per variety.
std::string FormatStatsTable(const std::vector<BuildReport> &reports);

}  // namespace romlex

#endif  // ROMLEX_BUILDER_H_
