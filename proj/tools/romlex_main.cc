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

// romlex: build lexicons, lemmatize, identify varieties and languages,
// evaluate and calibrate.
//
// Exit status: 0 success, 1 internal error, 2 configuration, lookup or
// input-format error, 3 empty input.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "romlex/builder.h"
#include "romlex/classifier.h"
#include "romlex/entry_parser.h"
#include "romlex/error.h"
#include "romlex/eval.h"
#include "romlex/lemmatizer.h"
#include "romlex/lexicon.h"
#include "romlex/normalize.h"
#include "romlex/skeleton.h"
#include "romlex/tokenizer.h"

#ifndef ROMLEX_DATA_DIR
#define ROMLEX_DATA_DIR "data"
#endif

namespace romlex {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitConfig = 2;
constexpr int kExitEmpty = 3;

struct Options {
  std::string lexicon_dir;
  std::string patterns_dir;
  std::string stopwords_dir;
  std::string format = "pretty";
  std::vector<std::string> varieties;

  std::vector<std::string> text;
  std::string file;
  std::string variety;
  bool all_varieties = false;
  bool lines = false;
  std::string mode = "set";
  double threshold = kDefaultLidThreshold;

  std::string dictionaries;
  std::string inflections;
  std::string fallback;
  std::string out_dir;

  std::string samples;
  std::string task = "coverage";
  std::string histogram;

  std::string positives;
  std::string negatives;

  std::vector<std::string> dictionary_files;
  int min_count = 10;
  bool prefill = false;
};

std::string ReadAll(std::istream &in) {
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::string ReadFile(const std::string &path) {
  if (path == "-") return ReadAll(std::cin);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read '" + path + "'");
  return ReadAll(in);
}

// Positional text, else --file, else stdin.
std::string InputText(const Options &opt) {
  if (!opt.text.empty()) {
    std::string joined;
    for (const std::string &part : opt.text) {
      if (!joined.empty()) joined += ' ';
      joined += part;
    }
    return joined;
  }
  return ReadFile(opt.file.empty() ? "-" : opt.file);
}

std::vector<std::string> InputDocuments(const Options &opt) {
  std::string text = InputText(opt);
  if (!opt.lines) return {text};
  std::vector<std::string> docs;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!Trim(line).empty()) docs.push_back(line);
  }
  if (docs.empty()) throw Error(ErrorCode::kEmptyInput, "no input lines");
  return docs;
}

void WriteFile(const fs::path &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path.string() + "'");
  out << content;
}

LexiconSet LoadLexicons(const Options &opt) {
  if (opt.lexicon_dir.empty()) {
    throw Error(ErrorCode::kIo,
                "no lexicon directory (use --lexicon-dir or "
                "ROMLEX_LEXICON_DIR)");
  }
  LexiconSet lexicons = LoadLexiconSet(opt.lexicon_dir);
  if (opt.varieties.empty()) return lexicons;
  LexiconSet selected;
  for (const std::string &label : opt.varieties) {
    Variety variety = ParseVariety(label);
    auto it = lexicons.find(variety);
    if (it == lexicons.end()) {
      throw Error(ErrorCode::kUnknownVariety,
                  "no lexicon loaded for " + std::string(VarietyTag(variety)));
    }
    selected.insert(*it);
  }
  return selected;
}

// An explicitly named directory must exist; the default may be absent.
TokenizerConfig LoadPatterns(const Options &opt) {
  if (!opt.patterns_dir.empty()) {
    return TokenizerConfig::LoadDirectory(opt.patterns_dir);
  }
  const fs::path fallback = fs::path(ROMLEX_DATA_DIR) / "protected";
  std::error_code ec;
  if (fs::is_directory(fallback, ec)) {
    return TokenizerConfig::LoadDirectory(fallback);
  }
  return {};
}

Stopwords LoadStopwords(const Options &opt) {
  if (!opt.stopwords_dir.empty()) {
    return Stopwords::LoadDirectory(opt.stopwords_dir);
  }
  const fs::path fallback = fs::path(ROMLEX_DATA_DIR) / "stopwords";
  std::error_code ec;
  if (fs::is_directory(fallback, ec)) return Stopwords::LoadDirectory(fallback);
  return {};
}

std::string Fixed(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.4f", value);
  return buffer;
}

Json ReportJson(const ScoreReport &report) {
  Json json;
  Json scores = Json::object();
  for (const auto &[variety, score] : report.scores) {
    scores[std::string(VarietyTag(variety))] = score;
  }
  json["scores"] = scores;
  json["winning_variety"] = VarietyTag(report.winning_variety);
  json["winning_score"] = report.winning_score;
  json["token_count"] = report.token_count;
  json["mode"] = ScoreModeName(report.mode);
  return json;
}

std::string ScoreLines(const ScoreReport &report) {
  std::ostringstream out;
  for (const auto &[variety, score] : report.scores) {
    out << "  " << VarietyTag(variety) << '\t' << Fixed(score) << '\n';
  }
  return out.str();
}

// token, knowledge, lemma, features, gloss, variety.
void PrintTsv(const TokenAnalysis &token) {
  const std::string_view known = KnowledgeName(token.known);
  if (token.analyses.empty())
    std::cout << token.token << '\t' << known << "\t\t\t\n";
  for (const Analysis &a : token.analyses) {
    std::cout << token.token << '\t' << known << '\t' << a.lemma << '\t'
              << a.features.Serialize() << '\t' << a.gloss << '\t'
              << VarietyTag(a.variety) << '\n';
  }
}

int CmdBuild(const Options &opt) {
  EntryParser parser;
  std::vector<CompiledLexicon> compiled =
      CompileDirectory(opt.dictionaries, opt.inflections, opt.fallback, parser);
  fs::create_directories(opt.out_dir);
  std::vector<BuildReport> reports;
  for (const CompiledLexicon &item : compiled) {
    const BuildReport &report = item.report;
    item.lexicon.Save(fs::path(opt.out_dir) /
                      (std::string(VarietyName(report.variety)) + ".lexc"));
    for (const std::string &diagnostic : report.diagnostics) {
      std::cerr << VarietyName(report.variety) << ".tsv " << diagnostic << '\n';
    }
    reports.push_back(report);
  }
  WriteFile(fs::path(opt.out_dir) / "build_report.json",
            BuildReportJson(reports));
  if (opt.format == "json") {
    std::cout << BuildReportJson(reports);
  } else {
    std::cout << FormatStatsTable(reports);
  }
  return kExitOk;
}

int CmdLemmatize(const Options &opt) {
  LexiconSet lexicons = LoadLexicons(opt);
  TokenizerConfig patterns = LoadPatterns(opt);
  std::string text = InputText(opt);

  if (opt.all_varieties) {
    std::vector<std::string> tokens = Tokenize(text, patterns);
    if (tokens.empty()) throw Error(ErrorCode::kEmptyInput, "no tokens");
    for (const std::string &token : tokens) {
      TokenAnalysis analysis;
      analysis.token = token;
      analysis.analyses = LemmatizeAllVarieties(token, lexicons);
      for (const auto &[variety, lexicon] : lexicons) {
        analysis.known = std::min(analysis.known, lexicon.IsKnown(token));
      }
      if (opt.format == "json") {
        std::cout << TokenAnalysisJson(analysis) << '\n';
      } else if (opt.format == "tsv") {
        PrintTsv(analysis);
      } else {
        std::cout << token << "  (" << KnowledgeName(analysis.known) << ")\n";
        if (!analysis.analyses.empty()) {
          std::cout << FormatAnalysisTable(analysis.analyses);
        }
      }
    }
    return kExitOk;
  }

  std::optional<Variety> variety;
  if (!opt.variety.empty()) variety = ParseVariety(opt.variety);
  LemmatizeResult result = Lemmatize(text, variety, lexicons, patterns);
  if (opt.format == "json") {
    for (const TokenAnalysis &token : result.tokens) {
      std::cout << TokenAnalysisJson(token) << '\n';
    }
  } else if (opt.format == "tsv") {
    for (const TokenAnalysis &token : result.tokens) PrintTsv(token);
  } else {
    std::cout << FormatLemmatizeResult(result);
  }
  return kExitOk;
}

int CmdIdentify(const Options &opt) {
  LexiconSet lexicons = LoadLexicons(opt);
  TokenizerConfig patterns = LoadPatterns(opt);
  for (const std::string &doc : InputDocuments(opt)) {
    ScoreReport report = IdentifyVariety(doc, lexicons, patterns);
    if (opt.format == "json") {
      std::cout << ReportJson(report).dump() << '\n';
    } else if (opt.format == "tsv") {
      std::cout << VarietyName(report.winning_variety) << '\t'
                << Fixed(report.winning_score) << '\n';
    } else {
      std::cout << VarietyName(report.winning_variety) << '\n'
                << ScoreLines(report);
    }
  }
  return kExitOk;
}

int CmdLid(const Options &opt) {
  LexiconSet lexicons = LoadLexicons(opt);
  TokenizerConfig patterns = LoadPatterns(opt);
  Stopwords stopwords = LoadStopwords(opt);
  ScoreMode mode = ParseScoreMode(opt.mode);
  for (const std::string &doc : InputDocuments(opt)) {
    LidDecision decision = IdentifyLanguage(doc, lexicons, mode, opt.threshold,
                                            stopwords, patterns);
    const char *label = decision.is_romansh ? "romansh" : "not romansh";
    if (opt.format == "json") {
      Json json = ReportJson(decision.report);
      json["threshold"] = decision.threshold;
      json["is_romansh"] = decision.is_romansh;
      json["decision"] = label;
      std::cout << json.dump() << '\n';
    } else if (opt.format == "tsv") {
      std::cout << label << '\t' << Fixed(decision.report.winning_score) << '\t'
                << VarietyTag(decision.report.winning_variety) << '\n';
    } else {
      std::cout << label << " (score " << Fixed(decision.report.winning_score)
                << ", " << VarietyName(decision.report.winning_variety)
                << ", threshold " << Fixed(decision.threshold) << ")\n";
    }
  }
  return kExitOk;
}

int CmdEval(const Options &opt) {
  LexiconSet lexicons = LoadLexicons(opt);
  TokenizerConfig patterns = LoadPatterns(opt);
  std::ifstream in(opt.samples);
  if (!in) throw Error(ErrorCode::kIo, "cannot read '" + opt.samples + "'");
  std::vector<LabeledSample> samples = ReadSamplesJsonl(in, patterns);
  if (samples.empty()) throw Error(ErrorCode::kEmptyInput, "no samples");

  if (opt.task == "coverage" || opt.task == "variety") {
    EvalTable table =
        opt.task == "coverage"
            ? CoverageTable(samples, lexicons, VarietyBuckets(), patterns)
            : VarietyAccuracyTable(samples, lexicons, VarietyBuckets(),
                                   patterns);
    std::cout << (opt.format == "tsv" ? table.FormatTsv()
                                      : table.FormatPretty());
    return kExitOk;
  }
  LidReport report =
      LidDistributions(samples, lexicons, ParseScoreMode(opt.mode),
                       LidBuckets(), LoadStopwords(opt), patterns);
  if (!opt.histogram.empty()) {
    WriteFile(opt.histogram, report.FormatCsv());
  } else {
    std::cout << report.FormatCsv() << '\n';
  }
  std::cout << report.FormatThresholds();
  std::cout << "skipped\t" << report.skipped << '\n';
  return kExitOk;
}

// A CSV with a "winning_score" column, or one number per line.
std::vector<double> ReadScores(const std::string &path) {
  std::istringstream in(ReadFile(path));
  std::vector<double> scores;
  std::string line;
  int column = -1;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (Trim(line).empty()) continue;
    std::vector<std::string> fields;
    std::stringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) fields.emplace_back(Trim(cell));
    if (line_number == 1 && column < 0) {
      for (size_t i = 0; i < fields.size(); ++i) {
        if (fields[i] == "winning_score") column = static_cast<int>(i);
      }
      if (column >= 0) continue;
    }
    const size_t index = column >= 0 ? static_cast<size_t>(column) : 0;
    try {
      if (index >= fields.size()) throw std::invalid_argument("short row");
      size_t used = 0;
      double value = std::stod(fields[index], &used);
      if (used != fields[index].size()) throw std::invalid_argument("junk");
      scores.push_back(value);
    } catch (const std::exception &) {
      throw Error(
          ErrorCode::kCorruptFile,
          path + " line " + std::to_string(line_number) + ": not a score");
    }
  }
  return scores;
}

int CmdCalibrate(const Options &opt) {
  ThresholdResult result =
      FindThreshold(ReadScores(opt.positives), ReadScores(opt.negatives));
  if (opt.format == "json") {
    Json json;
    json["threshold"] = result.threshold;
    json["misclassified"] = result.misclassified;
    json["margin"] = result.margin;
    std::cout << json.dump() << '\n';
  } else {
    std::cout << "threshold\t" << Fixed(result.threshold) << '\n'
              << "misclassified\t" << result.misclassified << '\n'
              << "margin\t" << Fixed(result.margin) << '\n';
  }
  return kExitOk;
}

int CmdSkeletons(const Options &opt) {
  EntryParser parser;
  std::vector<RawEntry> entries;
  for (const std::string &file : opt.dictionary_files) {
    Variety variety = ParseVariety(fs::path(file).stem().string());
    std::ifstream in(file);
    if (!in) throw Error(ErrorCode::kIo, "cannot read '" + file + "'");
    std::vector<RawEntry> rows = ReadDictionaryTsv(in, variety);
    entries.insert(entries.end(), rows.begin(), rows.end());
  }
  std::vector<SkeletonCase> cases =
      GenerateSkeletons(entries, opt.min_count, parser);
  fs::create_directories(opt.out_dir);
  for (SkeletonCase &skeleton : cases) {
    if (opt.prefill) {
      try {
        skeleton.gold_records = parser.Parse(skeleton.example_entry);
      } catch (const Error &) {
        // Left empty: the pattern needs a new rule first.
      }
    }
    WriteFile(fs::path(opt.out_dir) / SkeletonFileName(skeleton),
              FormatSkeleton(skeleton));
    std::cout << skeleton.occurrence_count << '\t'
              << PosLabel(skeleton.pos_category) << '\t'
              << skeleton.signature.rendered << '\n';
  }
  return kExitOk;
}

int ExitCodeFor(ErrorCode code) {
  return code == ErrorCode::kEmptyInput ? kExitEmpty : kExitConfig;
}

int Main(int argc, char **argv) {
  CLI::App app{
      "Romansh lemmatizer, variety identifier and language "
      "identifier"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML or INI file with option defaults");
  Options opt;

  app.add_option("--lexicon-dir", opt.lexicon_dir,
                 "Directory of compiled .lexc files")
      ->envname("ROMLEX_LEXICON_DIR");
  app.add_option("--patterns", opt.patterns_dir,
                 "Directory of protected-pattern lists (default: shipped)");
  app.add_option("--stopwords", opt.stopwords_dir,
                 "Directory of stopword lists (default: shipped)");
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "pretty", "tsv"}))
      ->capture_default_str();
  app.add_option("--varieties", opt.varieties,
                 "Restrict to these varieties (default: all loaded)")
      ->delimiter(',');

  auto add_text = [&](CLI::App *sub) {
    sub->add_option("text", opt.text, "Input text (default: --file or stdin)");
    sub->add_option("--file,-f", opt.file,
                    "Read input from a file ('-' for "
                    "stdin)");
  };

  CLI::App *build = app.add_subcommand("build", "Compile lexicons");
  build
      ->add_option("--dictionaries", opt.dictionaries,
                   "Directory of <variety>.tsv dictionaries")
      ->required();
  build->add_option("--inflections", opt.inflections,
                    "Directory of <variety>.tsv inflection tables");
  build->add_option("--fallback", opt.fallback,
                    "Directory of <variety>.txt word lists");
  build->add_option("--out", opt.out_dir, "Output directory")->required();

  CLI::App *lemmatize = app.add_subcommand("lemmatize", "Analyze tokens");
  add_text(lemmatize);
  lemmatize->add_option("--variety", opt.variety,
                        "Variety to use (default: detect)");
  lemmatize->add_flag("--all-varieties", opt.all_varieties,
                      "Show analyses from every loaded variety");

  CLI::App *identify = app.add_subcommand("identify", "Identify the variety");
  add_text(identify);
  identify->add_flag("--lines", opt.lines, "Treat every line as a document");

  CLI::App *lid = app.add_subcommand("lid", "Romansh or not");
  add_text(lid);
  lid->add_flag("--lines", opt.lines, "Treat every line as a document");
  lid->add_option("--mode", opt.mode, "as-is, set or set-nostop")
      ->check(CLI::IsMember({"as-is", "set", "set-nostop"}))
      ->capture_default_str();
  lid->add_option("--threshold", opt.threshold, "Decision threshold")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();

  CLI::App *eval = app.add_subcommand("eval", "Evaluate on labeled samples");
  eval->add_option("samples", opt.samples, "JSON-lines sample file")
      ->required();
  eval->add_option("--task", opt.task, "coverage, variety or lid")
      ->check(CLI::IsMember({"coverage", "variety", "lid"}))
      ->capture_default_str();
  eval->add_option("--mode", opt.mode, "Score mode for the lid task")
      ->check(CLI::IsMember({"as-is", "set", "set-nostop"}))
      ->capture_default_str();
  eval->add_option("--histogram", opt.histogram,
                   "Write the lid score CSV here instead of stdout");

  CLI::App *calibrate =
      app.add_subcommand("calibrate", "Choose a decision threshold");
  calibrate->add_option("positives", opt.positives, "Romansh scores")
      ->required();
  calibrate->add_option("negatives", opt.negatives, "Other-language scores")
      ->required();

  CLI::App *skeletons =
      app.add_subcommand("skeletons", "Write pattern test skeletons");
  skeletons
      ->add_option("dictionaries", opt.dictionary_files,
                   "<variety>.tsv dictionary files")
      ->required();
  skeletons->add_option("--out", opt.out_dir, "Output directory")->required();
  skeletons
      ->add_option("--min-count", opt.min_count,
                   "Keep patterns seen more often than this")
      ->capture_default_str();
  skeletons->add_flag("--prefill", opt.prefill,
                      "Fill gold sections with the current parser output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e) == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*build) return CmdBuild(opt);
    if (*lemmatize) return CmdLemmatize(opt);
    if (*identify) return CmdIdentify(opt);
    if (*lid) return CmdLid(opt);
    if (*eval) return CmdEval(opt);
    if (*calibrate) return CmdCalibrate(opt);
    if (*skeletons) return CmdSkeletons(opt);
  } catch (const Error &e) {
    std::cerr << "romlex: " << ErrorCodeName(e.code()) << ": " << e.what()
              << '\n';
    return ExitCodeFor(e.code());
  } catch (const std::exception &e) {
    std::cerr << "romlex: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace
}  // namespace romlex

int main(int argc, char **argv) { return romlex::Main(argc, argv); }
