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

#include "romlex/lemmatizer.h"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "romlex/classifier.h"
#include "romlex/error.h"
#include "romlex/normalize.h"

namespace romlex {

namespace {

// Display width in code points.
size_t Width(std::string_view text) { return DecodeUtf8(text).size(); }

std::string Pad(std::string_view text, size_t width) {
  std::string out(text);
  for (size_t w = Width(text); w < width; ++w) out += ' ';
  return out;
}

}  // namespace

LemmatizeResult Lemmatize(std::string_view text, std::optional<Variety> variety,
                          const LexiconSet &lexicons,
                          const TokenizerConfig &config) {
  if (lexicons.empty()) {
    throw Error(ErrorCode::kUnknownVariety, "no lexicon loaded");
  }
  LemmatizeResult result;
  if (variety) {
    if (lexicons.count(*variety) == 0) {
      throw Error(ErrorCode::kUnknownVariety,
                  "no lexicon loaded for " + std::string(VarietyTag(*variety)));
    }
    result.variety = *variety;
  } else {
    result.variety = IdentifyVariety(text, lexicons, config).winning_variety;
    result.detected = true;
  }

  std::vector<std::string> tokens = Tokenize(text, config, result.variety);
  if (tokens.empty()) throw Error(ErrorCode::kEmptyInput, "no tokens in input");
  const Lexicon &lexicon = lexicons.at(result.variety);
  result.tokens.reserve(tokens.size());
  for (std::string &token : tokens) {
    TokenAnalysis analysis;
    analysis.analyses = lexicon.Lookup(token);
    analysis.known = lexicon.IsKnown(token);
    analysis.token = std::move(token);
    result.tokens.push_back(std::move(analysis));
  }
  return result;
}

std::vector<Analysis> LemmatizeAllVarieties(std::string_view token,
                                            const LexiconSet &lexicons) {
  std::vector<Analysis> out;
  for (const auto &[variety, lexicon] : lexicons) {
    const std::vector<Analysis> &analyses = lexicon.Lookup(token);
    out.insert(out.end(), analyses.begin(), analyses.end());
  }
  return out;
}

std::string TokenAnalysisJson(const TokenAnalysis &analysis) {
  nlohmann::ordered_json json;
  json["token"] = analysis.token;
  json["known"] = KnowledgeName(analysis.known);
  json["analyses"] = nlohmann::ordered_json::array();
  for (const Analysis &a : analysis.analyses) {
    json["analyses"].push_back({{"lemma", a.lemma},
                                {"features", a.features.Serialize()},
                                {"gloss", a.gloss},
                                {"variety", VarietyTag(a.variety)}});
  }
  return json.dump();
}

std::string FormatAnalysisTable(const std::vector<Analysis> &analyses) {
  std::vector<std::array<std::string, 3>> rows;
  rows.push_back({"Variety", "Lemma [Features]", "Gloss"});
  for (const Analysis &a : analyses) {
    rows.push_back({std::string(VarietyTag(a.variety)),
                    a.lemma + " [" + a.features.Serialize() + "]", a.gloss});
  }
  size_t w0 = 0, w1 = 0;
  for (const auto &row : rows) {
    w0 = std::max(w0, Width(row[0]));
    w1 = std::max(w1, Width(row[1]));
  }
  std::ostringstream out;
  for (const auto &row : rows) {
    out << Pad(row[0], w0) << "  " << Pad(row[1], w1) << "  " << row[2];
    out << '\n';
  }
  return out.str();
}

std::string FormatLemmatizeResult(const LemmatizeResult &result) {
  std::ostringstream out;
  out << "variety: " << VarietyTag(result.variety)
      << (result.detected ? " (detected)" : "") << '\n';
  for (const TokenAnalysis &token : result.tokens) {
    out << '\n' << token.token << "  (" << KnowledgeName(token.known) << ")\n";
    if (!token.analyses.empty()) out << FormatAnalysisTable(token.analyses);
  }
  return out.str();
}

}  // namespace romlex
