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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "romlex/classifier.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <functional>
#include <random>
#include <set>

#include "doctest.h"
#include "romlex/error.h"
#include "test_util.h"

#ifndef ROMLEX_DATA_DIR
#define ROMLEX_DATA_DIR "data"
#endif

namespace romlex {
namespace {

using testing::BuildFixture;
using testing::Record;
using Tokens = std::vector<std::string>;

constexpr char kSentence[] = "La vuolp d’eira darcheu üna jada fomantada";

Lexicon Knowing(Variety variety, const Tokens &words) {
  return Lexicon::Build({}, words, variety);
}

ErrorCode CodeOf(const std::function<void()> &fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::kIo;
}

// Exhaustive scan written independently of FindThreshold.
ThresholdResult OracleThreshold(const std::vector<double> &pos,
                                const std::vector<double> &neg) {
  std::set<double> values(pos.begin(), pos.end());
  values.insert(neg.begin(), neg.end());
  std::set<double> candidates = {0.0, 1.0};
  for (double a : values) {
    for (double b : values) {
      if (!(a < b)) continue;
      bool adjacent = true;
      for (double c : values) adjacent = adjacent && !(a < c && c < b);
      if (adjacent) candidates.insert((a + b) / 2.0);
    }
  }
  ThresholdResult best{0.0, 1 << 30, -1.0};
  for (double theta : candidates) {
    int errors = 0;
    for (double p : pos) errors += p < theta ? 1 : 0;
    for (double n : neg) errors += n >= theta ? 1 : 0;
    double margin = 2.0;
    for (double v : values) margin = std::min(margin, std::fabs(v - theta));
    if (errors < best.misclassified ||
        (errors == best.misclassified && margin > best.margin + 1e-9)) {
      best = ThresholdResult{theta, errors, margin};
    }
  }
  return best;
}

TEST_CASE("score is the recognized share of tokens") {
  Lexicon lexicon = Knowing(Variety::kVallader, {"a", "b"});
  CHECK(ScoreVariety({"a", "b", "c", "c"}, lexicon) == doctest::Approx(0.5));
  CHECK(ScoreVariety({"a", "B"}, lexicon) == 1.0);
  CHECK(CodeOf([&] { ScoreVariety({}, lexicon); }) == ErrorCode::kEmptyInput);

  Lexicon mixed = Lexicon::Build(
      {Record("chasa", "chasa", "PoS=N; Gender=FEM; Number=SG", "Haus")},
      {"zürich"}, Variety::kVallader);
  CHECK(ScoreVariety({"chasa", "zürich", "berlin"}, mixed) ==
        doctest::Approx(2.0 / 3.0));
}

TEST_CASE("example sentence on the mini lexicons") {
  LexiconSet set = BuildFixture("sentence");
  const Tokens tokens = RemoveIgnoredPunctuation(Tokenize(kSentence));
  REQUIRE(tokens.size() == 8);
  CHECK(ScoreVariety(tokens, set.at(Variety::kVallader)) == 1.0);
  CHECK(ScoreVariety(tokens, set.at(Variety::kSurmiran)) ==
        doctest::Approx(5.0 / 8.0));

  ScoreReport report = IdentifyVariety(kSentence, set);
  CHECK(report.winning_variety == Variety::kVallader);
  CHECK(report.winning_score == 1.0);
  CHECK(report.token_count == 8);
  CHECK(report.scores.size() == set.size());

  CHECK(IdentifyVariety(std::string(kSentence) + ".", set).token_count == 8);
}

TEST_CASE("ties go to the earlier variety") {
  LexiconSet set;
  set.emplace(Variety::kVallader, Knowing(Variety::kVallader, {"chasa"}));
  set.emplace(Variety::kSurmiran, Knowing(Variety::kSurmiran, {"chasa"}));
  set.emplace(Variety::kSursilvan, Knowing(Variety::kSursilvan, {}));
  ScoreReport report = IdentifyVariety("chasa", set);
  CHECK(report.winning_variety == Variety::kSurmiran);
  CHECK(report.winning_score == 1.0);
  CHECK(IdentifyVariety("berlin", set).winning_variety == Variety::kSursilvan);
}

TEST_CASE("identification errors") {
  LexiconSet set;
  set.emplace(Variety::kPuter, Knowing(Variety::kPuter, {"a"}));
  CHECK(CodeOf([&] { IdentifyVariety(".,!", set); }) == ErrorCode::kEmptyInput);
  CHECK(CodeOf([&] { IdentifyVariety("", set); }) == ErrorCode::kEmptyInput);
  CHECK(CodeOf([&] { IdentifyVariety("a", LexiconSet{}); }) ==
        ErrorCode::kUnknownVariety);
  CHECK(CodeOf([&] { IdentifyLanguage("a", set, ScoreMode::kAsIs, 1.5); }) ==
        ErrorCode::kInvalidArgument);
  CHECK(CodeOf([&] { IdentifyLanguage("? !", set, ScoreMode::kAsIs); }) ==
        ErrorCode::kEmptyInput);
  CHECK(CodeOf([] { ParseScoreMode("bag"); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("preprocessing for language identification") {
  Stopwords stopwords;
  stopwords.Add("le");
  CHECK(PreprocessForLid({"a", "b", "a"}, ScoreMode::kSetOfWords) ==
        Tokens{"a", "b"});
  CHECK(PreprocessForLid({"le", "chat", "le"},
                         ScoreMode::kSetOfWordsNoStopwords,
                         stopwords) == Tokens{"chat"});
  CHECK(PreprocessForLid({"a", "b", "c"}, ScoreMode::kAsIs) ==
        Tokens{"a", "b", "c"});
  CHECK(PreprocessForLid({"Le", "le", "LE", "x"}, ScoreMode::kSetOfWords) ==
        Tokens{"Le", "x"});
  CHECK(PreprocessForLid({"Le", "x"}, ScoreMode::kSetOfWordsNoStopwords,
                         stopwords) == Tokens{"x"});

  for (ScoreMode mode : {ScoreMode::kAsIs, ScoreMode::kSetOfWords,
                         ScoreMode::kSetOfWordsNoStopwords}) {
    CHECK(ParseScoreMode(ScoreModeName(mode)) == mode);
  }
}

TEST_CASE("shipped stopword lists") {
  Stopwords stopwords = Stopwords::LoadDirectory(
      std::filesystem::path(ROMLEX_DATA_DIR) / "stopwords");
  CHECK(stopwords.size() > 100);
  for (const char *word : {"le", "Les", "il", "della", "els", "și", "the"}) {
    CAPTURE(word);
    CHECK(stopwords.Contains(word) == (std::string(word) != "the"));
  }
  CHECK_THROWS_AS(Stopwords::LoadDirectory("/nonexistent/romlex"), Error);
}

TEST_CASE("language decisions") {
  LexiconSet set = BuildFixture("sentence");
  LidDecision yes = IdentifyLanguage(kSentence, set);
  CHECK(yes.is_romansh);
  CHECK(yes.report.winning_score == 1.0);
  CHECK(yes.threshold == kDefaultLidThreshold);
  CHECK(kDefaultLidThreshold == 0.6);
  CHECK(yes.report.mode == ScoreMode::kSetOfWords);

  LidDecision no = IdentifyLanguage("The quick brown fox", set);
  CHECK_FALSE(no.is_romansh);
  CHECK(no.report.winning_score == 0.0);

  LidDecision edge =
      IdentifyLanguage("la vuolp x y z", set, ScoreMode::kAsIs, 0.4);
  CHECK(edge.report.winning_score == doctest::Approx(0.4));
  CHECK(edge.is_romansh == (edge.report.winning_score >= 0.4));
  CHECK(IdentifyLanguage("la vuolp x y z", set, ScoreMode::kAsIs, 0.0)
            .is_romansh);
  CHECK_FALSE(IdentifyLanguage("x", set, ScoreMode::kAsIs, 0.01).is_romansh);

  CHECK(IdentifyLanguage("la la la x", set, ScoreMode::kAsIs, 0.6)
            .report.winning_score == doctest::Approx(0.75));
  CHECK(IdentifyLanguage("la la la x", set, ScoreMode::kSetOfWords, 0.6)
            .report.winning_score == doctest::Approx(0.5));
}

TEST_CASE("average score") {
  LexiconSet set;
  set.emplace(Variety::kPuter, Knowing(Variety::kPuter, {"a", "b", "c", "d"}));
  set.emplace(Variety::kVallader, Knowing(Variety::kVallader, {"a", "b", "c"}));
  CHECK(AverageScore("a b c d e", set) == doctest::Approx(0.7));
  CHECK(AverageScore("x y", set) == 0.0);
  LexiconSet single;
  single.emplace(Variety::kPuter, Knowing(Variety::kPuter, {"a"}));
  CHECK(AverageScore("a b c", single) == doctest::Approx(1.0 / 3.0));
  CHECK(CodeOf([&] { AverageScore(":", set); }) == ErrorCode::kEmptyInput);
}

TEST_CASE("threshold examples") {
  ThresholdResult clean = FindThreshold({0.8, 0.9}, {0.2, 0.3});
  CHECK(clean.threshold == doctest::Approx(0.55));
  CHECK(clean.misclassified == 0);
  CHECK(clean.margin == doctest::Approx(0.25));

  // Candidates 0.45 and 0.7 both misclassify one sample; 0.7 has the wider
  // margin (0.1 against 0.05).
  ThresholdResult overlap = FindThreshold({0.5, 0.8}, {0.4, 0.6});
  ThresholdResult oracle = OracleThreshold({0.5, 0.8}, {0.4, 0.6});
  CHECK(overlap.misclassified == 1);
  CHECK(overlap.threshold == doctest::Approx(0.7));
  CHECK(overlap.margin == doctest::Approx(0.1));
  CHECK(oracle.threshold == doctest::Approx(overlap.threshold));

  ThresholdResult degenerate = FindThreshold({0.7}, {0.7});
  CHECK(degenerate.misclassified == 1);
  CHECK(degenerate.threshold == 0.0);
  CHECK(degenerate.margin == doctest::Approx(0.7));

  ThresholdResult flat = FindThreshold({0.5, 0.5, 0.5}, {0.5});
  CHECK(flat.misclassified == 1);

  CHECK(CodeOf([] { FindThreshold({}, {0.1}); }) == ErrorCode::kEmptyInput);
  CHECK(CodeOf([] { FindThreshold({0.1}, {}); }) == ErrorCode::kEmptyInput);
}

TEST_CASE("threshold search agrees with an exhaustive scan") {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 1000; ++round) {
    std::vector<double> pos(1 + rng() % 10);
    std::vector<double> neg(1 + rng() % 10);
    const int grid = round % 2 == 0 ? 20 : 1000;
    for (double &v : pos) v = static_cast<double>(rng() % (grid + 1)) / grid;
    for (double &v : neg) v = static_cast<double>(rng() % (grid + 1)) / grid;
    CAPTURE(round);
    ThresholdResult got = FindThreshold(pos, neg);
    ThresholdResult want = OracleThreshold(pos, neg);
    CHECK(got.misclassified == want.misclassified);
    CHECK(got.margin == doctest::Approx(want.margin));
    CHECK(got.threshold == doctest::Approx(want.threshold));
    CHECK(got.threshold >= 0.0);
    CHECK(got.threshold <= 1.0);
  }
}

TEST_CASE("identical score lists misclassify the smaller class") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 200; ++round) {
    std::vector<double> scores(1 + rng() % 8);
    for (double &v : scores) v = static_cast<double>(rng() % 11) / 10.0;
    std::vector<double> pos = scores;
    std::vector<double> neg = scores;
    CHECK(FindThreshold(pos, neg).misclassified ==
          static_cast<int>(scores.size()));
  }
}

struct RandomWorld {
  LexiconSet lexicons;
  Tokens vocabulary;
};

RandomWorld MakeWorld(std::mt19937_64 &rng) {
  RandomWorld world;
  for (int i = 0; i < 12; ++i)
    world.vocabulary.push_back("w" + std::to_string(i));
  for (Variety variety :
       {Variety::kSursilvan, Variety::kPuter, Variety::kVallader}) {
    Tokens known;
    for (const std::string &word : world.vocabulary) {
      if (rng() % 2 == 0) known.push_back(word);
    }
    world.lexicons.emplace(variety, Knowing(variety, known));
  }
  return world;
}

Tokens RandomTokens(std::mt19937_64 &rng, const Tokens &vocabulary) {
  Tokens tokens(1 + rng() % 15);
  for (std::string &token : tokens)
    token = vocabulary[rng() % vocabulary.size()];
  return tokens;
}

TEST_CASE("score properties") {
  std::mt19937_64 rng(314);
  for (int round = 0; round < 300; ++round) {
    RandomWorld world = MakeWorld(rng);
    const Tokens tokens = RandomTokens(rng, world.vocabulary);
    CAPTURE(round);

    ScoreReport report = ScoreTokens(tokens, world.lexicons);
    for (const auto &[variety, score] : report.scores) {
      CHECK(score >= 0.0);
      CHECK(score <= 1.0);
      CHECK(report.winning_score >= score);
    }
    CHECK(report.scores.at(report.winning_variety) == report.winning_score);
    for (const auto &[variety, score] : report.scores) {
      if (score == report.winning_score) {
        CHECK(variety == report.winning_variety);
        break;
      }
    }

    Tokens doubled = tokens;
    doubled.insert(doubled.begin() + rng() % (doubled.size() + 1),
                   tokens[rng() % tokens.size()]);
    ScoreReport set_once = ScoreTokens(
        PreprocessForLid(tokens, ScoreMode::kSetOfWords), world.lexicons);
    ScoreReport set_twice = ScoreTokens(
        PreprocessForLid(doubled, ScoreMode::kSetOfWords), world.lexicons);
    CHECK(set_once.scores == set_twice.scores);

    // A token known only to one variety.
    Tokens plus = tokens;
    plus.push_back("solo");
    LexiconSet extended = world.lexicons;
    const Variety lucky = Variety::kPuter;
    Tokens lucky_words = extended.at(lucky).FallbackWords();
    lucky_words.push_back("solo");
    extended[lucky] = Knowing(lucky, lucky_words);
    ScoreReport before = ScoreTokens(tokens, extended);
    ScoreReport after = ScoreTokens(plus, extended);
    for (const auto &[variety, score] : after.scores) {
      const double n = static_cast<double>(tokens.size());
      const double known_before = before.scores.at(variety) * n;
      if (variety == lucky) {
        CHECK(score >= before.scores.at(variety) - 1e-12);
        CHECK(score == doctest::Approx((known_before + 1) / (n + 1)));
      } else {
        CHECK(score <= before.scores.at(variety) + 1e-12);
        CHECK(score == doctest::Approx(known_before / (n + 1)));
      }
    }
  }
}

TEST_CASE("uniform lexicon extension keeps the ranking") {
  std::mt19937_64 rng(2718);
  for (int round = 0; round < 300; ++round) {
    RandomWorld world = MakeWorld(rng);
    Tokens tokens = RandomTokens(rng, world.vocabulary);
    const Tokens fresh = {"f1", "f2", "f3"};
    for (int i = rng() % 5; i > 0; --i) tokens.push_back(fresh[rng() % 3]);
    ScoreReport before = ScoreTokens(tokens, world.lexicons);

    LexiconSet extended;
    for (const auto &[variety, lexicon] : world.lexicons) {
      Tokens words = lexicon.FallbackWords();
      words.insert(words.end(), fresh.begin(), fresh.end());
      extended.emplace(variety, Knowing(variety, words));
    }
    ScoreReport after = ScoreTokens(tokens, extended);
    CHECK(after.winning_variety == before.winning_variety);
    for (const auto &[a, score_a] : before.scores) {
      for (const auto &[b, score_b] : before.scores) {
        CHECK(after.scores.at(a) - after.scores.at(b) ==
              doctest::Approx(score_a - score_b));
      }
    }
  }
}

}  // namespace
}  // namespace romlex
