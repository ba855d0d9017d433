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
#include "romlex/lexicon.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>

#include "doctest.h"
#include "romlex/error.h"
#include "test_util.h"

namespace romlex {
namespace {

using testing::BuildFixture;
using testing::Record;

std::vector<std::string> Rows(const std::vector<Analysis> &analyses) {
  std::vector<std::string> out;
  for (const Analysis &a : analyses) {
    out.push_back(std::string(VarietyTag(a.variety)) + " | " + a.lemma + " [" +
                  a.features.Serialize() + "] | " + a.gloss);
  }
  return out;
}

std::filesystem::path TempFile(const std::string &name) {
  return std::filesystem::temp_directory_path() / ("romlex_" + name);
}

void WriteFile(const std::filesystem::path &path, const std::string &data) {
  std::ofstream out(path, std::ios::binary);
  out << data;
}

std::optional<ErrorCode> LoadError(const std::string &data) {
  try {
    Lexicon::Deserialize(data);
  } catch (const Error &e) {
    return e.code();
  }
  return std::nullopt;
}

TEST_CASE("stats count keys, fallback and lemmas") {
  Lexicon lexicon = Lexicon::Build(
      {Record("armaziun", "armaziun", "PoS=N; Gender=FEM; Number=SG"),
       Record("armaziuns", "armaziun", "PoS=N; Gender=FEM; Number=PL")},
      {"zürich"}, Variety::kVallader);
  CHECK(lexicon.stats().vocab_size == 3);
  CHECK(lexicon.stats().mapped_forms == 2);
  CHECK(lexicon.stats().lemma_count == 1);
  CHECK(lexicon.stats().lemmas_by_pos[static_cast<int>(PosCategory::kNoun)] ==
        1);
}

TEST_CASE("empty lexicon") {
  Lexicon lexicon = Lexicon::Build({}, {}, Variety::kPuter);
  CHECK(lexicon.stats() == LexiconStats{});
  CHECK(lexicon.Lookup("a").empty());
  CHECK(lexicon.IsKnown("a") == Knowledge::kUnknown);
  CHECK(lexicon.variety() == Variety::kPuter);
  CHECK(Lexicon::Deserialize(lexicon.Serialize()) == lexicon);
}

TEST_CASE("fomantada in the Vallader fixture") {
  LexiconSet set = BuildFixture("table3");
  const Lexicon &vallader = set.at(Variety::kVallader);
  CHECK(vallader.stats().lemma_count == 3);

  const std::vector<std::string> expected = {
      "rm-vallader | fomantà [PoS=ADJ; Gender=FEM; Number=SG] | ausgehungert",
      "rm-vallader | fomantà [PoS=ADJ; Gender=FEM; Number=SG] | hungrig",
      "rm-vallader | fomantada [PoS=N; Gender=FEM; Number=SG] | Ausgehungerte",
      "rm-vallader | fomantada [PoS=N; Gender=FEM; Number=SG] | Hungrige",
      "rm-vallader | fomantar [PoS=V; VerbForm=PTCP; Tense=PST; "
      "Gender=FEM; Number=SG] | jn aushungern",
  };
  CHECK(Rows(vallader.Lookup("fomantada")) == expected);
  CHECK(Rows(vallader.Lookup("FOMANTADA")) == expected);
  CHECK(vallader.Lookup("xyzzy").empty());

  const Lexicon &surmiran = set.at(Variety::kSurmiran);
  CHECK(Rows(surmiran.Lookup("fomantada")) ==
        std::vector<std::string>{
            "rm-surmiran | fomanto [PoS=ADJ; Gender=FEM; Number=SG] | hungrig",
            "rm-surmiran | fomantar [PoS=V; VerbForm=PTCP; Tense=PST; "
            "Gender=FEM; Number=SG] | aushungern",
        });
}

TEST_CASE("knowledge levels") {
  Lexicon lexicon = Lexicon::Build(
      {Record("chasa", "chasa", "PoS=N; Gender=FEM; Number=SG", "Haus")},
      {"zürich", "chasa"}, Variety::kVallader);
  CHECK(lexicon.IsKnown("chasa") == Knowledge::kLemmatizable);
  CHECK(lexicon.IsKnown("Chasa") == Knowledge::kLemmatizable);
  CHECK(lexicon.IsKnown("Zürich") == Knowledge::kFallbackOnly);
  CHECK(lexicon.IsKnown("berlin") == Knowledge::kUnknown);
  CHECK(lexicon.stats().vocab_size == 2);
  CHECK(KnowledgeName(Knowledge::kFallbackOnly) !=
        KnowledgeName(Knowledge::kUnknown));
}

TEST_CASE("records of another variety are rejected") {
  try {
    Lexicon::Build({Record("a", "a", "PoS=N", "", Variety::kPuter)}, {},
                   Variety::kVallader);
    FAIL("mismatch accepted");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kVarietyMismatch);
  }
}

TEST_CASE("save and load") {
  LexiconSet set = BuildFixture("sentence");
  const Lexicon &vallader = set.at(Variety::kVallader);
  const auto path = TempFile("vallader.lexc");
  vallader.Save(path);
  Lexicon loaded = Lexicon::Load(path);
  CHECK(loaded == vallader);
  CHECK(loaded.stats() == vallader.stats());
  CHECK(loaded.FallbackWords() == vallader.FallbackWords());
  CHECK(Rows(loaded.Lookup("fomantada")) == Rows(vallader.Lookup("fomantada")));

  const std::string data = vallader.Serialize();
  for (size_t cut : {size_t{0}, size_t{5}, data.size() / 3, data.size() / 2,
                     data.size() - 4}) {
    CAPTURE(cut);
    WriteFile(path, data.substr(0, cut));
    try {
      Lexicon::Load(path);
      FAIL("truncated file accepted");
    } catch (const Error &e) {
      CHECK(e.code() == ErrorCode::kCorruptFile);
    }
  }

  std::string old = data;
  old.replace(old.find('\t') + 1, 1, "0");
  CHECK(LoadError(old) == ErrorCode::kIncompatibleVersion);
  CHECK(LoadError(data + "extra\n") == ErrorCode::kCorruptFile);
  CHECK(LoadError("garbage") == ErrorCode::kCorruptFile);
  std::filesystem::remove(path);

  try {
    Lexicon::Load(TempFile("does_not_exist.lexc"));
    FAIL("missing file accepted");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kIo);
  }
}

TEST_CASE("build is independent of record order and repetition") {
  LexiconSet set = BuildFixture("sentence");
  const Lexicon &base = set.at(Variety::kVallader);
  std::vector<FormRecord> records = base.records();
  std::vector<std::string> fallback = base.FallbackWords();
  std::mt19937_64 rng(7);
  for (int round = 0; round < 50; ++round) {
    std::vector<FormRecord> shuffled = records;
    for (size_t i = 0; i < records.size(); ++i) {
      if (rng() % 3 == 0) shuffled.push_back(records[i]);
    }
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    std::vector<std::string> words = fallback;
    if (!words.empty()) words.push_back(words.front());
    std::shuffle(words.begin(), words.end(), rng);
    Lexicon rebuilt = Lexicon::Build(shuffled, words, Variety::kVallader);
    REQUIRE(rebuilt == base);
    CHECK(rebuilt.Serialize() == base.Serialize());
  }
}

TEST_CASE("random lexicons survive serialization") {
  const std::vector<std::string> letters = {"a", "b", "ch", "è",
                                            "ü", "'", "\\", "z"};
  const std::vector<std::string> gloss_letters = {"a",  "B", "\\", "\t",
                                                  "\n", " ", "(",  "ö"};
  const std::vector<std::string> features = {
      "PoS=N; Gender=MASC; Number=SG", "PoS=ADJ; Gender=FEM; Number=PL",
      "PoS=V; VerbForm=INF",
      "PoS=V; VerbForm=FIN; Tense=PRS; Mood=IND; "
      "Person=1; Number=SG",
      "PoS=X"};
  std::mt19937_64 rng(11);
  auto word = [&](const std::vector<std::string> &alphabet, size_t max_length) {
    std::string out = "a";
    size_t length = rng() % max_length;
    for (size_t i = 0; i < length; ++i)
      out += alphabet[rng() % alphabet.size()];
    return out;
  };
  for (int round = 0; round < 100; ++round) {
    std::vector<FormRecord> records;
    const size_t n = rng() % 30;
    for (size_t i = 0; i < n; ++i) {
      records.push_back(Record(word(letters, 6), word(letters, 6),
                               features[rng() % features.size()],
                               word(gloss_letters, 12)));
    }
    std::vector<std::string> fallback;
    for (size_t i = rng() % 5; i > 0; --i) fallback.push_back(word(letters, 6));
    Lexicon lexicon = Lexicon::Build(records, fallback, Variety::kVallader);
    Lexicon copy = Lexicon::Deserialize(lexicon.Serialize());
    REQUIRE(copy == lexicon);
    CHECK(copy.stats() == lexicon.stats());
    const LexiconStats &stats = lexicon.stats();
    CHECK(stats.mapped_forms <= stats.vocab_size);
    size_t by_pos = 0;
    for (size_t count : stats.lemmas_by_pos) by_pos += count;
    CHECK(by_pos == stats.lemma_count);
    for (const FormRecord &r : records) {
      const std::vector<Analysis> &found = lexicon.Lookup(r.surface);
      CHECK_FALSE(found.empty());
      CHECK(std::is_sorted(found.begin(), found.end(), AnalysisLess));
      CHECK(std::adjacent_find(found.begin(), found.end()) == found.end());
    }
  }
}

TEST_CASE("lexicon sets load from a directory") {
  const auto dir = std::filesystem::temp_directory_path() / "romlex_set";
  std::filesystem::remove_all(dir);
  CHECK_THROWS_AS(LoadLexiconSet(dir), Error);
  std::filesystem::create_directories(dir);
  CHECK_THROWS_AS(LoadLexiconSet(dir), Error);
  LexiconSet set = BuildFixture("table3");
  for (const auto &[variety, lexicon] : set) {
    lexicon.Save(dir / (std::string(VarietyName(variety)) + ".lexc"));
  }
  LexiconSet loaded = LoadLexiconSet(dir);
  CHECK(loaded.size() == 2);
  CHECK(loaded.at(Variety::kSurmiran) == set.at(Variety::kSurmiran));
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace romlex
