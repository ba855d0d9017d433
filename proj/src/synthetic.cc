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

#include "romlex/synthetic.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "romlex/error.h"

namespace romlex {

namespace {

// The standard distributions are implementation-defined, so values are
// derived from the raw engine output.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  double Uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  size_t Below(size_t n) {
    return std::min(n - 1, static_cast<size_t>(Uniform() * n));
  }

 private:
  std::mt19937_64 engine_;
};

class Zipf {
 public:
  Zipf(size_t n, double exponent) {
    double total = 0.0;
    for (size_t rank = 1; rank <= n; ++rank) {
      total += 1.0 / std::pow(static_cast<double>(rank), exponent);
      cumulative_.push_back(total);
    }
    for (double &c : cumulative_) c /= total;
  }

  size_t Sample(Rng &rng) const {
    auto it =
        std::upper_bound(cumulative_.begin(), cumulative_.end(), rng.Uniform());
    return std::min<size_t>(it - cumulative_.begin(), cumulative_.size() - 1);
  }

 private:
  std::vector<double> cumulative_;
};

std::string MakeWord(Rng &rng) {
  static constexpr const char *kOnsets[] = {"b", "ch", "d",    "f", "g", "l",
                                            "m", "n",  "p",    "r", "s", "t",
                                            "v", "z",  "tsch", "gl"};
  static constexpr const char *kVowels[] = {"a", "e",  "i",  "o", "u",
                                            "ü", "ai", "ia", "ou"};
  std::string word;
  const size_t syllables = 2 + rng.Below(2);
  for (size_t i = 0; i < syllables; ++i) {
    word += kOnsets[rng.Below(std::size(kOnsets))];
    word += kVowels[rng.Below(std::size(kVowels))];
  }
  if (rng.Below(2) == 0) word += kOnsets[rng.Below(std::size(kOnsets))];
  return word;
}

std::vector<std::string> FreshWords(Rng &rng, size_t n,
                                    std::set<std::string> *used) {
  std::vector<std::string> words;
  while (words.size() < n) {
    std::string word = MakeWord(rng);
    if (used->insert(word).second) words.push_back(std::move(word));
  }
  return words;
}

std::string Compose(const std::vector<std::string> &tokens) {
  std::string text;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) text += ' ';
    text += tokens[i];
    // A sentence break every twelve words.
    if (i % 12 == 11 || i + 1 == tokens.size()) text += '.';
  }
  return text;
}

}  // namespace

SyntheticCorpus MakeSyntheticCorpus(const SyntheticOptions &options) {
  if (options.vocabulary_size == 0 || options.texts_per_class == 0 ||
      options.min_tokens == 0 || options.min_tokens > options.max_tokens ||
      options.overlap < 0.0 || options.overlap > 1.0 ||
      options.noise_rate < 0.0 || options.noise_rate >= 1.0) {
    throw Error(ErrorCode::kInvalidArgument, "bad synthetic corpus options");
  }
  Rng rng(options.seed);
  SyntheticCorpus corpus;
  std::set<std::string> used;
  corpus.romansh_vocabulary = FreshWords(rng, options.vocabulary_size, &used);

  const size_t shared = static_cast<size_t>(
      std::llround(options.overlap * options.vocabulary_size));
  // Shared words take the top ranks of the other language.
  corpus.other_vocabulary.assign(corpus.romansh_vocabulary.begin(),
                                 corpus.romansh_vocabulary.begin() + shared);
  for (std::string &word :
       FreshWords(rng, options.vocabulary_size - shared, &used)) {
    corpus.other_vocabulary.push_back(std::move(word));
  }

  std::vector<FormRecord> records;
  for (const std::string &word : corpus.romansh_vocabulary) {
    FormRecord record;
    record.surface = word;
    record.lemma = word;
    record.features.pos = PosCategory::kOther;
    record.variety = Variety::kVallader;
    records.push_back(std::move(record));
  }
  corpus.lexicons.emplace(Variety::kVallader,
                          Lexicon::Build(records, {}, Variety::kVallader));

  const Zipf zipf(options.vocabulary_size, options.zipf_exponent);
  size_t noise_id = 0;
  auto make_text = [&](const std::vector<std::string> &vocabulary,
                       double noise_rate) {
    const size_t length =
        options.min_tokens +
        rng.Below(options.max_tokens - options.min_tokens + 1);
    std::vector<std::string> tokens;
    for (size_t i = 0; i < length; ++i) {
      if (noise_rate > 0.0 && rng.Uniform() < noise_rate) {
        tokens.push_back("N" + std::to_string(++noise_id));
      } else {
        tokens.push_back(vocabulary[zipf.Sample(rng)]);
      }
    }
    return Compose(tokens);
  };
  for (size_t i = 0; i < options.texts_per_class; ++i) {
    corpus.samples.push_back(
        MakeSample("rm-" + std::to_string(i + 1),
                   make_text(corpus.romansh_vocabulary, options.noise_rate),
                   Variety::kVallader, "rm"));
  }
  for (size_t i = 0; i < options.texts_per_class; ++i) {
    corpus.samples.push_back(MakeSample("other-" + std::to_string(i + 1),
                                        make_text(corpus.other_vocabulary, 0.0),
                                        std::nullopt, "other"));
  }
  return corpus;
}

}  // namespace romlex
