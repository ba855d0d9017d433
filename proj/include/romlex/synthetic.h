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

// Seeded two-language corpus for exercising the language-identification
// pipeline without real data.
//
// Both languages draw word ranks from a Zipf distribution over their own
// vocabulary. The "other" vocabulary reuses a share of the Romansh words
// and ranks them highest, like the function words that related languages
// share. Romansh texts also carry a few unique unknown tokens (names,
// numbers). Output is identical for a given seed on every platform.

#ifndef ROMLEX_SYNTHETIC_H_
#define ROMLEX_SYNTHETIC_H_

#include <cstdint>
#include <string>
#include <vector>

#include "romlex/eval.h"
#include "romlex/lexicon.h"

namespace romlex {

struct SyntheticOptions {
  size_t vocabulary_size = 200;
  // Fraction of the other vocabulary taken from the Romansh one.
  double overlap = 0.2;
  size_t texts_per_class = 50;
  size_t min_tokens = 50;
  size_t max_tokens = 300;
  double zipf_exponent = 1.0;
  // Share of unknown tokens in Romansh texts.
  double noise_rate = 0.05;
  uint64_t seed = 20260901;
};

struct SyntheticCorpus {
  std::vector<std::string> romansh_vocabulary;
  std::vector<std::string> other_vocabulary;
  // Romansh samples first, labeled "rm" and "other".
  std::vector<LabeledSample> samples;
  // Vallader lexicon holding the Romansh vocabulary.
  LexiconSet lexicons;
};

SyntheticCorpus MakeSyntheticCorpus(const SyntheticOptions &options = {});

}  // namespace romlex

#endif  // ROMLEX_SYNTHETIC_H_
