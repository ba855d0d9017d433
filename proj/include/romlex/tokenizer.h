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

// Word tokenizer for Romansh text.
//
// Text is split on whitespace; the punctuation marks . , ! ? ; : ( ) " « »
// and the en dash become tokens of their own. Dots between alphanumerics
// (numbers, abbreviations, host names) and commas or colons between digits
// stay inside the token, hyphens are never split, and URLs only lose
// trailing punctuation. An elided clitic of one or two letters is split off
// after its apostrophe: "d’eira" -> "d’" "eira". Whole tokens listed as
// protected patterns are never split.

#ifndef ROMLEX_TOKENIZER_H_
#define ROMLEX_TOKENIZER_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "romlex/types.h"

namespace romlex {

struct TokenizerConfig {
  // Literal tokens that must never be split, per variety.
  std::map<Variety, std::vector<std::string>> protected_patterns;
  bool elision_split = true;

  // Adds one pattern; throws Error(kInvalidArgument) if it is empty or
  // contains whitespace.
  void Protect(Variety variety, std::string_view pattern);

  // Reads one "<variety>.txt" file per variety from a directory: one pattern
  // per line, '#' starts a comment. Files for unknown varieties are an error.
  static TokenizerConfig LoadDirectory(const std::filesystem::path &dir);
};

// Tokenizes with the protected patterns of `variety`, or of every variety
// when none is given.
std::vector<std::string> Tokenize(
    std::string_view text, const TokenizerConfig &config = {},
    std::optional<Variety> variety = std::nullopt);

// True for the tokens ". , ! ? ; :" that evaluation and scoring ignore.
bool IsIgnoredPunctuation(std::string_view token);

std::vector<std::string> RemoveIgnoredPunctuation(
    const std::vector<std::string> &tokens);

}  // namespace romlex

#endif  // ROMLEX_TOKENIZER_H_
