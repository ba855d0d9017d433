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

#include "romlex/tokenizer.h"

#include <fstream>
#include <unordered_set>

#include "romlex/error.h"
#include "romlex/normalize.h"

namespace romlex {

namespace {

bool IsSplitPunct(char32_t c) {
  switch (c) {
    case '.':
    case ',':
    case '!':
    case '?':
    case ';':
    case ':':
    case '(':
    case ')':
    case '"':
    case 0x00AB:  // «
    case 0x00BB:  // »
    case 0x2013:  // –
      return true;
    default:
      return false;
  }
}

bool IsAlnum(char32_t c) { return IsLetter(c) || IsDigit(c); }

class TokenizerRun {
 public:
  TokenizerRun(const TokenizerConfig &config, std::optional<Variety> variety)
      : config_(config) {
    for (const auto &[v, patterns] : config.protected_patterns) {
      if (variety && v != *variety) continue;
      for (const std::string &pattern : patterns) {
        protected_.insert(LookupKey(pattern));
      }
    }
  }

  std::vector<std::string> Run(std::string_view input) {
    text_ = NormalizeText(input);
    cps_ = DecodeUtf8(text_);
    size_t i = 0;
    while (i < cps_.size()) {
      if (IsSpace(cps_[i].value)) {
        ++i;
        continue;
      }
      size_t end = i;
      while (end < cps_.size() && !IsSpace(cps_[end].value)) ++end;
      Chunk(i, end);
      i = end;
    }
    return std::move(tokens_);
  }

 private:
  std::string Text(size_t begin, size_t end) const {
    if (begin >= end) return "";
    size_t from = cps_[begin].offset;
    size_t to = cps_[end - 1].offset + cps_[end - 1].length;
    return text_.substr(from, to - from);
  }

  bool IsProtected(size_t begin, size_t end) const {
    return !protected_.empty() && protected_.count(LookupKey(Text(begin, end)));
  }

  bool IsUrl(size_t begin, size_t end) const {
    std::string lower = AsciiLower(Text(begin, end));
    return lower.rfind("http://", 0) == 0 || lower.rfind("https://", 0) == 0 ||
           lower.rfind("www.", 0) == 0;
  }

  // Whitespace-delimited chunk [begin, end).
  void Chunk(size_t begin, size_t end) {
    if (IsProtected(begin, end)) {
      tokens_.push_back(Text(begin, end));
      return;
    }
    size_t core_begin = begin;
    while (core_begin < end && IsSplitPunct(cps_[core_begin].value)) {
      ++core_begin;
    }
    size_t core_end = end;
    while (core_end > core_begin && IsSplitPunct(cps_[core_end - 1].value)) {
      --core_end;
    }
    // Longest protected match first, so "etc.," keeps its dot.
    for (size_t e = end; e > core_end; --e) {
      if (IsProtected(core_begin, e)) {
        core_end = e;
        break;
      }
    }
    const bool special =
        core_begin < core_end &&
        (IsUrl(core_begin, core_end) || IsProtected(core_begin, core_end));
    if (!special) {
      Pieces(begin, end);
      return;
    }
    for (size_t i = begin; i < core_begin; ++i)
      tokens_.push_back(Text(i, i + 1));
    tokens_.push_back(Text(core_begin, core_end));
    for (size_t i = core_end; i < end; ++i) tokens_.push_back(Text(i, i + 1));
  }

  // Detaches punctuation, keeping dots between alphanumerics and commas or
  // colons between digits.
  void Pieces(size_t begin, size_t end) {
    size_t start = begin;
    for (size_t i = begin; i < end; ++i) {
      const char32_t c = cps_[i].value;
      if (!IsSplitPunct(c)) continue;
      const bool inner = i > begin && i + 1 < end;
      if (inner) {
        const char32_t prev = cps_[i - 1].value;
        const char32_t next = cps_[i + 1].value;
        if (c == '.' && IsAlnum(prev) && IsAlnum(next)) continue;
        if ((c == ',' || c == ':') && IsDigit(prev) && IsDigit(next)) continue;
      }
      Word(start, i);
      tokens_.push_back(Text(i, i + 1));
      start = i + 1;
    }
    Word(start, end);
  }

  void Word(size_t begin, size_t end) {
    while (begin < end) {
      if (IsProtected(begin, end) || !config_.elision_split) break;
      // One or two letters, an apostrophe, then a letter.
      size_t letters = 0;
      while (begin + letters < end && letters < 3 &&
             IsLetter(cps_[begin + letters].value)) {
        ++letters;
      }
      const size_t apostrophe = begin + letters;
      if (letters < 1 || letters > 2 || apostrophe + 1 >= end ||
          !IsApostrophe(cps_[apostrophe].value) ||
          !IsLetter(cps_[apostrophe + 1].value)) {
        break;
      }
      tokens_.push_back(Text(begin, apostrophe + 1));
      begin = apostrophe + 1;
    }
    if (begin < end) tokens_.push_back(Text(begin, end));
  }

  const TokenizerConfig &config_;
  std::unordered_set<std::string> protected_;
  std::string text_;
  std::vector<CodePoint> cps_;
  std::vector<std::string> tokens_;
};

}  // namespace

void TokenizerConfig::Protect(Variety variety, std::string_view pattern) {
  std::string_view trimmed = Trim(pattern);
  if (trimmed.empty() || ContainsSpace(trimmed)) {
    throw Error(ErrorCode::kInvalidArgument,
                "protected pattern must be a single non-empty token: '" +
                    std::string(pattern) + "'");
  }
  protected_patterns[variety].push_back(NormalizeText(trimmed));
}

TokenizerConfig TokenizerConfig::LoadDirectory(
    const std::filesystem::path &dir) {
  TokenizerConfig config;
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    throw Error(ErrorCode::kIo,
                "pattern directory '" + dir.string() + "' does not exist");
  }
  for (const auto &file : std::filesystem::directory_iterator(dir)) {
    if (file.path().extension() != ".txt") continue;
    Variety variety = ParseVariety(file.path().stem().string());
    std::ifstream in(file.path());
    std::string line;
    while (std::getline(in, line)) {
      size_t hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      if (Trim(line).empty()) continue;
      config.Protect(variety, line);
    }
  }
  return config;
}

std::vector<std::string> Tokenize(std::string_view text,
                                  const TokenizerConfig &config,
                                  std::optional<Variety> variety) {
  return TokenizerRun(config, variety).Run(text);
}

bool IsIgnoredPunctuation(std::string_view token) {
  return token.size() == 1 &&
         std::string_view(".,!?;:").find(token[0]) != std::string_view::npos;
}

std::vector<std::string> RemoveIgnoredPunctuation(
    const std::vector<std::string> &tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const std::string &token : tokens) {
    if (!IsIgnoredPunctuation(token)) out.push_back(token);
  }
  return out;
}

}  // namespace romlex
