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

// UTF-8 text helpers. Surfaces are stored in composed form (NFC) with every
// apostrophe variant mapped to U+2019; lookup keys are additionally
// case-folded. Diacritics are never stripped.

#ifndef ROMLEX_NORMALIZE_H_
#define ROMLEX_NORMALIZE_H_

#include <string>
#include <string_view>
#include <vector>

namespace romlex {

// The canonical apostrophe, U+2019.
inline constexpr std::string_view kApostrophe = "\xE2\x80\x99";

// NFC plus apostrophe unification. Case is preserved.
std::string NormalizeText(std::string_view text);

// NormalizeText plus full Unicode case folding.
std::string LookupKey(std::string_view text);

std::string_view Trim(std::string_view text);
std::string AsciiLower(std::string_view text);

// Code point iteration over UTF-8. Ill-formed sequences decode as U+FFFD.
struct CodePoint {
  char32_t value;
  size_t offset;  // byte offset of the first unit
  size_t length;  // number of bytes
};
std::vector<CodePoint> DecodeUtf8(std::string_view text);
void AppendUtf8(char32_t cp, std::string *out);

bool IsLetter(char32_t cp);
bool IsDigit(char32_t cp);
bool IsSpace(char32_t cp);
bool IsUpper(char32_t cp);
bool IsApostrophe(char32_t cp);

// True if the string is non-empty and consists of letters only.
bool IsAlphabetic(std::string_view text);

// True if the text contains a whitespace code point.
bool ContainsSpace(std::string_view text);

}  // namespace romlex

#endif  // ROMLEX_NORMALIZE_H_
