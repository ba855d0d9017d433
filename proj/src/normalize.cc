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

#include "romlex/normalize.h"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include "romlex/error.h"

namespace romlex {

namespace {

const icu::Normalizer2 &Nfc() {
  static const icu::Normalizer2 *nfc = [] {
    UErrorCode status = U_ZERO_ERROR;
    const icu::Normalizer2 *n = icu::Normalizer2::getNFCInstance(status);
    if (U_FAILURE(status)) {
      throw Error(ErrorCode::kIo, "cannot load ICU NFC data");
    }
    return n;
  }();
  return *nfc;
}

icu::UnicodeString ToNfcWithApostrophes(std::string_view text) {
  icu::UnicodeString u = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  // U+0027, U+2018 and U+02BC are folded onto U+2019.
  u.findAndReplace(icu::UnicodeString(static_cast<UChar32>(0x27)),
                   icu::UnicodeString(static_cast<UChar32>(0x2019)));
  u.findAndReplace(icu::UnicodeString(static_cast<UChar32>(0x2018)),
                   icu::UnicodeString(static_cast<UChar32>(0x2019)));
  u.findAndReplace(icu::UnicodeString(static_cast<UChar32>(0x02BC)),
                   icu::UnicodeString(static_cast<UChar32>(0x2019)));
  UErrorCode status = U_ZERO_ERROR;
  icu::UnicodeString composed = Nfc().normalize(u, status);
  if (U_FAILURE(status)) return u;
  return composed;
}

}  // namespace

std::string NormalizeText(std::string_view text) {
  std::string out;
  ToNfcWithApostrophes(text).toUTF8String(out);
  return out;
}

std::string LookupKey(std::string_view text) {
  icu::UnicodeString u = ToNfcWithApostrophes(text);
  u.foldCase();
  UErrorCode status = U_ZERO_ERROR;
  icu::UnicodeString composed = Nfc().normalize(u, status);
  std::string out;
  (U_FAILURE(status) ? u : composed).toUTF8String(out);
  return out;
}

std::string_view Trim(std::string_view text) {
  const char *ws = " \t\r\n\f\v";
  size_t begin = text.find_first_not_of(ws);
  if (begin == std::string_view::npos) return {};
  size_t end = text.find_last_not_of(ws);
  return text.substr(begin, end - begin + 1);
}

std::string AsciiLower(std::string_view text) {
  std::string out(text);
  for (char &c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::vector<CodePoint> DecodeUtf8(std::string_view text) {
  std::vector<CodePoint> out;
  out.reserve(text.size());
  const auto *s = reinterpret_cast<const uint8_t *>(text.data());
  const int32_t length = static_cast<int32_t>(text.size());
  int32_t i = 0;
  while (i < length) {
    int32_t start = i;
    UChar32 c;
    U8_NEXT(s, i, length, c);
    if (c < 0) c = 0xFFFD;
    out.push_back({static_cast<char32_t>(c), static_cast<size_t>(start),
                   static_cast<size_t>(i - start)});
  }
  return out;
}

void AppendUtf8(char32_t cp, std::string *out) {
  uint8_t buf[U8_MAX_LENGTH];
  int32_t n = 0;
  UBool error = false;
  U8_APPEND(buf, n, U8_MAX_LENGTH, static_cast<UChar32>(cp), error);
  if (error) {
    out->append("\xEF\xBF\xBD");
    return;
  }
  out->append(reinterpret_cast<const char *>(buf), n);
}

bool IsLetter(char32_t cp) {
  // Combining marks count as letters so decomposed input stays one word.
  return u_isalpha(cp) || u_getCombiningClass(cp) != 0 ||
         u_charType(cp) == U_NON_SPACING_MARK;
}

bool IsDigit(char32_t cp) { return u_isdigit(cp); }

bool IsSpace(char32_t cp) { return u_isUWhiteSpace(cp); }

bool IsUpper(char32_t cp) { return u_isUUppercase(cp) || u_istitle(cp); }

bool IsApostrophe(char32_t cp) {
  return cp == 0x27 || cp == 0x2019 || cp == 0x2018 || cp == 0x02BC;
}

bool IsAlphabetic(std::string_view text) {
  if (text.empty()) return false;
  for (const CodePoint &cp : DecodeUtf8(text)) {
    if (!IsLetter(cp.value)) return false;
  }
  return true;
}

bool ContainsSpace(std::string_view text) {
  for (const CodePoint &cp : DecodeUtf8(text)) {
    if (IsSpace(cp.value)) return true;
  }
  return false;
}

}  // namespace romlex
