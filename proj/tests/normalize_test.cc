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
#include "romlex/normalize.h"

#include "doctest.h"

namespace romlex {
namespace {

TEST_CASE("composed form") {
  // "a" + combining grave vs precomposed U+00E0.
  CHECK(NormalizeText("fomanta\xCC\x80") == "fomant\xC3\xA0");
  CHECK(NormalizeText("u\xCC\x88na") == "\xC3\xBCna");
}

TEST_CASE("apostrophes unify to U+2019") {
  const std::string canonical =
      "d\xE2\x80\x99"
      "eira";
  CHECK(NormalizeText("d'eira") == canonical);
  CHECK(NormalizeText("d\xE2\x80\x98"
                      "eira") == canonical);
  CHECK(NormalizeText("d\xCA\xBC"
                      "eira") == canonical);
  CHECK(NormalizeText(canonical) == canonical);
}

TEST_CASE("lookup keys fold case and keep diacritics") {
  CHECK(LookupKey("FOMANTADA") == "fomantada");
  CHECK(LookupKey("La") == "la");
  CHECK(LookupKey("\xC3\x9Cna") == "\xC3\xBCna");
  CHECK(LookupKey("fomant\xC3\xA0") != LookupKey("fomanta"));
}

TEST_CASE("normalization is idempotent") {
  for (const char *s : {"Fomant\xC3\xA0", "d'Eira", "A\xCC\x80", "", "x y"}) {
    CHECK(NormalizeText(NormalizeText(s)) == NormalizeText(s));
    CHECK(LookupKey(LookupKey(s)) == LookupKey(s));
  }
}

TEST_CASE("utf-8 decoding") {
  std::vector<CodePoint> cps = DecodeUtf8("a\xC3\xBC\xE2\x80\x99");
  REQUIRE(cps.size() == 3);
  CHECK(cps[1].value == 0xFC);
  CHECK(cps[1].offset == 1);
  CHECK(cps[2].length == 3);
  CHECK(DecodeUtf8("\xFF")[0].value == 0xFFFD);
  std::string out;
  AppendUtf8(0x2019, &out);
  CHECK(out == "\xE2\x80\x99");
}

TEST_CASE("character classes") {
  CHECK(IsLetter(U'ü'));
  CHECK_FALSE(IsLetter(U'1'));
  CHECK(IsDigit(U'7'));
  CHECK(IsSpace(U' '));
  CHECK(IsUpper(U'A'));
  CHECK(IsApostrophe(U'’'));
  CHECK(IsAlphabetic("antalg"));
  CHECK_FALSE(IsAlphabetic("a-b"));
  CHECK(ContainsSpace("a b"));
  CHECK(Trim("  x \t") == "x");
  CHECK(AsciiLower("AbC") == "abc");
}

}  // namespace
}  // namespace romlex
