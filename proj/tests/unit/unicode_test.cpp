// Copyright 2026 The langmine Authors.
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


#include "doctest.h"
#include "langmine/unicode.hpp"

using namespace langmine::text;

TEST_CASE("decode_next handles one to four byte scalars") {
  const std::string s = "a\xC3\xA9\xE2\x82\xAC\xF0\x9F\x98\x80";  // a é € 😀
  std::size_t pos = 0;
  CHECK(decode_next(s, pos) == U'a');
  CHECK(decode_next(s, pos) == U'é');
  CHECK(decode_next(s, pos) == U'€');
  CHECK(decode_next(s, pos) == U'\U0001F600');
  CHECK(pos == s.size());
}

TEST_CASE("invalid sequences become replacement characters") {
  std::string s = "ok\xFF\xC3(end";
  const std::size_t n = sanitize_utf8(s);
  CHECK(n == 2);
  CHECK(s == "ok\xEF\xBF\xBD\xEF\xBF\xBD(end");
  CHECK(is_valid_utf8(s));
}

TEST_CASE("overlong and surrogate encodings are rejected") {
  CHECK_FALSE(is_valid_utf8("\xC0\xAF"));
  CHECK_FALSE(is_valid_utf8("\xED\xA0\x80"));
  CHECK_FALSE(is_valid_utf8("\xF4\x90\x80\x80"));
  CHECK(is_valid_utf8("\xEF\xBF\xBD"));
}

TEST_CASE("truncated multi-byte tail is one replacement") {
  std::string s = "x\xE2\x82";
  CHECK(sanitize_utf8(s) == 1);
  CHECK(s == "x\xEF\xBF\xBD");
}

TEST_CASE("valid text is untouched by sanitize") {
  std::string s = "Lapli ka tonbé, mèsi!";
  const std::string before = s;
  CHECK(sanitize_utf8(s) == 0);
  CHECK(s == before);
}

TEST_CASE("case folding is simple and Unicode-aware") {
  CHECK(fold_case("PiTi") == "piti");
  CHECK(fold_case("ÉCOLE") == "école");
  CHECK(fold_case("ΣΟΦΙΑ") == "σοφια");
  // Simple folding keeps length: no ß -> ss expansion.
  CHECK(fold_case("Straße") == "straße");
  CHECK(fold_char(U'K') == U'k');  // KELVIN SIGN
}

TEST_CASE("whitespace covers Unicode separators") {
  CHECK(is_whitespace(U' '));
  CHECK(is_whitespace(U'\t'));
  CHECK(is_whitespace(U' '));
  CHECK(is_whitespace(U' '));
  CHECK(is_whitespace(U'　'));
  CHECK_FALSE(is_whitespace(U'a'));
  CHECK_FALSE(is_whitespace(U'é'));
}

TEST_CASE("punctuation set covers ASCII symbols and Unicode P categories") {
  for (char c : std::string("!\"#$%&'()*+,-./:;<=>?@[\\]^_`{|}~")) {
    CHECK_MESSAGE(is_punctuation(static_cast<char32_t>(c)), c);
  }
  CHECK(is_punctuation(U'«'));  // «
  CHECK(is_punctuation(U'…'));  // …
  CHECK(is_punctuation(U'’'));  // ’
  CHECK_FALSE(is_punctuation(U'a'));
  CHECK_FALSE(is_punctuation(U'7'));
  CHECK_FALSE(is_punctuation(U'è'));
}

TEST_CASE("scalar_length counts code points, not bytes") {
  CHECK(scalar_length("") == 0);
  CHECK(scalar_length("piti") == 4);
  CHECK(scalar_length("rété") == 4);
  CHECK(scalar_length("\xF0\x9F\x98\x80") == 1);
}

TEST_CASE("trim strips Unicode whitespace at both ends only") {
  CHECK(trim("  a b  ") == "a b");
  CHECK(trim(" piti　") == "piti");
  CHECK(trim("   ") == "");
  CHECK(contains_whitespace("a b"));
  CHECK(contains_whitespace("a b"));
  CHECK_FALSE(contains_whitespace("piti-a"));
}

TEST_CASE("write_utf8 and append_utf8 agree") {
  for (char32_t c : {U'a', U'é', U'€', U'\U0001F600'}) {
    std::string a;
    append_utf8(a, c);
    char buf[4];
    char* end = write_utf8(buf, c);
    CHECK(std::string(buf, end) == a);
    std::size_t pos = 0;
    CHECK(decode_next(a, pos) == c);
  }
}
