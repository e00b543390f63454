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

#include "langmine/unicode.hpp"

#include <array>

#include <unicode/uchar.h>

namespace langmine::text {
namespace {

constexpr std::array<bool, 128> make_ascii_punct() {
  std::array<bool, 128> table{};
  for (char c : std::string_view("!\"#$%&'()*+,-./:;<=>?@[\\]^_`{|}~")) {
    table[static_cast<unsigned char>(c)] = true;
  }
  return table;
}

constexpr std::array<bool, 128> kAsciiPunct = make_ascii_punct();

inline bool is_continuation(unsigned char b) { return (b & 0xC0) == 0x80; }

// Properties of the two-byte range, precomputed from ICU on first use.
struct TwoByteTable {
  enum : unsigned char { kWhite = 1, kPunct = 2 };
  std::array<char32_t, 0x800> fold{};
  std::array<unsigned char, 0x800> flags{};

  TwoByteTable() {
    for (UChar32 c = 0x80; c < 0x800; ++c) {
      fold[c] = static_cast<char32_t>(u_foldCase(c, U_FOLD_CASE_DEFAULT));
      flags[c] = static_cast<unsigned char>((u_isUWhiteSpace(c) ? kWhite : 0) |
                                            (u_ispunct(c) ? kPunct : 0));
    }
  }
};

const TwoByteTable& two_byte_table() {
  static const TwoByteTable table;
  return table;
}

}  // namespace

char32_t decode_next(std::string_view s, std::size_t& pos) {
  const auto* p = reinterpret_cast<const unsigned char*>(s.data());
  const std::size_t n = s.size();
  const unsigned char b0 = p[pos];
  if (b0 < 0x80) {
    ++pos;
    return b0;
  }
  // Well-formed sequences per the Unicode UTF-8 table. On failure the
  // maximal valid prefix is consumed as one replacement.
  int need;
  char32_t c;
  unsigned char lo = 0x80, hi = 0xBF;
  if (b0 >= 0xC2 && b0 <= 0xDF) {
    need = 1;
    c = b0 & 0x1F;
  } else if (b0 >= 0xE0 && b0 <= 0xEF) {
    need = 2;
    c = b0 & 0x0F;
    if (b0 == 0xE0) lo = 0xA0;
    if (b0 == 0xED) hi = 0x9F;
  } else if (b0 >= 0xF0 && b0 <= 0xF4) {
    need = 3;
    c = b0 & 0x07;
    if (b0 == 0xF0) lo = 0x90;
    if (b0 == 0xF4) hi = 0x8F;
  } else {
    ++pos;
    return kReplacementChar;
  }
  std::size_t i = pos + 1;
  for (int k = 0; k < need; ++k, ++i) {
    if (i >= n) {
      pos = i;
      return kReplacementChar;
    }
    const unsigned char b = p[i];
    if (k == 0 ? (b < lo || b > hi) : !is_continuation(b)) {
      pos = i;
      return kReplacementChar;
    }
    c = (c << 6) | (b & 0x3F);
  }
  pos = i;
  return c;
}

char* write_utf8(char* out, char32_t c) {
  if (c < 0x80) {
    *out++ = static_cast<char>(c);
  } else if (c < 0x800) {
    *out++ = static_cast<char>(0xC0 | (c >> 6));
    *out++ = static_cast<char>(0x80 | (c & 0x3F));
  } else if (c < 0x10000) {
    *out++ = static_cast<char>(0xE0 | (c >> 12));
    *out++ = static_cast<char>(0x80 | ((c >> 6) & 0x3F));
    *out++ = static_cast<char>(0x80 | (c & 0x3F));
  } else {
    *out++ = static_cast<char>(0xF0 | (c >> 18));
    *out++ = static_cast<char>(0x80 | ((c >> 12) & 0x3F));
    *out++ = static_cast<char>(0x80 | ((c >> 6) & 0x3F));
    *out++ = static_cast<char>(0x80 | (c & 0x3F));
  }
  return out;
}

void append_utf8(std::string& out, char32_t c) {
  if (c < 0x80) {
    out.push_back(static_cast<char>(c));
  } else if (c < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (c >> 6)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else if (c < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (c >> 12)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (c >> 18)));
    out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  }
}

bool is_valid_utf8(std::string_view s) {
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (static_cast<unsigned char>(s[pos]) < 0x80) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    const char32_t c = decode_next(s, pos);
    // A literal U+FFFD in the input is fine; anything else decoding to it
    // was invalid.
    if (c == kReplacementChar &&
        s.substr(start, pos - start) != std::string_view("\xEF\xBF\xBD", 3)) {
      return false;
    }
  }
  return true;
}

std::size_t sanitize_utf8(std::string& s) {
  if (is_valid_utf8(s)) return 0;
  std::string out;
  out.reserve(s.size() + 16);
  std::size_t replacements = 0;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const std::size_t start = pos;
    const char32_t c = decode_next(s, pos);
    if (c == kReplacementChar &&
        s.compare(start, pos - start, "\xEF\xBF\xBD") != 0) {
      ++replacements;
    }
    if (c < 0x80) {
      out.push_back(static_cast<char>(c));
    } else {
      append_utf8(out, c);
    }
  }
  s = std::move(out);
  return replacements;
}

bool is_whitespace(char32_t c) {
  if (c < 0x80) return c == ' ' || (c >= 0x09 && c <= 0x0D);
  if (c < 0x800) return two_byte_table().flags[c] & TwoByteTable::kWhite;
  return u_isUWhiteSpace(static_cast<UChar32>(c));
}

bool is_punctuation(char32_t c) {
  if (c < 0x80) return kAsciiPunct[c];
  if (c < 0x800) return two_byte_table().flags[c] & TwoByteTable::kPunct;
  return u_ispunct(static_cast<UChar32>(c));
}

char32_t fold_char(char32_t c) {
  if (c < 0x80) return (c >= 'A' && c <= 'Z') ? c + 32 : c;
  if (c < 0x800) return two_byte_table().fold[c];
  return static_cast<char32_t>(
      u_foldCase(static_cast<UChar32>(c), U_FOLD_CASE_DEFAULT));
}

std::string fold_case(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t pos = 0;
  while (pos < s.size()) {
    append_utf8(out, fold_char(decode_next(s, pos)));
  }
  return out;
}

std::size_t scalar_length(std::string_view s) {
  std::size_t n = 0;
  for (char ch : s) {
    // Count every byte that is not a continuation byte. Exact for valid
    // UTF-8, which is all the core ever stores.
    if (!is_continuation(static_cast<unsigned char>(ch))) ++n;
  }
  return n;
}

std::string_view trim(std::string_view s) {
  std::size_t begin = 0;
  std::size_t end = s.size();
  while (begin < end) {
    std::size_t next = begin;
    if (!is_whitespace(decode_next(s, next))) break;
    begin = next;
  }
  while (end > begin) {
    // Step back to the start of the last scalar value.
    std::size_t start = end - 1;
    while (start > begin && is_continuation(static_cast<unsigned char>(s[start]))) {
      --start;
    }
    std::size_t probe = start;
    if (!is_whitespace(decode_next(s, probe))) break;
    end = start;
  }
  return s.substr(begin, end - begin);
}

bool contains_whitespace(std::string_view s) {
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (is_whitespace(decode_next(s, pos))) return true;
  }
  return false;
}

}  // namespace langmine::text
