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

#ifndef LANGMINE_UNICODE_HPP_
#define LANGMINE_UNICODE_HPP_

#include <cstddef>
#include <string>
#include <string_view>

// UTF-8 helpers shared by the ingest, lexicon and scoring code. Lengths are
// always counted in Unicode scalar values, never bytes.
namespace langmine::text {

inline constexpr char32_t kReplacementChar = 0xFFFD;

// Decodes the scalar value starting at s[pos] and advances pos. Invalid or
// truncated sequences decode to U+FFFD and consume at least one byte.
char32_t decode_next(std::string_view s, std::size_t& pos);

// Writes c as UTF-8 at out (at most four bytes) and returns the end.
char* write_utf8(char* out, char32_t c);

void append_utf8(std::string& out, char32_t c);

// Rewrites s so that it is valid UTF-8, replacing every maximal invalid
// subsequence with U+FFFD. Returns the number of replacements made.
std::size_t sanitize_utf8(std::string& s);

bool is_valid_utf8(std::string_view s);

bool is_whitespace(char32_t c);

// General category P* plus the ASCII symbols that tend to be glued to web
// tokens ($ + < = > ^ ` | ~).
bool is_punctuation(char32_t c);

// Simple (1:1) Unicode case folding.
char32_t fold_char(char32_t c);
std::string fold_case(std::string_view s);

std::size_t scalar_length(std::string_view s);

// Strips leading and trailing Unicode whitespace.
std::string_view trim(std::string_view s);

bool contains_whitespace(std::string_view s);

}  // namespace langmine::text

#endif  // LANGMINE_UNICODE_HPP_
