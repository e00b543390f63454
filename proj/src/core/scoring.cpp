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

#include "langmine/scoring.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "langmine/error.hpp"
#include "langmine/unicode.hpp"

namespace langmine {
namespace {

enum : unsigned char { kWord = 0, kSpace = 1, kPunct = 2 };

constexpr std::array<unsigned char, 128> make_ascii_classes() {
  std::array<unsigned char, 128> table{};
  for (unsigned c = 0; c < 128; ++c) {
    if (c == ' ' || (c >= 0x09 && c <= 0x0D)) {
      table[c] = kSpace;
    } else if (c > 0x20 && c < 0x7F &&
               !((c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') ||
                 (c >= 'A' && c <= 'Z'))) {
      table[c] = kPunct;
    }
  }
  return table;
}

constexpr std::array<unsigned char, 128> kAsciiClass = make_ascii_classes();

// Class and folded form of every two-byte scalar (U+0080..U+07FF).
struct TwoByteClasses {
  std::array<unsigned char, 0x800> cls{};
  std::array<char16_t, 0x800> fold{};
  TwoByteClasses() {
    for (char32_t c = 0x80; c < 0x800; ++c) {
      cls[c] = text::is_whitespace(c) ? kSpace : text::is_punctuation(c) ? kPunct : kWord;
      fold[c] = static_cast<char16_t>(text::fold_char(c));
    }
  }
};

const TwoByteClasses& two_byte_classes() {
  static const TwoByteClasses table;
  return table;
}

}  // namespace

void ScoreConfig::validate() const {
  if (min_token_len < 1) {
    throw Error(ErrorCode::kInvalidArgument, "min_token_len must be >= 1");
  }
}

TypeSet::TypeSet(std::vector<std::string> types) : types_(std::move(types)) {
  for (const std::string& t : types_) {
    if (t.empty() || text::contains_whitespace(t)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "type set members must be non-empty and whitespace-free");
    }
  }
  std::sort(types_.begin(), types_.end());
  types_.erase(std::unique(types_.begin(), types_.end()), types_.end());
}

TypeSet TypeSet::from_sorted_unique(std::vector<std::string> types) {
  TypeSet set;
  set.types_ = std::move(types);
  return set;
}

bool TypeSet::contains(std::string_view type) const {
  return std::binary_search(types_.begin(), types_.end(), type);
}

std::span<const std::string_view> TypeScanner::scan(std::string_view text,
                                                    const ScoreConfig& config) {
  const bool strip_punct = config.punct_normalize;
  const std::size_t min_len = config.min_token_len;

  // The arena never reallocates during a scan, so views stay valid. One input
  // byte expands to at most three (U+FFFD).
  const std::size_t capacity = text.size() * 3 + 4;
  if (arena_.size() < capacity) arena_.resize(capacity);
  types_.clear();
  hashes_.clear();
  // Load factor stays at or below one half.
  for (std::uint32_t i : used_slots_) slots_[i] = 0;
  used_slots_.clear();
  std::size_t slot_count = 16;
  while (slot_count < text.size() / 2 + 2) slot_count <<= 1;
  if (slots_.size() < slot_count) slots_.assign(slot_count, 0);
  mask_ = slot_count - 1;

  char* out = arena_.data();
  char* token_start = out;
  std::size_t current_len = 0;
  auto flush = [&] {
    if (current_len >= min_len && current_len > 0) {
      // A repeated token gives its arena bytes back.
      if (!insert({token_start, static_cast<std::size_t>(out - token_start)})) out = token_start;
    }
    token_start = out;
    current_len = 0;
  };

  const TwoByteClasses& two_byte = two_byte_classes();
  const auto* bytes = reinterpret_cast<const unsigned char*>(text.data());
  std::size_t pos = 0;
  while (pos < text.size()) {
    const unsigned char b = bytes[pos];
    if (b < 0x80) {
      const unsigned char cls = kAsciiClass[b];
      ++pos;
      if (cls == kSpace || (cls == kPunct && strip_punct)) {
        flush();
      } else {
        *out++ = static_cast<char>(b >= 'A' && b <= 'Z' ? b + 32 : b);
        ++current_len;
      }
      continue;
    }
    if (b >= 0xC2 && b <= 0xDF && pos + 1 < text.size() && (bytes[pos + 1] & 0xC0) == 0x80) {
      const char32_t c = (static_cast<char32_t>(b & 0x1F) << 6) | (bytes[pos + 1] & 0x3F);
      pos += 2;
      const unsigned char cls = two_byte.cls[c];
      if (cls == kSpace || (cls == kPunct && strip_punct)) {
        flush();
      } else {
        out = text::write_utf8(out, two_byte.fold[c]);
        ++current_len;
      }
      continue;
    }
    const char32_t c = text::decode_next(text, pos);
    if (text::is_whitespace(c) || (strip_punct && text::is_punctuation(c))) {
      flush();
    } else {
      out = text::write_utf8(out, text::fold_char(c));
      ++current_len;
    }
  }
  flush();
  return types_;
}

bool TypeScanner::insert(std::string_view token) {
  const std::size_t mask = mask_;
  const std::size_t hash = Lexicon::hash_type(token);
  std::size_t i = hash & mask;
  while (slots_[i] != 0) {
    const std::uint32_t j = slots_[i] - 1;
    if (hashes_[j] == hash && types_[j] == token) return false;
    i = (i + 1) & mask;
  }
  types_.push_back(token);
  hashes_.push_back(hash);
  slots_[i] = static_cast<std::uint32_t>(types_.size());
  used_slots_.push_back(static_cast<std::uint32_t>(i));
  return true;
}

TypeSet TypeScanner::to_type_set() const {
  std::vector<std::string_view> sorted(types_.begin(), types_.end());
  std::sort(sorted.begin(), sorted.end());
  return TypeSet::from_sorted_unique(std::vector<std::string>(sorted.begin(), sorted.end()));
}

TypeSet tokenize(std::string_view text, const ScoreConfig& config) {
  TypeScanner scanner;
  scanner.scan(text, config);
  return scanner.to_type_set();
}

std::uint32_t score(const TypeSet& types, const Lexicon& lexicon) {
  std::uint32_t matches = 0;
  for (const std::string& type : types) {
    if (lexicon.contains(type)) ++matches;
  }
  return matches;
}

std::uint32_t score(std::span<const std::string_view> types, const Lexicon& lexicon) {
  std::uint32_t matches = 0;
  for (std::string_view type : types) {
    if (lexicon.contains(type)) ++matches;
  }
  return matches;
}

std::uint32_t score(const TypeScanner& scanned, const Lexicon& lexicon) {
  const auto types = scanned.types();
  const auto hashes = scanned.hashes();
  std::uint32_t matches = 0;
  for (std::size_t i = 0; i < types.size(); ++i) {
    if (lexicon.contains(types[i], hashes[i])) ++matches;
  }
  return matches;
}

}  // namespace langmine
