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

#ifndef LANGMINE_LEXICON_HPP_
#define LANGMINE_LEXICON_HPP_

#include <cstddef>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace langmine {

enum class ListKind { kWhitelist, kBlacklist };

inline constexpr std::uint32_t kDefaultMinTypeLen = 3;

struct LexiconLoadStats {
  std::size_t accepted = 0;
  std::size_t rejected_short = 0;
  // Entries with inner whitespace; a type is a single whitespace token.
  std::size_t rejected_whitespace = 0;
  std::size_t duplicates = 0;
};

// An immutable, case-folded type set for one language. Safe to share
// between threads once constructed.
class Lexicon {
 public:
  // Builds from raw entries: trims, folds, drops entries shorter than
  // min_type_len (in scalar values) and dedups. Throws Error(kEmptyLexicon)
  // when nothing survives.
  Lexicon(std::string language_code, ListKind kind, std::uint32_t min_type_len,
          std::span<const std::string> entries, LexiconLoadStats* stats = nullptr);

  const std::string& language_code() const { return language_code_; }
  ListKind kind() const { return kind_; }
  std::uint32_t min_type_len() const { return min_type_len_; }
  std::size_t size() const { return types_.size(); }

  // Fast non-cryptographic hash shared with the tokenizer's dedup table.
  static std::size_t hash_type(std::string_view type) noexcept {
    std::uint64_t h = 0x9E3779B97F4A7C15ull ^ type.size();
    const char* p = type.data();
    std::size_t n = type.size();
    for (; n >= 8; p += 8, n -= 8) {
      std::uint64_t w;
      std::memcpy(&w, p, 8);
      h = (h ^ w) * 0xFF51AFD7ED558CCDull;
      h ^= h >> 32;
    }
    if (n >= 4) {
      // Two overlapping four-byte reads cover the 4..7 byte tail.
      std::uint32_t lo, hi;
      std::memcpy(&lo, p, 4);
      std::memcpy(&hi, p + n - 4, 4);
      h = (h ^ (std::uint64_t{hi} << 32 | lo)) * 0xC4CEB9FE1A85EC53ull;
    } else if (n > 0) {
      const auto byte = [p](std::size_t i) { return std::uint64_t{static_cast<unsigned char>(p[i])}; };
      h = (h ^ (byte(0) | byte(n / 2) << 8 | byte(n - 1) << 16)) * 0xC4CEB9FE1A85EC53ull;
    }
    h ^= h >> 29;
    h *= 0xFF51AFD7ED558CCDull;
    h ^= h >> 32;
    return static_cast<std::size_t>(h);
  }

  bool contains(std::string_view type) const { return contains(type, hash_type(type)); }
  // hash must equal hash_type(type).
  bool contains(std::string_view type, std::size_t hash) const {
    if (type.size() < min_bytes_ || type.size() > max_bytes_) return false;
    for (std::size_t i = hash & mask_;; i = (i + 1) & mask_) {
      const std::uint32_t slot = slots_[i];
      if (slot == 0) return false;
      if (hashes_[slot - 1] == hash && types_[slot - 1] == type) return true;
    }
  }

  // Members in byte order.
  const std::vector<std::string>& sorted_types() const { return types_; }

 private:
  std::string language_code_;
  ListKind kind_;
  std::uint32_t min_type_len_;
  std::vector<std::string> types_;  // sorted
  std::vector<std::size_t> hashes_;  // parallel to types_
  // Open addressing, load factor at most one half; 0 = empty, else index + 1.
  std::vector<std::uint32_t> slots_;
  std::size_t mask_ = 0;
  std::size_t min_bytes_ = 0;
  std::size_t max_bytes_ = 0;
};

// Reads a newline-delimited UTF-8 wordlist. Lines starting with '#' are
// comments. An empty language_code defaults to the file stem.
Lexicon load_lexicon(const std::filesystem::path& path, ListKind kind,
                     std::uint32_t min_type_len = kDefaultMinTypeLen,
                     std::string language_code = {},
                     LexiconLoadStats* stats = nullptr);

void save_lexicon(const Lexicon& lexicon, const std::filesystem::path& path);

struct OverlapReport {
  std::size_t count = 0;
  // Up to max_sample shared types, byte-ordered.
  std::vector<std::string> sample;
};

OverlapReport overlap_report(const Lexicon& a, const Lexicon& b,
                             std::size_t max_sample = 20);

}  // namespace langmine

#endif  // LANGMINE_LEXICON_HPP_
