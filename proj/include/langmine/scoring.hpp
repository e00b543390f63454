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

#ifndef LANGMINE_SCORING_HPP_
#define LANGMINE_SCORING_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "langmine/lexicon.hpp"

namespace langmine {

struct ScoreConfig {
  // Treat punctuation as a token separator before splitting.
  bool punct_normalize = false;
  // Minimum document token length in scalar values.
  std::uint32_t min_token_len = 1;

  void validate() const;
  bool operator==(const ScoreConfig&) const = default;
};

// The distinct, folded whitespace tokens of a text, kept in byte order.
class TypeSet {
 public:
  using const_iterator = std::vector<std::string>::const_iterator;

  TypeSet() = default;
  // Sorts and dedups; throws Error(kInvalidArgument) on empty members or
  // members containing whitespace.
  explicit TypeSet(std::vector<std::string> types);

  // Caller guarantees sorted, duplicate-free, well-formed input.
  static TypeSet from_sorted_unique(std::vector<std::string> types);

  std::size_t size() const { return types_.size(); }
  bool empty() const { return types_.empty(); }
  const_iterator begin() const { return types_.begin(); }
  const_iterator end() const { return types_.end(); }
  const std::vector<std::string>& types() const { return types_; }
  bool contains(std::string_view type) const;

  bool operator==(const TypeSet&) const = default;

 private:
  std::vector<std::string> types_;
};

// Reusable tokenizer state for the scoring hot path. scan() yields the same
// types as tokenize() in unspecified order, as views that stay valid until the
// next scan(). Not thread-safe; use one per worker.
class TypeScanner {
 public:
  std::span<const std::string_view> scan(std::string_view text, const ScoreConfig& config);
  std::span<const std::string_view> types() const { return types_; }
  // Lexicon::hash_type of each entry of types().
  std::span<const std::size_t> hashes() const { return hashes_; }
  TypeSet to_type_set() const;

 private:
  bool insert(std::string_view token);

  std::string arena_;
  std::vector<std::string_view> types_;
  std::vector<std::size_t> hashes_;
  // Open addressing over the low mask_ + 1 slots; 0 = empty, else index + 1.
  std::vector<std::uint32_t> slots_;
  std::vector<std::uint32_t> used_slots_;
  std::size_t mask_ = 0;
};

TypeSet tokenize(std::string_view text, const ScoreConfig& config = {});

// |types ∩ lexicon|. Each type counts once regardless of its frequency in
// the source text.
std::uint32_t score(const TypeSet& types, const Lexicon& lexicon);
// Same, over duplicate-free views.
std::uint32_t score(std::span<const std::string_view> types, const Lexicon& lexicon);
// Same, over the last scan.
std::uint32_t score(const TypeScanner& scanned, const Lexicon& lexicon);

}  // namespace langmine

#endif  // LANGMINE_SCORING_HPP_
