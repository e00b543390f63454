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

#ifndef LANGMINE_DOC_FILTER_HPP_
#define LANGMINE_DOC_FILTER_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "langmine/lexicon.hpp"
#include "langmine/scoring.hpp"
#include "langmine/warc.hpp"

namespace langmine {

inline constexpr std::uint32_t kDefaultThreshold = 5;
inline constexpr std::uint32_t kDefaultTolerance = 1;

// Which documents get their vocabularies cached.
enum class IndexMode {
  kNone,
  // Documents whose best whitelist score reaches the threshold, before the
  // blacklist gate. Replays are exact for any tolerance and for any
  // threshold at or above the indexing threshold.
  kPassing,
  // Every document; replays are exact for any configuration.
  kAll,
};

struct FilterConfig {
  std::uint32_t threshold = kDefaultThreshold;
  std::uint32_t tolerance = kDefaultTolerance;
  std::vector<std::shared_ptr<const Lexicon>> targets;
  std::vector<std::shared_ptr<const Lexicon>> blacklists;
  ScoreConfig score;
  IndexMode cache_vocabularies = IndexMode::kPassing;

  // Throws Error(kConfig) on threshold/tolerance < 1, no targets, duplicate
  // target codes or a list of the wrong kind.
  void validate() const;
};

struct ScoredDocument {
  std::uint64_t id = 0;
  std::string uri;
  std::vector<std::string> crawler_lang;
  // Empty when the document was rebuilt from a vocabulary index.
  std::string text;
  std::map<std::string, std::uint32_t, std::less<>> wsc;
  // Maximum over all blacklists.
  std::uint32_t bsc = 0;

  std::uint32_t wsc_for(std::string_view language) const;

  // Identity and scores only; text is ignored.
  bool same_scores(const ScoredDocument& other) const;
};

struct FilterCounters {
  std::uint64_t documents = 0;
  std::uint64_t below_threshold = 0;
  std::uint64_t blacklisted = 0;
  std::uint64_t kept = 0;
  // Documents whose blacklist score was computed.
  std::uint64_t blacklist_evaluations = 0;

  FilterCounters& operator+=(const FilterCounters& other);
};

// Per-document identity without the body, as stored in an index.
struct DocumentMeta {
  std::uint64_t id = 0;
  std::string uri;
  std::vector<std::string> crawler_lang;
};

// Scores from an already tokenized type set. Blacklists are only consulted
// when some target reaches the threshold. passed_whitelist, when given,
// reports whether that happened.
std::optional<ScoredDocument> filter_types(const DocumentMeta& meta,
                                           const TypeSet& types,
                                           const FilterConfig& config,
                                           FilterCounters* counters = nullptr,
                                           bool* passed_whitelist = nullptr);

// Tokenizes once and applies both gates. types_out receives the document's
// type set for vocabulary caching.
std::optional<ScoredDocument> filter_document(const warc::Document& doc,
                                              const FilterConfig& config,
                                              FilterCounters* counters = nullptr,
                                              TypeSet* types_out = nullptr,
                                              bool* passed_whitelist = nullptr);

// Descending wsc[language], then ascending id.
bool ranks_before(const ScoredDocument& a, const ScoredDocument& b,
                  std::string_view language);

std::vector<ScoredDocument> rank(std::vector<ScoredDocument> scored,
                                 std::string_view language);

// The subset of a joint run that belongs to one language's corpus.
std::vector<ScoredDocument> kept_for(const std::vector<ScoredDocument>& scored,
                                     std::string_view language,
                                     std::uint32_t threshold);

}  // namespace langmine

#endif  // LANGMINE_DOC_FILTER_HPP_
