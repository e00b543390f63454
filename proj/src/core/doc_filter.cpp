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

#include "langmine/doc_filter.hpp"

#include <algorithm>
#include <set>

#include "langmine/error.hpp"

namespace langmine {

void FilterConfig::validate() const {
  if (threshold < 1) throw Error(ErrorCode::kConfig, "threshold must be >= 1");
  if (tolerance < 1) throw Error(ErrorCode::kConfig, "tolerance must be >= 1");
  if (targets.empty()) throw Error(ErrorCode::kConfig, "at least one target wordlist is required");
  std::set<std::string, std::less<>> codes;
  for (const auto& target : targets) {
    if (!target) throw Error(ErrorCode::kConfig, "null target lexicon");
    if (target->kind() != ListKind::kWhitelist) {
      throw Error(ErrorCode::kConfig, "target '" + target->language_code() + "' is not a whitelist");
    }
    if (!codes.insert(target->language_code()).second) {
      throw Error(ErrorCode::kConfig, "duplicate target language '" + target->language_code() + "'");
    }
  }
  for (const auto& blacklist : blacklists) {
    if (!blacklist || blacklist->kind() != ListKind::kBlacklist) {
      throw Error(ErrorCode::kConfig, "blacklist entries must be blacklist lexicons");
    }
  }
  score.validate();
}

std::uint32_t ScoredDocument::wsc_for(std::string_view language) const {
  const auto it = wsc.find(language);
  return it == wsc.end() ? 0 : it->second;
}

bool ScoredDocument::same_scores(const ScoredDocument& other) const {
  return id == other.id && uri == other.uri && crawler_lang == other.crawler_lang &&
         wsc == other.wsc && bsc == other.bsc;
}

FilterCounters& FilterCounters::operator+=(const FilterCounters& other) {
  documents += other.documents;
  below_threshold += other.below_threshold;
  blacklisted += other.blacklisted;
  kept += other.kept;
  blacklist_evaluations += other.blacklist_evaluations;
  return *this;
}

namespace {

// Both gates of the filter over any type representation that score() accepts.
template <typename Types>
std::optional<ScoredDocument> run_gates(const DocumentMeta& meta, const Types& types,
                                        const FilterConfig& config, FilterCounters* counters,
                                        bool* passed_whitelist) {
  FilterCounters scratch;
  FilterCounters& c = counters ? *counters : scratch;
  ++c.documents;

  // Small fixed fan-out; avoid allocating for the common rejection path.
  constexpr std::size_t kInline = 8;
  std::uint32_t inline_scores[kInline];
  std::vector<std::uint32_t> heap_scores;
  std::uint32_t* scores = inline_scores;
  if (config.targets.size() > kInline) {
    heap_scores.resize(config.targets.size());
    scores = heap_scores.data();
  }

  std::uint32_t best = 0;
  for (std::size_t i = 0; i < config.targets.size(); ++i) {
    scores[i] = score(types, *config.targets[i]);
    best = std::max(best, scores[i]);
  }
  if (passed_whitelist) *passed_whitelist = best >= config.threshold;
  if (best < config.threshold) {
    ++c.below_threshold;
    return std::nullopt;
  }

  ++c.blacklist_evaluations;
  std::uint32_t bsc = 0;
  for (const auto& blacklist : config.blacklists) {
    bsc = std::max(bsc, score(types, *blacklist));
  }
  if (bsc >= config.tolerance) {
    ++c.blacklisted;
    return std::nullopt;
  }

  ++c.kept;
  ScoredDocument out;
  out.id = meta.id;
  out.uri = meta.uri;
  out.crawler_lang = meta.crawler_lang;
  for (std::size_t i = 0; i < config.targets.size(); ++i) {
    out.wsc.emplace(config.targets[i]->language_code(), scores[i]);
  }
  out.bsc = bsc;
  return out;
}

}  // namespace

std::optional<ScoredDocument> filter_types(const DocumentMeta& meta,
                                           const TypeSet& types,
                                           const FilterConfig& config,
                                           FilterCounters* counters,
                                           bool* passed_whitelist) {
  return run_gates(meta, types, config, counters, passed_whitelist);
}

std::optional<ScoredDocument> filter_document(const warc::Document& doc,
                                              const FilterConfig& config,
                                              FilterCounters* counters,
                                              TypeSet* types_out,
                                              bool* passed_whitelist) {
  thread_local TypeScanner scanner;
  scanner.scan(doc.text, config.score);
  DocumentMeta meta{doc.id, {}, {}};
  std::optional<ScoredDocument> result =
      run_gates(meta, scanner, config, counters, passed_whitelist);
  if (result) {
    result->uri = doc.uri;
    result->crawler_lang = doc.crawler_lang;
    result->text = doc.text;
  }
  if (types_out) *types_out = scanner.to_type_set();
  return result;
}

bool ranks_before(const ScoredDocument& a, const ScoredDocument& b,
                  std::string_view language) {
  const std::uint32_t sa = a.wsc_for(language);
  const std::uint32_t sb = b.wsc_for(language);
  if (sa != sb) return sa > sb;
  return a.id < b.id;
}

std::vector<ScoredDocument> rank(std::vector<ScoredDocument> scored,
                                 std::string_view language) {
  std::sort(scored.begin(), scored.end(),
            [language](const ScoredDocument& a, const ScoredDocument& b) {
              return ranks_before(a, b, language);
            });
  return scored;
}

std::vector<ScoredDocument> kept_for(const std::vector<ScoredDocument>& scored,
                                     std::string_view language,
                                     std::uint32_t threshold) {
  std::vector<ScoredDocument> out;
  for (const ScoredDocument& doc : scored) {
    if (doc.wsc_for(language) >= threshold) out.push_back(doc);
  }
  return out;
}

}  // namespace langmine
