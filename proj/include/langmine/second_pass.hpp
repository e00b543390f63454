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

#ifndef LANGMINE_SECOND_PASS_HPP_
#define LANGMINE_SECOND_PASS_HPP_

#include <cstdint>
#include <filesystem>
#include <istream>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "langmine/doc_filter.hpp"
#include "langmine/lexicon.hpp"
#include "langmine/scoring.hpp"

namespace langmine::second_pass {

// A URI block rule. Patterns containing any of * ? [ are globs matched
// against the whole URI; everything else is a substring. Both forms are
// ASCII case-insensitive.
class UrlPattern {
 public:
  // Throws Error(kConfig) on an empty pattern or a malformed glob.
  static UrlPattern parse(std::string_view pattern);

  bool matches(std::string_view uri) const;
  bool is_glob() const { return glob_; }
  const std::string& pattern() const { return pattern_; }

 private:
  std::string pattern_;  // lowercased
  bool glob_ = false;
};

enum class Stage { kCrawlerLanguage, kRelatedLanguages, kSources };

std::string_view stage_name(Stage stage);

struct SecondPassConfig {
  std::string target;
  std::uint32_t loading_threshold = kDefaultThreshold;
  // Lowercased tags.
  std::set<std::string, std::less<>> blocked_crawler_langs;
  std::vector<std::shared_ptr<const Lexicon>> related_targets;
  std::vector<UrlPattern> blocked_url_patterns;
  // Shared by target and related scoring.
  ScoreConfig score;
  // Required only when candidates come from a vocabulary index.
  std::shared_ptr<const Lexicon> target_lexicon;
  std::vector<Stage> order{Stage::kCrawlerLanguage, Stage::kRelatedLanguages,
                           Stage::kSources};

  void validate() const;
};

// Reads the key = value config format:
//
//   target = acf
//   loading_threshold = 10
//   blocked_crawler_langs = swe, ron, tur
//   related = gcr:lists/gcr.txt        (repeatable)
//   blocked_url = gcr.wikipedia.org    (repeatable)
//   target_wordlist = lists/acf.txt
//   min_type_len = 3
//   normalize_punct = false
//   order = crawler_lang, related, sources
//
// '#' starts a comment at line start or after a blank. Relative paths
// resolve against base_dir.
SecondPassConfig parse_config(std::istream& in, const std::filesystem::path& base_dir);
SecondPassConfig load_config(const std::filesystem::path& path);

struct Candidate {
  ScoredDocument doc;
  // Present whenever related-language scoring may need it.
  TypeSet types;
};

struct DropRecord {
  std::uint64_t id = 0;
  std::string reason;
};

struct LoadStats {
  std::uint64_t seen = 0;
  std::uint64_t loaded = 0;
  std::uint64_t below_loading_threshold = 0;
};

// Streams a first-pass JSONL corpus or a vocabulary index and materializes
// only documents with wsc[target] >= loading_threshold.
std::vector<Candidate> load_candidates(const std::filesystem::path& path,
                                       const SecondPassConfig& config,
                                       std::vector<DropRecord>* audit = nullptr,
                                       LoadStats* stats = nullptr);

// Predicates; true means "drop".
bool blocked_by_crawler_language(const ScoredDocument& doc, const SecondPassConfig& config);
bool outscored_by_related(const Candidate& candidate, const SecondPassConfig& config);
bool blocked_by_source(const ScoredDocument& doc, const SecondPassConfig& config);

std::vector<Candidate> filter_crawler_language(std::vector<Candidate> docs,
                                               const SecondPassConfig& config,
                                               std::vector<DropRecord>* audit = nullptr);
std::vector<Candidate> filter_related_languages(std::vector<Candidate> docs,
                                                const SecondPassConfig& config,
                                                std::vector<DropRecord>* audit = nullptr);
std::vector<Candidate> filter_sources(std::vector<Candidate> docs,
                                      const SecondPassConfig& config,
                                      std::vector<DropRecord>* audit = nullptr);

// Applies the drop filters in config.order.
std::vector<Candidate> apply_filters(std::vector<Candidate> docs,
                                     const SecondPassConfig& config,
                                     std::vector<DropRecord>* audit = nullptr);

}  // namespace langmine::second_pass

#endif  // LANGMINE_SECOND_PASS_HPP_
