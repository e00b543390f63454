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

#include "langmine/second_pass.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>

#include "langmine/error.hpp"
#include "langmine/jsonl.hpp"
#include "langmine/vocab_index.hpp"

namespace langmine::second_pass {
namespace {

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string_view trim_blank(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_list(std::string_view value) {
  std::vector<std::string> items;
  while (!value.empty()) {
    const auto comma = value.find(',');
    const std::string_view item = trim_blank(value.substr(0, comma));
    if (!item.empty()) items.emplace_back(item);
    if (comma == std::string_view::npos) break;
    value.remove_prefix(comma + 1);
  }
  return items;
}

// Parses a bracket expression starting at p[open] == '['. Sets end past the
// closing bracket. Returns false if unterminated.
bool parse_class(std::string_view p, std::size_t open, char ch, bool* matched,
                 std::size_t* end) {
  std::size_t i = open + 1;
  bool negate = false;
  if (i < p.size() && (p[i] == '!' || p[i] == '^')) {
    negate = true;
    ++i;
  }
  bool hit = false;
  bool first = true;
  while (i < p.size() && (first || p[i] != ']')) {
    char lo = p[i];
    if (lo == '\\') {
      if (++i >= p.size()) return false;
      lo = p[i];
    }
    if (i + 2 < p.size() && p[i + 1] == '-' && p[i + 2] != ']') {
      const char hi = p[i + 2];
      if (lo <= ch && ch <= hi) hit = true;
      i += 3;
    } else {
      if (lo == ch) hit = true;
      ++i;
    }
    first = false;
  }
  if (i >= p.size()) return false;
  if (matched) *matched = hit != negate;
  *end = i + 1;
  return true;
}

bool glob_is_valid(std::string_view p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == '\\') {
      if (i + 1 >= p.size()) return false;
      ++i;
    } else if (p[i] == '[') {
      std::size_t end = 0;
      if (!parse_class(p, i, '\0', nullptr, &end)) return false;
      i = end - 1;
    }
  }
  return true;
}

bool glob_match(std::string_view p, std::string_view s) {
  std::size_t pi = 0, si = 0;
  std::size_t star_p = std::string_view::npos, star_s = 0;
  while (si < s.size()) {
    if (pi < p.size()) {
      const char c = p[pi];
      if (c == '*') {
        star_p = ++pi;
        star_s = si;
        continue;
      }
      if (c == '?') {
        ++pi;
        ++si;
        continue;
      }
      if (c == '[') {
        bool matched = false;
        std::size_t end = 0;
        parse_class(p, pi, s[si], &matched, &end);
        if (matched) {
          pi = end;
          ++si;
          continue;
        }
      } else if (c == '\\') {
        if (p[pi + 1] == s[si]) {
          pi += 2;
          ++si;
          continue;
        }
      } else if (c == s[si]) {
        ++pi;
        ++si;
        continue;
      }
    }
    if (star_p != std::string_view::npos) {
      pi = star_p;
      si = ++star_s;
      continue;
    }
    return false;
  }
  while (pi < p.size() && p[pi] == '*') ++pi;
  return pi == p.size();
}

bool parse_bool(std::string_view value, std::string_view key) {
  const std::string v = ascii_lower(value);
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw Error(ErrorCode::kConfig, "bad boolean for " + std::string(key) + ": " + std::string(value));
}

std::uint32_t parse_count(std::string_view value, std::string_view key) {
  std::uint32_t n = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw Error(ErrorCode::kConfig, "bad count for " + std::string(key) + ": " + std::string(value));
  }
  return n;
}

Stage parse_stage(std::string_view name) {
  if (name == "crawler_lang") return Stage::kCrawlerLanguage;
  if (name == "related") return Stage::kRelatedLanguages;
  if (name == "sources") return Stage::kSources;
  throw Error(ErrorCode::kConfig, "unknown second-pass stage '" + std::string(name) + "'");
}

template <typename Pred>
std::vector<Candidate> drop_if(std::vector<Candidate> docs, Pred pred, std::string_view reason,
                               std::vector<DropRecord>* audit) {
  std::vector<Candidate> kept;
  kept.reserve(docs.size());
  for (Candidate& c : docs) {
    if (pred(c)) {
      if (audit) audit->push_back({c.doc.id, std::string(reason)});
    } else {
      kept.push_back(std::move(c));
    }
  }
  return kept;
}

}  // namespace

UrlPattern UrlPattern::parse(std::string_view pattern) {
  if (pattern.empty()) throw Error(ErrorCode::kConfig, "empty URL pattern");
  UrlPattern out;
  out.pattern_ = ascii_lower(pattern);
  out.glob_ = pattern.find_first_of("*?[") != std::string_view::npos;
  if (out.glob_ && !glob_is_valid(out.pattern_)) {
    throw Error(ErrorCode::kConfig, "malformed URL glob '" + std::string(pattern) + "'");
  }
  return out;
}

bool UrlPattern::matches(std::string_view uri) const {
  const std::string lowered = ascii_lower(uri);
  if (glob_) return glob_match(pattern_, lowered);
  return lowered.find(pattern_) != std::string::npos;
}

std::string_view stage_name(Stage stage) {
  switch (stage) {
    case Stage::kCrawlerLanguage: return "crawler_lang";
    case Stage::kRelatedLanguages: return "related";
    case Stage::kSources: return "sources";
  }
  return "unknown";
}

void SecondPassConfig::validate() const {
  if (target.empty()) throw Error(ErrorCode::kConfig, "second pass needs a target language");
  if (loading_threshold < 1) throw Error(ErrorCode::kConfig, "loading_threshold must be >= 1");
  for (const auto& lexicon : related_targets) {
    if (!lexicon) throw Error(ErrorCode::kConfig, "null related lexicon");
    if (lexicon->language_code() == target) {
      throw Error(ErrorCode::kConfig, "related language list contains the target itself");
    }
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      if (order[i] == order[j]) throw Error(ErrorCode::kConfig, "stage listed twice in order");
    }
  }
  score.validate();
}

SecondPassConfig parse_config(std::istream& in, const std::filesystem::path& base_dir) {
  SecondPassConfig config;
  std::uint32_t min_type_len = kDefaultMinTypeLen;
  std::vector<std::pair<std::string, std::filesystem::path>> related;
  std::filesystem::path target_wordlist;
  auto resolve = [&](std::string_view p) {
    std::filesystem::path path(p);
    return path.is_absolute() ? path : base_dir / path;
  };

  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim_blank(raw);
    // '#' opens a comment at line start or after a blank; URLs keep theirs.
    if (line.starts_with('#')) continue;
    for (std::size_t i = 1; i < line.size(); ++i) {
      if (line[i] == '#' && std::isspace(static_cast<unsigned char>(line[i - 1]))) {
        line = trim_blank(line.substr(0, i));
        break;
      }
    }
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kConfig, "line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key = ascii_lower(trim_blank(line.substr(0, eq)));
    const std::string_view value = trim_blank(line.substr(eq + 1));

    if (key == "target") {
      config.target = value;
    } else if (key == "loading_threshold") {
      config.loading_threshold = parse_count(value, key);
    } else if (key == "blocked_crawler_langs") {
      for (const std::string& tag : split_list(value)) {
        config.blocked_crawler_langs.insert(ascii_lower(tag));
      }
    } else if (key == "related") {
      const auto colon = value.find(':');
      if (colon == std::string_view::npos || colon == 0) {
        throw Error(ErrorCode::kConfig, "related expects code:path, got '" + std::string(value) + "'");
      }
      related.emplace_back(std::string(trim_blank(value.substr(0, colon))),
                           resolve(trim_blank(value.substr(colon + 1))));
    } else if (key == "blocked_url") {
      config.blocked_url_patterns.push_back(UrlPattern::parse(value));
    } else if (key == "target_wordlist") {
      target_wordlist = resolve(value);
    } else if (key == "min_type_len") {
      min_type_len = parse_count(value, key);
    } else if (key == "min_token_len") {
      config.score.min_token_len = parse_count(value, key);
    } else if (key == "normalize_punct") {
      config.score.punct_normalize = parse_bool(value, key);
    } else if (key == "order") {
      config.order.clear();
      for (const std::string& stage : split_list(value)) config.order.push_back(parse_stage(stage));
    } else {
      throw Error(ErrorCode::kConfig, "unknown second-pass key '" + key + "'");
    }
  }

  for (const auto& [code, path] : related) {
    config.related_targets.push_back(std::make_shared<const Lexicon>(
        load_lexicon(path, ListKind::kWhitelist, min_type_len, code)));
  }
  if (!target_wordlist.empty()) {
    config.target_lexicon = std::make_shared<const Lexicon>(
        load_lexicon(target_wordlist, ListKind::kWhitelist, min_type_len, config.target));
  }
  config.validate();
  return config;
}

SecondPassConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read second-pass config " + path.string());
  return parse_config(in, path.parent_path());
}

std::vector<Candidate> load_candidates(const std::filesystem::path& path,
                                       const SecondPassConfig& config,
                                       std::vector<DropRecord>* audit, LoadStats* stats) {
  config.validate();
  if (!std::filesystem::exists(path)) {
    throw Error(ErrorCode::kIo, "second-pass input " + path.string() + " does not exist");
  }
  LoadStats local;
  std::vector<Candidate> out;
  const bool need_types = !config.related_targets.empty();

  auto skip = [&](std::uint64_t id) {
    ++local.below_loading_threshold;
    if (audit) audit->push_back({id, "loading_threshold"});
  };

  if (index::looks_like_index(path)) {
    if (!config.target_lexicon) {
      throw Error(ErrorCode::kConfig, "index input needs target_wordlist in the second-pass config");
    }
    index::IndexReader reader(path);
    if (!(reader.score() == config.score)) {
      throw Error(ErrorCode::kConfig, "index tokenization settings differ from the second-pass config");
    }
    while (auto entry = reader.next()) {
      ++local.seen;
      const std::uint32_t wsc = score(entry->types, *config.target_lexicon);
      if (wsc < config.loading_threshold) {
        skip(entry->meta.id);
        continue;
      }
      Candidate c;
      c.doc.id = entry->meta.id;
      c.doc.uri = std::move(entry->meta.uri);
      c.doc.crawler_lang = std::move(entry->meta.crawler_lang);
      c.doc.wsc.emplace(config.target, wsc);
      c.types = std::move(entry->types);
      out.push_back(std::move(c));
      ++local.loaded;
    }
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
    // First look at each record without its body; only survivors of the
    // loading threshold are parsed in full.
    const jsonl::Json::parser_callback_t without_text =
        [](int depth, jsonl::Json::parse_event_t event, jsonl::Json& parsed) {
          return !(depth == 1 && event == jsonl::Json::parse_event_t::key && parsed == "text");
        };
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      ++local.seen;
      jsonl::Json head;
      try {
        head = jsonl::Json::parse(line, without_text);
      } catch (const jsonl::Json::exception& e) {
        throw Error(ErrorCode::kFormat, "bad JSON in " + path.string() + ": " + e.what());
      }
      const auto& wsc = head.at("wsc");
      const std::uint32_t target_wsc =
          wsc.contains(config.target) ? wsc.at(config.target).get<std::uint32_t>() : 0;
      if (target_wsc < config.loading_threshold) {
        skip(head.at("id").get<std::uint64_t>());
        continue;
      }
      Candidate c;
      c.doc = jsonl::parse_scored_document(line);
      if (need_types) c.types = tokenize(c.doc.text, config.score);
      out.push_back(std::move(c));
      ++local.loaded;
    }
  }
  if (stats) *stats = local;
  return out;
}

bool blocked_by_crawler_language(const ScoredDocument& doc, const SecondPassConfig& config) {
  for (const std::string& tag : doc.crawler_lang) {
    if (config.blocked_crawler_langs.contains(ascii_lower(tag))) return true;
  }
  return false;
}

bool outscored_by_related(const Candidate& candidate, const SecondPassConfig& config) {
  const std::uint32_t target = candidate.doc.wsc_for(config.target);
  for (const auto& lexicon : config.related_targets) {
    // Ties keep the document.
    if (score(candidate.types, *lexicon) > target) return true;
  }
  return false;
}

bool blocked_by_source(const ScoredDocument& doc, const SecondPassConfig& config) {
  return std::any_of(config.blocked_url_patterns.begin(), config.blocked_url_patterns.end(),
                     [&](const UrlPattern& p) { return p.matches(doc.uri); });
}

std::vector<Candidate> filter_crawler_language(std::vector<Candidate> docs,
                                               const SecondPassConfig& config,
                                               std::vector<DropRecord>* audit) {
  return drop_if(
      std::move(docs),
      [&](const Candidate& c) { return blocked_by_crawler_language(c.doc, config); },
      "crawler_lang", audit);
}

std::vector<Candidate> filter_related_languages(std::vector<Candidate> docs,
                                                const SecondPassConfig& config,
                                                std::vector<DropRecord>* audit) {
  if (config.related_targets.empty()) return docs;
  return drop_if(
      std::move(docs), [&](const Candidate& c) { return outscored_by_related(c, config); },
      "related", audit);
}

std::vector<Candidate> filter_sources(std::vector<Candidate> docs,
                                      const SecondPassConfig& config,
                                      std::vector<DropRecord>* audit) {
  return drop_if(
      std::move(docs), [&](const Candidate& c) { return blocked_by_source(c.doc, config); },
      "sources", audit);
}

std::vector<Candidate> apply_filters(std::vector<Candidate> docs,
                                     const SecondPassConfig& config,
                                     std::vector<DropRecord>* audit) {
  for (Stage stage : config.order) {
    switch (stage) {
      case Stage::kCrawlerLanguage:
        docs = filter_crawler_language(std::move(docs), config, audit);
        break;
      case Stage::kRelatedLanguages:
        docs = filter_related_languages(std::move(docs), config, audit);
        break;
      case Stage::kSources:
        docs = filter_sources(std::move(docs), config, audit);
        break;
    }
  }
  return docs;
}

}  // namespace langmine::second_pass
