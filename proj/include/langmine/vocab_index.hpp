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

#ifndef LANGMINE_VOCAB_INDEX_HPP_
#define LANGMINE_VOCAB_INDEX_HPP_

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "langmine/doc_filter.hpp"
#include "langmine/scoring.hpp"
#include "langmine/warc.hpp"

// Persisted document vocabularies, so later runs can rescore without
// re-reading the crawl.
//
// File layout (UTF-8, one record per line, tab separated):
//
//   #langmine-vocab-index <TAB> 1
//   #provenance <TAB> <shard identifier>
//   #score <TAB> punct_normalize=<0|1> <TAB> min_token_len=<n>
//   <id> <TAB> <uri> <TAB> <tag,tag,...> <TAB> <type> <TAB> <type> ...
//   #end <TAB> <record count>
//
// Types are byte-ordered. The uri field escapes \t \n \r and backslash with
// a backslash. A file without the #end trailer is treated as truncated.
// While being written the file lives at "<path>.partial" and is renamed into
// place only after the trailer is flushed.
namespace langmine::index {

inline constexpr int kFormatVersion = 1;

struct IndexEntry {
  DocumentMeta meta;
  TypeSet types;

  bool operator==(const IndexEntry& other) const {
    return meta.id == other.meta.id && meta.uri == other.meta.uri &&
           meta.crawler_lang == other.meta.crawler_lang && types == other.types;
  }
};

struct VocabularyIndex {
  std::string provenance;
  ScoreConfig score;
  std::vector<IndexEntry> entries;
};

std::filesystem::path partial_path(const std::filesystem::path& path);

class IndexWriter {
 public:
  IndexWriter(std::filesystem::path path, std::string provenance,
              const ScoreConfig& score);
  // Leaves the ".partial" file behind if finish() was never reached.
  ~IndexWriter();

  IndexWriter(const IndexWriter&) = delete;
  IndexWriter& operator=(const IndexWriter&) = delete;

  void add(const DocumentMeta& meta, const TypeSet& types);
  void add(const warc::Document& doc, const TypeSet& types);

  // Writes the trailer and renames the file into place.
  void finish();

  std::uint64_t records() const { return records_; }

 private:
  void check_stream();

  std::filesystem::path path_;
  std::ofstream out_;
  std::uint64_t records_ = 0;
  bool finished_ = false;
};

class IndexReader {
 public:
  // Throws Error(kIo) when missing, Error(kFormat) on a partial marker or
  // version mismatch.
  explicit IndexReader(const std::filesystem::path& path);

  const std::string& provenance() const { return provenance_; }
  const ScoreConfig& score() const { return score_; }

  // Throws Error(kFormat) when the stream ends without a valid trailer.
  std::optional<IndexEntry> next();

 private:
  std::filesystem::path path_;
  std::ifstream in_;
  std::string provenance_;
  ScoreConfig score_;
  std::uint64_t records_ = 0;
  bool done_ = false;
};

// True if the file begins with the index magic line.
bool looks_like_index(const std::filesystem::path& path);

void write_index(const std::filesystem::path& path, const VocabularyIndex& index);
VocabularyIndex read_index(const std::filesystem::path& path);

// Rescores every cached vocabulary under config. config.score must match the
// settings the index was built with.
std::vector<ScoredDocument> replay_index(const std::filesystem::path& path,
                                         const FilterConfig& config,
                                         FilterCounters* counters = nullptr);

}  // namespace langmine::index

#endif  // LANGMINE_VOCAB_INDEX_HPP_
