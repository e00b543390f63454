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

#ifndef LANGMINE_PIPELINE_HPP_
#define LANGMINE_PIPELINE_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "langmine/doc_filter.hpp"
#include "langmine/jsonl.hpp"
#include "langmine/line_ranker.hpp"
#include "langmine/second_pass.hpp"

namespace langmine::pipeline {

struct JobConfig {
  // WET files, or directories whose regular files are taken in name order.
  std::vector<std::filesystem::path> input_paths;
  std::size_t shard_count = 1;
  // Ordinal of the first input file. Jobs that split one crawl give each
  // slice a distinct base so document ids stay unique across jobs.
  std::uint64_t first_file_ordinal = 0;
  std::filesystem::path output_dir;
  FilterConfig filter;
  // Vocabulary indices, one per input file. Requires
  // filter.cache_vocabularies != kNone.
  std::optional<std::filesystem::path> index_dir;
  bool emit_lines = false;
  std::uint32_t min_line_len = kDefaultMinLineLen;
  // Documents per shard between progress lines; 0 disables reporting.
  std::uint64_t stats_interval = 0;

  void validate() const;
};

struct RunReport {
  std::uint64_t documents_scanned = 0;
  std::map<std::string, std::uint64_t> documents_kept;
  std::uint64_t documents_kept_total = 0;
  std::uint64_t bytes_scanned = 0;
  double wall_time = 0.0;
  unsigned cores = 1;
  double docs_per_core_second = 0.0;
  double bytes_per_core_second = 0.0;
  std::uint64_t below_threshold = 0;
  std::uint64_t blacklisted = 0;
  // Records read that never became documents.
  std::uint64_t parse_skipped = 0;
  std::uint64_t blacklist_evaluations = 0;
  std::uint64_t decode_replacements = 0;
  std::uint64_t files_skipped = 0;
  std::uint64_t lines_emitted = 0;
  std::vector<std::string> warnings;

  jsonl::Json to_json() const;
};

// Document ids are (input file ordinal << 32) | record ordinal, so the merged
// ranking does not depend on how files were spread across shards.
inline constexpr int kFileIdShift = 32;

// Output layout under output_dir:
//   <lang>.jsonl          ranked documents per target language
//   lines/<lang>.jsonl    ranked lines (with emit_lines)
//   manifest.json         run report, configuration and status
// A failed run leaves status "failed" in the manifest and no merged files.
RunReport run_first_pass(const JobConfig& config, std::ostream* progress = nullptr);

struct SecondPassReport {
  std::uint64_t seen = 0;
  std::uint64_t loaded = 0;
  std::uint64_t below_loading_threshold = 0;
  std::map<std::string, std::uint64_t> dropped;
  std::uint64_t survivors = 0;
  double wall_time = 0.0;

  jsonl::Json to_json() const;
};

// input is a first-pass output directory, a JSONL corpus or an index file.
// Writes <target>.jsonl, audit.tsv (id, reason) and manifest.json to out_dir.
SecondPassReport run_second_pass(const std::filesystem::path& input,
                                 const second_pass::SecondPassConfig& config,
                                 const std::filesystem::path& out_dir);

// Expands directories and drops duplicates, keeping first-seen order.
std::vector<std::filesystem::path> expand_inputs(const std::vector<std::filesystem::path>& paths);

}  // namespace langmine::pipeline

#endif  // LANGMINE_PIPELINE_HPP_
