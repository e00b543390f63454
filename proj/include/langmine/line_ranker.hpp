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

#ifndef LANGMINE_LINE_RANKER_HPP_
#define LANGMINE_LINE_RANKER_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "langmine/doc_filter.hpp"
#include "langmine/lexicon.hpp"
#include "langmine/scoring.hpp"

namespace langmine {

inline constexpr std::uint32_t kDefaultMinLineLen = 15;

struct RankedLine {
  std::uint64_t doc_id = 0;
  // Zero-based position of the line within its document.
  std::uint32_t line_no = 0;
  std::string text;
  // Distinct whitelist types on the line.
  std::uint32_t matches = 0;
  // Line length in scalar values.
  std::uint32_t length = 0;
  // matches / length, or 0 for an empty line.
  double norm_score = 0.0;
  // Lines collapsed into this one by cluster_duplicates (itself included).
  std::uint32_t dup_count = 1;
};

// Exact rational comparison of matches/length; no floating point involved.
bool same_norm_score(const RankedLine& a, const RankedLine& b);

// Descending norm_score, then ascending (doc_id, line_no).
bool line_ranks_before(const RankedLine& a, const RankedLine& b);

void sort_lines(std::vector<RankedLine>& lines);

// Scores every line of at least min_line_len scalar values and returns them
// ranked.
std::vector<RankedLine> rank_lines(std::uint64_t doc_id, std::string_view text,
                                   const Lexicon& whitelist,
                                   std::uint32_t min_line_len = kDefaultMinLineLen,
                                   const ScoreConfig& config = {});

std::vector<RankedLine> rank_lines(const ScoredDocument& doc, const Lexicon& whitelist,
                                   std::uint32_t min_line_len = kDefaultMinLineLen,
                                   const ScoreConfig& config = {});

// Collapses, inside each run of equal norm_score, lines whose trimmed and
// folded text is identical. The first line of each group (lowest
// (doc_id, line_no)) survives and carries the summed dup_count.
std::vector<RankedLine> cluster_duplicates(std::vector<RankedLine> lines);

}  // namespace langmine

#endif  // LANGMINE_LINE_RANKER_HPP_
