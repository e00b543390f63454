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

#include "langmine/line_ranker.hpp"

#include <algorithm>
#include <unordered_map>
#include <utility>

#include "langmine/unicode.hpp"

namespace langmine {

bool same_norm_score(const RankedLine& a, const RankedLine& b) {
  return static_cast<std::uint64_t>(a.matches) * b.length ==
         static_cast<std::uint64_t>(b.matches) * a.length;
}

bool line_ranks_before(const RankedLine& a, const RankedLine& b) {
  // a.matches/a.length > b.matches/b.length, cross-multiplied. Zero-length
  // lines carry zero matches so they compare as score 0.
  const std::uint64_t lhs = static_cast<std::uint64_t>(a.matches) * b.length;
  const std::uint64_t rhs = static_cast<std::uint64_t>(b.matches) * a.length;
  if (lhs != rhs) return lhs > rhs;
  if (a.doc_id != b.doc_id) return a.doc_id < b.doc_id;
  return a.line_no < b.line_no;
}

void sort_lines(std::vector<RankedLine>& lines) {
  std::sort(lines.begin(), lines.end(), line_ranks_before);
}

std::vector<RankedLine> rank_lines(std::uint64_t doc_id, std::string_view text,
                                   const Lexicon& whitelist,
                                   std::uint32_t min_line_len,
                                   const ScoreConfig& config) {
  std::vector<RankedLine> out;
  std::uint32_t line_no = 0;
  std::string_view rest = text;
  bool more = !rest.empty();
  while (more) {
    const auto nl = rest.find('\n');
    std::string_view line = rest.substr(0, nl);
    if (nl == std::string_view::npos) {
      more = false;
    } else {
      rest.remove_prefix(nl + 1);
      more = !rest.empty();
    }
    const auto length = static_cast<std::uint32_t>(text::scalar_length(line));
    if (length >= min_line_len) {
      RankedLine ranked;
      ranked.doc_id = doc_id;
      ranked.line_no = line_no;
      ranked.text = std::string(line);
      ranked.length = length;
      ranked.matches = length == 0 ? 0 : score(tokenize(line, config), whitelist);
      ranked.norm_score = length == 0 ? 0.0 : static_cast<double>(ranked.matches) / length;
      out.push_back(std::move(ranked));
    }
    ++line_no;
  }
  sort_lines(out);
  return out;
}

std::vector<RankedLine> rank_lines(const ScoredDocument& doc, const Lexicon& whitelist,
                                   std::uint32_t min_line_len,
                                   const ScoreConfig& config) {
  return rank_lines(doc.id, doc.text, whitelist, min_line_len, config);
}

std::vector<RankedLine> cluster_duplicates(std::vector<RankedLine> lines) {
  std::vector<RankedLine> out;
  out.reserve(lines.size());
  std::size_t run_begin = 0;
  while (run_begin < lines.size()) {
    std::size_t run_end = run_begin + 1;
    while (run_end < lines.size() && same_norm_score(lines[run_begin], lines[run_end])) {
      ++run_end;
    }
    // key -> index into out
    std::unordered_map<std::string, std::size_t> seen;
    for (std::size_t i = run_begin; i < run_end; ++i) {
      std::string key = text::fold_case(text::trim(lines[i].text));
      const auto [it, inserted] = seen.try_emplace(std::move(key), out.size());
      if (inserted) {
        out.push_back(std::move(lines[i]));
      } else {
        RankedLine& rep = out[it->second];
        rep.dup_count += lines[i].dup_count;
        if (std::pair(lines[i].doc_id, lines[i].line_no) < std::pair(rep.doc_id, rep.line_no)) {
          rep.doc_id = lines[i].doc_id;
          rep.line_no = lines[i].line_no;
          rep.text = std::move(lines[i].text);
        }
      }
    }
    run_begin = run_end;
  }
  return out;
}

}  // namespace langmine
