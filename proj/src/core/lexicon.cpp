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

#include "langmine/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_set>

#include "langmine/error.hpp"
#include "langmine/unicode.hpp"

namespace langmine {

Lexicon::Lexicon(std::string language_code, ListKind kind,
                 std::uint32_t min_type_len, std::span<const std::string> entries,
                 LexiconLoadStats* stats)
    : language_code_(std::move(language_code)),
      kind_(kind),
      min_type_len_(min_type_len) {
  LexiconLoadStats local;
  std::unordered_set<std::string> unique;
  unique.reserve(entries.size());
  for (const std::string& entry : entries) {
    std::string raw = entry;
    text::sanitize_utf8(raw);
    const std::string_view trimmed = text::trim(raw);
    if (trimmed.empty()) continue;
    if (text::contains_whitespace(trimmed)) {
      ++local.rejected_whitespace;
      continue;
    }
    std::string folded = text::fold_case(trimmed);
    if (text::scalar_length(folded) < min_type_len_) {
      ++local.rejected_short;
      continue;
    }
    if (unique.insert(std::move(folded)).second) {
      ++local.accepted;
    } else {
      ++local.duplicates;
    }
  }
  if (stats) *stats = local;
  if (unique.empty()) {
    throw Error(ErrorCode::kEmptyLexicon,
                "lexicon '" + language_code_ + "' has no types of length >= " +
                    std::to_string(min_type_len_));
  }

  types_.assign(unique.begin(), unique.end());
  std::sort(types_.begin(), types_.end());
  std::size_t slot_count = 16;
  while (slot_count < types_.size() * 2) slot_count <<= 1;
  slots_.assign(slot_count, 0);
  mask_ = slot_count - 1;
  hashes_.reserve(types_.size());
  min_bytes_ = types_.front().size();
  for (std::size_t t = 0; t < types_.size(); ++t) {
    const std::size_t hash = hash_type(types_[t]);
    hashes_.push_back(hash);
    std::size_t i = hash & mask_;
    while (slots_[i] != 0) i = (i + 1) & mask_;
    slots_[i] = static_cast<std::uint32_t>(t + 1);
    min_bytes_ = std::min(min_bytes_, types_[t].size());
    max_bytes_ = std::max(max_bytes_, types_[t].size());
  }
}

Lexicon load_lexicon(const std::filesystem::path& path, ListKind kind,
                     std::uint32_t min_type_len, std::string language_code,
                     LexiconLoadStats* stats) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIo, "cannot read wordlist " + path.string());
  }
  std::vector<std::string> entries;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.starts_with('#')) continue;
    entries.push_back(std::move(line));
  }
  if (in.bad()) {
    throw Error(ErrorCode::kIo, "read error on wordlist " + path.string());
  }
  if (language_code.empty()) language_code = path.stem().string();
  return Lexicon(std::move(language_code), kind, min_type_len, entries, stats);
}

void save_lexicon(const Lexicon& lexicon, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  for (const std::string& type : lexicon.sorted_types()) out << type << '\n';
  out.flush();
  if (!out) throw Error(ErrorCode::kIo, "cannot write wordlist " + path.string());
}

OverlapReport overlap_report(const Lexicon& a, const Lexicon& b,
                             std::size_t max_sample) {
  const Lexicon& small = a.size() <= b.size() ? a : b;
  const Lexicon& large = a.size() <= b.size() ? b : a;
  OverlapReport report;
  for (const std::string& type : small.sorted_types()) {
    if (!large.contains(type)) continue;
    ++report.count;
    if (report.sample.size() < max_sample) report.sample.push_back(type);
  }
  return report;
}

}  // namespace langmine
