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

#include "langmine/vocab_index.hpp"

#include <charconv>
#include <string_view>

#include "langmine/error.hpp"

namespace langmine::index {
namespace {

constexpr std::string_view kMagic = "#langmine-vocab-index";

std::string escape_field(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\\': out += "\\\\"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string unescape_field(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '\\' || i + 1 == s.size()) {
      out.push_back(s[i]);
      continue;
    }
    switch (s[++i]) {
      case 't': out.push_back('\t'); break;
      case 'n': out.push_back('\n'); break;
      case 'r': out.push_back('\r'); break;
      default: out.push_back(s[i]);
    }
  }
  return out;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  for (;;) {
    const auto tab = line.find('\t');
    fields.push_back(line.substr(0, tab));
    if (tab == std::string_view::npos) break;
    line.remove_prefix(tab + 1);
  }
  return fields;
}

std::uint64_t parse_u64(std::string_view s, const std::filesystem::path& path) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::kFormat, "bad number '" + std::string(s) + "' in " + path.string());
  }
  return v;
}

}  // namespace

std::filesystem::path partial_path(const std::filesystem::path& path) {
  std::filesystem::path p = path;
  p += ".partial";
  return p;
}

IndexWriter::IndexWriter(std::filesystem::path path, std::string provenance,
                         const ScoreConfig& score)
    : path_(std::move(path)) {
  out_.open(partial_path(path_), std::ios::binary | std::ios::trunc);
  if (!out_) throw Error(ErrorCode::kIo, "cannot create index " + partial_path(path_).string());
  std::error_code ignored;
  std::filesystem::remove(path_, ignored);
  out_ << kMagic << '\t' << kFormatVersion << '\n'
       << "#provenance\t" << escape_field(provenance) << '\n'
       << "#score\tpunct_normalize=" << (score.punct_normalize ? 1 : 0)
       << "\tmin_token_len=" << score.min_token_len << '\n';
  check_stream();
}

IndexWriter::~IndexWriter() {
  if (!finished_ && out_.is_open()) out_.close();
}

void IndexWriter::check_stream() {
  if (!out_) {
    throw Error(ErrorCode::kIo, "write failed on " + partial_path(path_).string() +
                                    "; index left marked partial");
  }
}

void IndexWriter::add(const DocumentMeta& meta, const TypeSet& types) {
  std::string tags;
  for (std::size_t i = 0; i < meta.crawler_lang.size(); ++i) {
    if (i) tags.push_back(',');
    tags += meta.crawler_lang[i];
  }
  out_ << meta.id << '\t' << escape_field(meta.uri) << '\t' << escape_field(tags);
  for (const std::string& type : types) out_ << '\t' << type;
  out_ << '\n';
  check_stream();
  ++records_;
}

void IndexWriter::add(const warc::Document& doc, const TypeSet& types) {
  add(DocumentMeta{doc.id, doc.uri, doc.crawler_lang}, types);
}

void IndexWriter::finish() {
  if (finished_) return;
  out_ << "#end\t" << records_ << '\n';
  out_.flush();
  check_stream();
  out_.close();
  std::error_code ec;
  std::filesystem::rename(partial_path(path_), path_, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot finalize index " + path_.string() + ": " + ec.message());
  finished_ = true;
}

IndexReader::IndexReader(const std::filesystem::path& path) : path_(path) {
  if (!std::filesystem::exists(path) && std::filesystem::exists(partial_path(path))) {
    throw Error(ErrorCode::kFormat, "index " + path.string() + " is marked partial");
  }
  if (path.extension() == ".partial") {
    throw Error(ErrorCode::kFormat, "refusing to read partial index " + path.string());
  }
  in_.open(path, std::ios::binary);
  if (!in_) throw Error(ErrorCode::kIo, "cannot read index " + path.string());

  std::string line;
  if (!std::getline(in_, line)) throw Error(ErrorCode::kFormat, "empty index " + path.string());
  auto fields = split_tabs(line);
  if (fields.size() != 2 || fields[0] != kMagic) {
    throw Error(ErrorCode::kFormat, path.string() + " is not a vocabulary index");
  }
  if (parse_u64(fields[1], path) != kFormatVersion) {
    throw Error(ErrorCode::kFormat, "unsupported index version " + std::string(fields[1]) +
                                        " in " + path.string());
  }
  if (!std::getline(in_, line) || !line.starts_with("#provenance\t")) {
    throw Error(ErrorCode::kFormat, "missing provenance in " + path.string());
  }
  provenance_ = unescape_field(std::string_view(line).substr(12));
  if (!std::getline(in_, line) || !line.starts_with("#score\t")) {
    throw Error(ErrorCode::kFormat, "missing score settings in " + path.string());
  }
  for (std::string_view field : split_tabs(std::string_view(line).substr(7))) {
    if (field.starts_with("punct_normalize=")) {
      score_.punct_normalize = parse_u64(field.substr(16), path) != 0;
    } else if (field.starts_with("min_token_len=")) {
      score_.min_token_len = static_cast<std::uint32_t>(parse_u64(field.substr(14), path));
    }
  }
}

std::optional<IndexEntry> IndexReader::next() {
  if (done_) return std::nullopt;
  std::string line;
  if (!std::getline(in_, line)) {
    throw Error(ErrorCode::kFormat, "index " + path_.string() + " is truncated (no #end trailer)");
  }
  if (line.starts_with("#end\t")) {
    if (parse_u64(std::string_view(line).substr(5), path_) != records_) {
      throw Error(ErrorCode::kFormat, "record count mismatch in " + path_.string());
    }
    done_ = true;
    return std::nullopt;
  }
  const auto fields = split_tabs(line);
  if (fields.size() < 3) {
    throw Error(ErrorCode::kFormat, "malformed index record in " + path_.string());
  }
  IndexEntry entry;
  entry.meta.id = parse_u64(fields[0], path_);
  entry.meta.uri = unescape_field(fields[1]);
  entry.meta.crawler_lang = warc::parse_language_tags(unescape_field(fields[2]));
  std::vector<std::string> types;
  types.reserve(fields.size() - 3);
  for (std::size_t i = 3; i < fields.size(); ++i) types.emplace_back(fields[i]);
  entry.types = TypeSet::from_sorted_unique(std::move(types));
  ++records_;
  return entry;
}

bool looks_like_index(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::string line;
  return in && std::getline(in, line) && line.starts_with(kMagic);
}

void write_index(const std::filesystem::path& path, const VocabularyIndex& index) {
  IndexWriter writer(path, index.provenance, index.score);
  for (const IndexEntry& entry : index.entries) writer.add(entry.meta, entry.types);
  writer.finish();
}

VocabularyIndex read_index(const std::filesystem::path& path) {
  IndexReader reader(path);
  VocabularyIndex index;
  index.provenance = reader.provenance();
  index.score = reader.score();
  while (auto entry = reader.next()) index.entries.push_back(std::move(*entry));
  return index;
}

std::vector<ScoredDocument> replay_index(const std::filesystem::path& path,
                                         const FilterConfig& config,
                                         FilterCounters* counters) {
  config.validate();
  IndexReader reader(path);
  if (!(reader.score() == config.score)) {
    throw Error(ErrorCode::kConfig,
                "index " + path.string() + " was built with different tokenization settings");
  }
  std::vector<ScoredDocument> kept;
  while (auto entry = reader.next()) {
    if (auto scored = filter_types(entry->meta, entry->types, config, counters)) {
      kept.push_back(std::move(*scored));
    }
  }
  return kept;
}

}  // namespace langmine::index
