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

#ifndef LANGMINE_WARC_HPP_
#define LANGMINE_WARC_HPP_

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace langmine::warc {

// One WET `conversion` record.
struct Document {
  // Ordinal in stream order, offset by the reader's first id.
  std::uint64_t id = 0;
  std::string uri;
  // WARC-Identified-Content-Language, split on commas. Empty when absent.
  std::vector<std::string> crawler_lang;
  // Body decoded as UTF-8; invalid sequences are replaced by U+FFFD.
  std::string text;
  // Declared Content-Length of the record.
  std::uint64_t byte_len = 0;
  std::size_t decode_replacements = 0;

  // Newline-separated lines of text, without the terminators.
  std::vector<std::string_view> lines() const;
};

struct IngestStats {
  std::uint64_t records_read = 0;
  // Every record that did not become a Document: non-conversion types,
  // malformed headers and a truncated tail.
  std::uint64_t records_skipped = 0;
  std::uint64_t malformed_records = 0;
  std::uint64_t truncated_records = 0;
  std::uint64_t decode_replacements = 0;
  std::uint64_t bytes_read = 0;

  IngestStats& operator+=(const IngestStats& other);
};

// Streaming reader over a decompressed WARC/WET byte stream. Never throws on
// malformed input: bad records are skipped and counted.
class WetReader {
 public:
  explicit WetReader(std::istream& in, std::uint64_t first_id = 0);

  WetReader(const WetReader&) = delete;
  WetReader& operator=(const WetReader&) = delete;

  // Next conversion record, or nullopt at end of stream.
  std::optional<Document> next();

  const IngestStats& stats() const { return stats_; }

 private:
  struct Header {
    std::string type;
    std::string uri;
    std::string languages;
    std::optional<std::uint64_t> content_length;
  };

  bool read_line(std::string& line);
  // Skips to the next line starting with "WARC/". Returns false at EOF.
  bool resync();
  void mark_malformed();

  std::istream& in_;
  std::uint64_t next_id_;
  std::optional<std::string> pending_line_;
  IngestStats stats_;
};

std::vector<Document> read_wet_stream(std::istream& in,
                                      IngestStats* stats = nullptr,
                                      std::uint64_t first_id = 0);

// Splits a comma-separated language header, trimming blanks.
std::vector<std::string> parse_language_tags(std::string_view value);

// Serializes one conversion record in WET layout. Used for fixtures and the
// synthetic corpus generators.
void write_conversion_record(std::ostream& out, std::string_view uri,
                             std::string_view languages, std::string_view body);

}  // namespace langmine::warc

#endif  // LANGMINE_WARC_HPP_
