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

#include "langmine/warc.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <ostream>

#include "langmine/unicode.hpp"

namespace langmine::warc {
namespace {

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

std::string_view trim_ascii(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

bool is_version_line(std::string_view line) { return line.starts_with("WARC/"); }

}  // namespace

std::vector<std::string_view> Document::lines() const {
  std::vector<std::string_view> out;
  std::string_view rest = text;
  while (!rest.empty()) {
    const auto nl = rest.find('\n');
    if (nl == std::string_view::npos) {
      out.push_back(rest);
      break;
    }
    out.push_back(rest.substr(0, nl));
    rest.remove_prefix(nl + 1);
  }
  return out;
}

IngestStats& IngestStats::operator+=(const IngestStats& other) {
  records_read += other.records_read;
  records_skipped += other.records_skipped;
  malformed_records += other.malformed_records;
  truncated_records += other.truncated_records;
  decode_replacements += other.decode_replacements;
  bytes_read += other.bytes_read;
  return *this;
}

WetReader::WetReader(std::istream& in, std::uint64_t first_id)
    : in_(in), next_id_(first_id) {}

bool WetReader::read_line(std::string& line) {
  if (pending_line_) {
    line = std::move(*pending_line_);
    pending_line_.reset();
    return true;
  }
  if (!std::getline(in_, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

bool WetReader::resync() {
  std::string line;
  while (read_line(line)) {
    if (is_version_line(line)) {
      pending_line_ = std::move(line);
      return true;
    }
  }
  return false;
}

void WetReader::mark_malformed() {
  ++stats_.records_read;
  ++stats_.records_skipped;
  ++stats_.malformed_records;
}

std::optional<Document> WetReader::next() {
  std::string line;
  for (;;) {
    // Version line, skipping the blank separators between records.
    bool found = false;
    while (read_line(line)) {
      if (!line.empty()) {
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
    if (!is_version_line(line)) {
      mark_malformed();
      if (!resync()) return std::nullopt;
      continue;
    }

    Header header;
    bool malformed = false;
    bool eof = true;
    while (read_line(line)) {
      if (line.empty()) {
        eof = false;
        break;
      }
      if (is_version_line(line)) {
        // A new record began before this header block ended.
        pending_line_ = std::move(line);
        malformed = true;
        eof = false;
        break;
      }
      const auto colon = line.find(':');
      if (colon == std::string::npos || colon == 0) {
        malformed = true;
        eof = false;
        break;
      }
      const std::string_view name = trim_ascii(std::string_view(line).substr(0, colon));
      const std::string_view value = trim_ascii(std::string_view(line).substr(colon + 1));
      if (iequals(name, "WARC-Type")) {
        header.type = value;
      } else if (iequals(name, "WARC-Target-URI")) {
        header.uri = value;
      } else if (iequals(name, "WARC-Identified-Content-Language")) {
        header.languages = value;
      } else if (iequals(name, "Content-Length")) {
        std::uint64_t n = 0;
        const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
        if (ec != std::errc() || ptr != value.data() + value.size()) {
          malformed = true;
          eof = false;
          break;
        }
        header.content_length = n;
      }
    }
    if (eof) {
      // Header block cut off by end of stream.
      ++stats_.records_read;
      ++stats_.records_skipped;
      ++stats_.truncated_records;
      return std::nullopt;
    }
    if (malformed || !header.content_length) {
      mark_malformed();
      if (!pending_line_ && !resync()) return std::nullopt;
      continue;
    }

    const std::uint64_t length = *header.content_length;
    std::string body(length, '\0');
    if (length > 0) {
      in_.read(body.data(), static_cast<std::streamsize>(length));
      if (static_cast<std::uint64_t>(in_.gcount()) < length) {
        ++stats_.records_read;
        ++stats_.records_skipped;
        ++stats_.truncated_records;
        stats_.bytes_read += static_cast<std::uint64_t>(in_.gcount());
        return std::nullopt;
      }
    }
    ++stats_.records_read;
    stats_.bytes_read += length;
    if (!iequals(header.type, "conversion")) {
      ++stats_.records_skipped;
      continue;
    }

    Document doc;
    doc.id = next_id_++;
    doc.uri = std::move(header.uri);
    doc.crawler_lang = parse_language_tags(header.languages);
    doc.byte_len = length;
    doc.text = std::move(body);
    doc.decode_replacements = text::sanitize_utf8(doc.text);
    stats_.decode_replacements += doc.decode_replacements;
    return doc;
  }
}

std::vector<Document> read_wet_stream(std::istream& in, IngestStats* stats,
                                      std::uint64_t first_id) {
  WetReader reader(in, first_id);
  std::vector<Document> docs;
  while (auto doc = reader.next()) docs.push_back(std::move(*doc));
  if (stats) *stats = reader.stats();
  return docs;
}

std::vector<std::string> parse_language_tags(std::string_view value) {
  std::vector<std::string> tags;
  while (!value.empty()) {
    const auto comma = value.find(',');
    const std::string_view tag = trim_ascii(value.substr(0, comma));
    if (!tag.empty()) tags.emplace_back(tag);
    if (comma == std::string_view::npos) break;
    value.remove_prefix(comma + 1);
  }
  return tags;
}

void write_conversion_record(std::ostream& out, std::string_view uri,
                             std::string_view languages, std::string_view body) {
  out << "WARC/1.0\r\n"
      << "WARC-Type: conversion\r\n"
      << "WARC-Target-URI: " << uri << "\r\n";
  if (!languages.empty()) {
    out << "WARC-Identified-Content-Language: " << languages << "\r\n";
  }
  out << "Content-Type: text/plain\r\n"
      << "Content-Length: " << body.size() << "\r\n"
      << "\r\n"
      << body << "\r\n\r\n";
}

}  // namespace langmine::warc
