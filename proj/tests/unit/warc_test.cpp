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


#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "langmine/warc.hpp"
#include "test_support.hpp"

using namespace langmine;
using langmine::testing::wet_record;

namespace {

std::vector<warc::Document> parse(const std::string& raw, warc::IngestStats* stats = nullptr) {
  std::istringstream in(raw);
  return warc::read_wet_stream(in, stats);
}

}  // namespace

TEST_CASE("warcinfo plus conversion yields one document") {
  const std::string raw = wet_record("warcinfo", "", "", "software: x\r\n") +
                          wet_record("conversion", "https://a.example/", "gcr", "Bonjou");
  warc::IngestStats stats;
  const auto docs = parse(raw, &stats);
  REQUIRE(docs.size() == 1);
  CHECK(docs[0].text == "Bonjou");
  CHECK(docs[0].uri == "https://a.example/");
  CHECK(docs[0].crawler_lang == std::vector<std::string>{"gcr"});
  CHECK(stats.records_read == 2);
  CHECK(stats.records_skipped == 1);
  CHECK(stats.records_read == docs.size() + stats.records_skipped);
}

TEST_CASE("zero-length body yields an empty document") {
  const auto docs = parse(wet_record("conversion", "https://e.example/", "", ""));
  REQUIRE(docs.size() == 1);
  CHECK(docs[0].text.empty());
  CHECK(docs[0].byte_len == 0);
  CHECK(docs[0].crawler_lang.empty());
}

TEST_CASE("golden file bodies byte-match the independent splitter") {
  std::ifstream in(langmine::testing::data_dir() / "golden3.wet", std::ios::binary);
  REQUIRE(in);
  warc::IngestStats stats;
  const auto docs = warc::read_wet_stream(in, &stats);
  std::ifstream expected_in(langmine::testing::data_dir() / "golden3.expected.json");
  const auto expected = nlohmann::json::parse(expected_in);
  REQUIRE(docs.size() == expected.size());
  REQUIRE(docs.size() == 3);
  for (std::size_t i = 0; i < docs.size(); ++i) {
    CHECK(docs[i].id == i);
    CHECK(docs[i].text == expected[i]["text"].get<std::string>());
    CHECK(docs[i].byte_len == expected[i]["byte_len"].get<std::uint64_t>());
    CHECK(docs[i].text.size() == docs[i].byte_len);
    CHECK(docs[i].uri == expected[i]["uri"].get<std::string>());
    CHECK(docs[i].crawler_lang ==
          warc::parse_language_tags(expected[i]["lang"].get<std::string>()));
    CHECK(docs[i].decode_replacements == 0);
  }
  CHECK(stats.records_read == 3);
  CHECK(stats.records_skipped == 0);
}

TEST_CASE("round trip: rewriting the documents reproduces the golden file bodies") {
  std::ifstream in(langmine::testing::data_dir() / "golden3.wet", std::ios::binary);
  const auto docs = warc::read_wet_stream(in);
  std::ostringstream out;
  for (const auto& d : docs) {
    std::string langs;
    for (const auto& l : d.crawler_lang) langs += (langs.empty() ? "" : ",") + l;
    warc::write_conversion_record(out, d.uri, langs, d.text);
  }
  const auto again = parse(out.str());
  REQUIRE(again.size() == docs.size());
  for (std::size_t i = 0; i < docs.size(); ++i) {
    CHECK(again[i].text == docs[i].text);
    CHECK(again[i].byte_len == docs[i].byte_len);
    CHECK(again[i].uri == docs[i].uri);
    CHECK(again[i].crawler_lang == docs[i].crawler_lang);
  }
}

TEST_CASE("header names are case-insensitive and values are trimmed") {
  const std::string raw =
      "WARC/1.0\r\nwarc-type: Conversion\r\nWARC-TARGET-URI:   https://x.example/p  \r\n"
      "warc-identified-content-language: fra, gcr\r\ncontent-length: 3\r\n\r\nabc\r\n\r\n";
  const auto docs = parse(raw);
  REQUIRE(docs.size() == 1);
  CHECK(docs[0].uri == "https://x.example/p");
  CHECK(docs[0].crawler_lang == std::vector<std::string>{"fra", "gcr"});
  CHECK(docs[0].text == "abc");
}

TEST_CASE("LF-only framing is accepted") {
  const std::string raw =
      "WARC/1.0\nWARC-Type: conversion\nWARC-Target-URI: u\nContent-Length: 2\n\nhi\n\n"
      "WARC/1.0\nWARC-Type: conversion\nWARC-Target-URI: v\nContent-Length: 2\n\nyo\n\n";
  const auto docs = parse(raw);
  REQUIRE(docs.size() == 2);
  CHECK(docs[0].text == "hi");
  CHECK(docs[1].text == "yo");
}

TEST_CASE("body bytes are taken by Content-Length, even if they look like headers") {
  const std::string body = "line one\r\nWARC/1.0\r\n\r\nstill body";
  const auto docs = parse(wet_record("conversion", "u", "", body));
  REQUIRE(docs.size() == 1);
  CHECK(docs[0].text == body);
}

TEST_CASE("ids increase in stream order starting at first_id") {
  std::string raw;
  for (int i = 0; i < 5; ++i) raw += wet_record("conversion", "u" + std::to_string(i), "", "b");
  std::istringstream in(raw);
  warc::WetReader reader(in, 100);
  std::uint64_t expected = 100;
  int n = 0;
  while (auto d = reader.next()) {
    CHECK(d->id == expected++);
    CHECK(d->uri == "u" + std::to_string(n++));
  }
  CHECK(n == 5);
}

TEST_CASE("one corrupted record between two valid ones yields exactly the two") {
  const std::vector<std::string> corruptions = {
      "WARC/1.0\r\nWARC-Type: conversion\r\nthis line has no colon\r\nContent-Length: 3\r\n\r\nabc\r\n\r\n",
      "WARC/1.0\r\nWARC-Type: conversion\r\nContent-Length: twelve\r\n\r\nabc\r\n\r\n",
      "WARC/1.0\r\nWARC-Type: conversion\r\nWARC-Target-URI: nolen\r\n\r\nabc\r\n\r\n",
      "garbage that is not a record\r\nmore garbage\r\n\r\n",
      "WARC/1.0\r\nWARC-Type: conversion\r\n",  // header cut off by the next record
  };
  for (const auto& bad : corruptions) {
    const std::string raw = wet_record("conversion", "first", "", "one") + bad +
                            wet_record("conversion", "second", "", "two");
    warc::IngestStats stats;
    const auto docs = parse(raw, &stats);
    REQUIRE_MESSAGE(docs.size() == 2, bad);
    CHECK(docs[0].text == "one");
    CHECK(docs[1].text == "two");
    CHECK(docs[0].id + 1 == docs[1].id);
    CHECK(stats.malformed_records == 1);
    CHECK(stats.records_read == docs.size() + stats.records_skipped);
  }
}

TEST_CASE("truncated final record yields nothing and is reported") {
  const std::string good = wet_record("conversion", "ok", "", "complete");
  const std::string cut = "WARC/1.0\r\nWARC-Type: conversion\r\nContent-Length: 100\r\n\r\nonly part";
  warc::IngestStats stats;
  const auto docs = parse(good + cut, &stats);
  REQUIRE(docs.size() == 1);
  CHECK(stats.truncated_records == 1);
  CHECK(stats.records_read == 2);
  CHECK(stats.records_read == docs.size() + stats.records_skipped);

  warc::IngestStats header_stats;
  const auto docs2 = parse(good + "WARC/1.0\r\nWARC-Type: conversion\r\n", &header_stats);
  CHECK(docs2.size() == 1);
  CHECK(header_stats.truncated_records == 1);
}

TEST_CASE("invalid UTF-8 in a body is replaced and counted, byte_len keeps the raw size") {
  const std::string body = "ab\xFF\xFE" "cd";
  warc::IngestStats stats;
  const auto docs = parse(wet_record("conversion", "u", "", body), &stats);
  REQUIRE(docs.size() == 1);
  CHECK(docs[0].byte_len == body.size());
  CHECK(docs[0].decode_replacements == 2);
  CHECK(docs[0].text == "ab\xEF\xBF\xBD\xEF\xBF\xBD" "cd");
  CHECK(stats.decode_replacements == 2);
}

TEST_CASE("lines split on newline only") {
  warc::Document d;
  d.text = "a\r\nb\n\nc";
  const auto lines = d.lines();
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "a\r");
  CHECK(lines[2].empty());
  CHECK(lines[3] == "c");
}

TEST_CASE("language tags split on commas and drop empties") {
  CHECK(warc::parse_language_tags("") .empty());
  CHECK(warc::parse_language_tags("fra") == std::vector<std::string>{"fra"});
  CHECK(warc::parse_language_tags(" fra , eng,,") == std::vector<std::string>{"fra", "eng"});
}
