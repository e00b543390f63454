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


#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "langmine/bench.hpp"
#include "langmine/error.hpp"
#include "langmine/unicode.hpp"
#include "test_support.hpp"

using namespace langmine;
using namespace langmine::bench;
using langmine::testing::TempDir;

namespace {

std::vector<warc::Document> docs_with(const std::vector<std::string>& texts) {
  std::vector<warc::Document> out;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    warc::Document d;
    d.id = i;
    d.text = texts[i];
    out.push_back(d);
  }
  return out;
}

std::vector<std::string> numbered(const std::string& stem, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(stem + " " + std::to_string(i));
  return out;
}

}  // namespace

TEST_CASE("zero needles gives an all-hay corpus") {
  const auto hay = docs_with(numbered("lafrans", 50));
  const auto corpus = build_benchmark({}, hay, 0, 50, std::nullopt, 1);
  CHECK(corpus.documents.size() == 50);
  CHECK(std::all_of(corpus.documents.begin(), corpus.documents.end(),
                    [](const LabeledDocument& d) { return d.gold == Gold::kHay; }));
}

TEST_CASE("skip word removes contaminated hay") {
  auto texts = numbered("un article", 200);
  std::size_t contaminated = 0;
  for (std::size_t i = 0; i < texts.size(); i += 10) {
    texts[i] += " sur le Créole guyanais";
    ++contaminated;
  }
  const auto hay = docs_with(texts);
  const auto corpus = build_benchmark({}, hay, 0, 150, std::string("créole"), 9);
  CHECK(corpus.skipped_hay == contaminated);
  for (const auto& d : corpus.documents) {
    CHECK(text::fold_case(d.doc.text).find("créole") == std::string::npos);
  }
}

TEST_CASE("seeded builds are identical; different seeds shuffle differently") {
  const auto needles = docs_with(numbered("kréyòl", 30));
  const auto hay = docs_with(numbered("français", 300));
  auto texts = [](const BenchmarkCorpus& c) {
    std::vector<std::string> out;
    for (const auto& d : c.documents) out.push_back(std::string(gold_name(d.gold)) + d.doc.text);
    return out;
  };
  const auto a = build_benchmark(needles, hay, 20, 200, std::nullopt, 42);
  const auto b = build_benchmark(needles, hay, 20, 200, std::nullopt, 42);
  const auto c = build_benchmark(needles, hay, 20, 200, std::nullopt, 43);
  CHECK(texts(a) == texts(b));
  CHECK(texts(a) != texts(c));
  std::set<std::string> unique_texts;
  for (const auto& d : a.documents) unique_texts.insert(d.doc.text);
  CHECK(unique_texts.size() == 220);  // without replacement
  for (std::size_t i = 0; i < a.documents.size(); ++i) CHECK(a.documents[i].doc.id == i);
}

TEST_CASE("insufficient sources name the deficit") {
  const auto needles = docs_with(numbered("n", 5));
  const auto hay = docs_with(numbered("h", 5));
  try {
    build_benchmark(needles, hay, 8, 5, std::nullopt, 1);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidArgument);
    CHECK(std::string(e.what()).find("short by 3") != std::string::npos);
  }
  CHECK_THROWS_AS(build_benchmark(needles, hay, 5, 6, std::nullopt, 1), Error);
}

TEST_CASE("threshold 1 with a type in every needle gives full recall; huge threshold gives zeros") {
  const std::vector<std::string> white{"lapli", "lakaz", "moun"};
  auto needles = docs_with({"lapli ka tonbé", "an lakaz", "tout moun", "lapli lakaz moun"});
  auto hay = docs_with(numbered("il pleut", 20));
  const auto corpus = build_benchmark(needles, hay, 4, 20, std::nullopt, 5);
  FilterConfig cfg;
  cfg.targets = {std::make_shared<const Lexicon>("gcr", ListKind::kWhitelist, 3, white)};
  const std::vector<std::uint32_t> thresholds{1, 50};
  const auto results = run_benchmark(corpus, cfg, "gcr", thresholds);
  REQUIRE(results.size() == 2);
  CHECK(results[0].recall_pct == 100.0);
  CHECK(results[0].fpr_pct == 0.0);
  CHECK(results[1].recall_pct == 0.0);
  CHECK(results[1].fpr_pct == 0.0);
  CHECK(results[1].true_positives == 0);
}

TEST_CASE("calibrated schedule shape") {
  const auto s = calibrated_schedule();
  CHECK(s.needle_count() == 200);
  CHECK(s.hay_count() == 9800);
  double needle_sum = 0, hay_sum = 0;
  for (const auto& [k, n] : s.needle_histogram) needle_sum += static_cast<double>(k * n);
  for (const auto& [k, n] : s.hay_histogram) hay_sum += static_cast<double>(k * n);
  CHECK(std::abs(needle_sum / 200.0 - 8.0) < 0.25);  // "about 8"
  CHECK(hay_sum / 9800.0 < 1.0);
  CHECK(s.hay_histogram.rbegin()->first < 10);
}

TEST_CASE("synthetic documents carry exactly the planted number of whitelist types") {
  PlantingSchedule small;
  small.needle_histogram = {{0, 3}, {4, 5}, {12, 4}};
  small.hay_histogram = {{0, 30}, {1, 10}, {3, 5}};
  small.tokens_per_doc = 60;
  const auto sb = make_synthetic_benchmark(small, 77);
  REQUIRE(sb.corpus.documents.size() == 57);
  CHECK(sb.corpus.needle_count == 12);
  CHECK(sb.corpus.hay_count == 45);
  for (std::size_t i = 0; i < sb.corpus.documents.size(); ++i) {
    CHECK(score(tokenize(sb.corpus.documents[i].doc.text), *sb.whitelist) == sb.planted[i]);
  }
  const auto again = make_synthetic_benchmark(small, 77);
  for (std::size_t i = 0; i < again.corpus.documents.size(); ++i) {
    CHECK(again.corpus.documents[i].doc.text == sb.corpus.documents[i].doc.text);
  }
}

TEST_CASE("recall and FPR follow the planted counts exactly") {
  PlantingSchedule small;
  small.needle_histogram = {{0, 1}, {2, 3}, {6, 4}, {11, 2}};
  small.hay_histogram = {{0, 40}, {1, 6}, {2, 3}, {4, 1}};
  small.tokens_per_doc = 40;
  const auto sb = make_synthetic_benchmark(small, 3);
  FilterConfig cfg;
  cfg.targets = {sb.whitelist};
  const std::vector<std::uint32_t> thresholds{1, 2, 3, 5, 7, 12};
  const auto results = run_benchmark(sb.corpus, cfg, "gcr", thresholds);
  for (const auto& r : results) {
    std::uint64_t tp = 0, fp = 0;
    for (const auto& [k, n] : small.needle_histogram) tp += k >= r.threshold ? n : 0;
    for (const auto& [k, n] : small.hay_histogram) fp += k >= r.threshold ? n : 0;
    CHECK(r.true_positives == tp);
    CHECK(r.false_positives == fp);
    CHECK(r.recall_pct == doctest::Approx(100.0 * static_cast<double>(tp) / 10.0));
    CHECK(r.fpr_pct == doctest::Approx(100.0 * static_cast<double>(fp) / 50.0));
    CHECK(r.true_positives <= 10);
    CHECK(r.false_positives <= 50);
  }
  for (std::size_t i = 1; i < results.size(); ++i) {
    CHECK(results[i].recall_pct <= results[i - 1].recall_pct);
    CHECK(results[i].fpr_pct <= results[i - 1].fpr_pct);
  }
  const auto threaded = run_benchmark(sb.corpus, cfg, "gcr", thresholds, 2, 3);
  for (std::size_t i = 0; i < results.size(); ++i) {
    CHECK(threaded[i].true_positives == results[i].true_positives);
    CHECK(threaded[i].false_positives == results[i].false_positives);
  }
}

TEST_CASE("vocabulary is unique, disjoint from exclusions and in the length range") {
  std::mt19937_64 rng(1);
  const auto a = make_vocabulary(300, rng);
  const auto b = make_vocabulary(600, rng, a);
  std::set<std::string> all(a.begin(), a.end());
  for (const auto& w : b) CHECK(all.insert(w).second);
  for (const auto& w : all) {
    CHECK(text::scalar_length(w) >= 3);
    CHECK(text::scalar_length(w) <= 9);
  }
}

TEST_CASE("planting more types than the list holds is an error") {
  std::mt19937_64 rng(1);
  const std::vector<std::string> filler{"aaa"}, types{"bbb"};
  CHECK_THROWS_AS(make_document_text(10, filler, types, 2, rng), Error);
}

TEST_CASE("synthetic WET reaches the byte target and parses back") {
  std::mt19937_64 rng(2);
  const auto types = make_vocabulary(100, rng);
  const auto filler = make_vocabulary(500, rng, types);
  std::ostringstream out;
  const auto records = write_synthetic_wet(out, 200000, 80, filler, types, 5);
  std::istringstream in(out.str());
  warc::IngestStats stats;
  const auto docs = warc::read_wet_stream(in, &stats);
  CHECK(docs.size() == records);
  CHECK(stats.records_skipped == 1);  // warcinfo
  std::uint64_t bytes = 0;
  for (const auto& d : docs) bytes += d.byte_len;
  CHECK(bytes >= 200000);
}

TEST_CASE("corpus and results serialization") {
  TempDir dir;
  langmine::testing::write_lines(
      dir / "needles.jsonl",
      {R"({"text":"lapli ka tonbé","uri":"https://n/1","lang":"gcr"})",
       R"({"text":"an lakaz","lang":["gcr","fra"]})"});
  const auto docs = read_documents(dir / "needles.jsonl");
  REQUIRE(docs.size() == 2);
  CHECK(docs[0].uri == "https://n/1");
  CHECK(docs[1].crawler_lang == std::vector<std::string>{"gcr", "fra"});

  langmine::testing::write_lines(dir / "bad.jsonl", {R"({"uri":"x"})"});
  CHECK_THROWS_AS(read_documents(dir / "bad.jsonl"), Error);

  const auto corpus = build_benchmark(docs, docs, 1, 1, std::nullopt, 1);
  write_corpus_jsonl(corpus, dir / "corpus.jsonl");
  const auto lines = langmine::testing::read_lines(dir / "corpus.jsonl");
  REQUIRE(lines.size() == 2);
  CHECK(lines[0].find("\"gold\"") != std::string::npos);

  const std::vector<BenchResult> results{{1, 198, 1300, 99.0, 13.2653, 0.5}};
  write_results_csv(results, dir / "r.csv");
  const auto csv = langmine::testing::read_lines(dir / "r.csv");
  REQUIRE(csv.size() == 2);
  CHECK(csv[0] == "threshold,true_positives,false_positives,recall_pct,fpr_pct,wall_time");
  CHECK(csv[1] == "1,198,1300,99.0000,13.2653,0.500000");
}
