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


// Exercises the shared library through its C header only.

#include <cstring>
#include <string>

#include "doctest.h"
#include "langmine/langmine.h"
#include "test_support.hpp"

using langmine::testing::TempDir;

namespace {

std::string data(const char* name) { return (langmine::testing::data_dir() / name).string(); }

lm_lexicon* load_gcr() {
  lm_lexicon* lex = nullptr;
  REQUIRE(lm_lexicon_load(data("gcr.txt").c_str(), nullptr, LM_WHITELIST, 3, &lex, nullptr) ==
          LM_OK);
  return lex;
}

}  // namespace

TEST_CASE("status strings and version") {
  CHECK(std::strlen(lm_version()) > 0);
  for (int s = LM_OK; s <= LM_ERR_INTERNAL; ++s) {
    CHECK(std::strlen(lm_status_string(static_cast<lm_status>(s))) > 0);
  }
  CHECK(std::string(lm_status_string(LM_OK)) != lm_status_string(LM_ERR_IO));
}

TEST_CASE("null arguments are rejected") {
  lm_lexicon* lex = nullptr;
  CHECK(lm_lexicon_load(nullptr, nullptr, LM_WHITELIST, 3, &lex, nullptr) ==
        LM_ERR_INVALID_ARGUMENT);
  CHECK(lm_lexicon_load(data("gcr.txt").c_str(), nullptr, LM_WHITELIST, 3, nullptr, nullptr) ==
        LM_ERR_INVALID_ARGUMENT);
  uint32_t out = 0;
  CHECK(lm_score_text(nullptr, "x", 1, nullptr, &out) == LM_ERR_INVALID_ARGUMENT);
  CHECK(lm_job_run(nullptr, nullptr) == LM_ERR_INVALID_ARGUMENT);
  CHECK(lm_job_create(nullptr) == LM_ERR_INVALID_ARGUMENT);
  lm_lexicon_free(nullptr);
  lm_job_free(nullptr);
  lm_bench_free(nullptr);
}

TEST_CASE("missing file reports IO with a message") {
  lm_lexicon* lex = nullptr;
  CHECK(lm_lexicon_load("/nonexistent/words.txt", "gcr", LM_WHITELIST, 3, &lex, nullptr) ==
        LM_ERR_IO);
  CHECK(lex == nullptr);
  CHECK(std::string(lm_last_error()).find("/nonexistent/words.txt") != std::string::npos);
}

TEST_CASE("empty wordlist reports EMPTY_LEXICON") {
  TempDir dir;
  langmine::testing::write_file(dir / "empty.txt", "# nothing\nab\n");
  lm_lexicon* lex = nullptr;
  CHECK(lm_lexicon_load((dir / "empty.txt").c_str(), "x", LM_WHITELIST, 3, &lex, nullptr) ==
        LM_ERR_EMPTY_LEXICON);
}

TEST_CASE("lexicon load, size, language and overlap") {
  lm_lexicon_stats stats{};
  lm_lexicon* gcr = nullptr;
  REQUIRE(lm_lexicon_load(data("gcr.txt").c_str(), nullptr, LM_WHITELIST, 3, &gcr, &stats) ==
          LM_OK);
  CHECK(lm_lexicon_size(gcr) == 10);
  CHECK(stats.accepted == 10);
  CHECK(stats.rejected_short == 1);
  CHECK(std::string(lm_lexicon_language(gcr)) == "gcr");

  size_t count = 0;
  char sample[256];
  REQUIRE(lm_lexicon_overlap(gcr, gcr, &count, sample, sizeof sample) == LM_OK);
  CHECK(count == 10);
  CHECK(std::string(sample).find("lapli") != std::string::npos);

  lm_lexicon* fra = nullptr;
  REQUIRE(lm_lexicon_load(data("fra_blacklist.txt").c_str(), "fra", LM_BLACKLIST, 3, &fra,
                          nullptr) == LM_OK);
  REQUIRE(lm_lexicon_overlap(gcr, fra, &count, nullptr, 0) == LM_OK);
  CHECK(count == 0);
  char tiny[4];
  REQUIRE(lm_lexicon_overlap(gcr, gcr, &count, tiny, sizeof tiny) == LM_OK);
  CHECK(std::strlen(tiny) < sizeof tiny);
  lm_lexicon_free(fra);
  lm_lexicon_free(gcr);
}

TEST_CASE("score text counts distinct types") {
  lm_lexicon* gcr = load_gcr();
  const char* text = "Lapli lapli LAPLI ka tonbé asou lavil.";
  uint32_t wsc = 0;
  REQUIRE(lm_score_text(gcr, text, std::strlen(text), nullptr, &wsc) == LM_OK);
  CHECK(wsc == 3);  // lapli, tonbé, asou; "lavil." keeps its period
  const lm_score_config punct{1, 1};
  REQUIRE(lm_score_text(gcr, text, std::strlen(text), &punct, &wsc) == LM_OK);
  CHECK(wsc == 4);
  lm_lexicon_free(gcr);
}

TEST_CASE("job run on the golden file") {
  TempDir dir;
  lm_lexicon* gcr = load_gcr();
  lm_job* job = nullptr;
  REQUIRE(lm_job_create(&job) == LM_OK);
  CHECK(lm_job_run(job, nullptr) == LM_ERR_CONFIG);
  CHECK(std::strlen(lm_last_error()) > 0);
  REQUIRE(lm_job_add_input(job, data("golden3.wet").c_str()) == LM_OK);
  REQUIRE(lm_job_add_target(job, gcr) == LM_OK);
  lm_lexicon_free(gcr);  // the job keeps its own reference
  REQUIRE(lm_job_set_threshold(job, 1) == LM_OK);
  CHECK(lm_job_set_threshold(job, 0) == LM_ERR_INVALID_ARGUMENT);
  REQUIRE(lm_job_set_output_dir(job, (dir / "out").c_str()) == LM_OK);
  REQUIRE(lm_job_set_index(job, (dir / "idx").c_str(), LM_INDEX_PASSING) == LM_OK);
  REQUIRE(lm_job_set_emit_lines(job, 1, 15) == LM_OK);
  lm_run_report report{};
  REQUIRE(lm_job_run(job, &report) == LM_OK);
  CHECK(report.documents_scanned == 3);
  CHECK(report.documents_kept_total == 1);
  CHECK(report.below_threshold == 2);
  CHECK(report.lines_emitted == 3);
  lm_job_free(job);

  langmine::testing::write_file(dir / "sp.conf", "target = gcr\nloading_threshold = 1\n");
  lm_second_pass_report sp{};
  REQUIRE(lm_second_pass_run((dir / "out").c_str(), (dir / "sp.conf").c_str(),
                             (dir / "second").c_str(), &sp) == LM_OK);
  CHECK(sp.survivors == 1);
  CHECK(lm_second_pass_run((dir / "out").c_str(), (dir / "missing.conf").c_str(),
                           (dir / "second").c_str(), &sp) == LM_ERR_IO);
}

TEST_CASE("bench over JSONL sources") {
  TempDir dir;
  langmine::testing::write_lines(dir / "needles.jsonl",
                                 {R"({"text":"lapli ka tonbé asou lavil"})",
                                  R"({"text":"tout moun rété lakaz"})"});
  langmine::testing::write_lines(dir / "hay.jsonl",
                                 {R"({"text":"il pleut sur la ville"})",
                                  R"({"text":"tout le monde reste à la maison"})",
                                  R"({"text":"une lapli perdue"})"});
  lm_lexicon* gcr = load_gcr();
  lm_bench* bench = nullptr;
  REQUIRE(lm_bench_create(&bench) == LM_OK);
  REQUIRE(lm_bench_set_sources(bench, (dir / "needles.jsonl").c_str(),
                               (dir / "hay.jsonl").c_str()) == LM_OK);
  REQUIRE(lm_bench_set_counts(bench, 2, 3) == LM_OK);
  REQUIRE(lm_bench_add_target(bench, gcr) == LM_OK);
  REQUIRE(lm_bench_add_threshold(bench, 1) == LM_OK);
  REQUIRE(lm_bench_add_threshold(bench, 3) == LM_OK);
  REQUIRE(lm_bench_run(bench, (dir / "r.csv").c_str(), nullptr) == LM_OK);
  REQUIRE(lm_bench_result_count(bench) == 2);
  lm_bench_result r{};
  REQUIRE(lm_bench_result_at(bench, 0, &r) == LM_OK);
  CHECK(r.threshold == 1);
  CHECK(r.true_positives == 2);
  CHECK(r.false_positives == 1);
  REQUIRE(lm_bench_result_at(bench, 1, &r) == LM_OK);
  CHECK(r.true_positives == 2);
  CHECK(r.false_positives == 0);
  CHECK(lm_bench_result_at(bench, 2, &r) == LM_ERR_INVALID_ARGUMENT);
  CHECK(std::filesystem::exists(dir / "r.csv.manifest.json"));
  lm_bench_free(bench);
  lm_lexicon_free(gcr);
}
