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
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "langmine/bench.hpp"
#include "langmine/error.hpp"
#include "langmine/pipeline.hpp"
#include "langmine/vocab_index.hpp"
#include "test_support.hpp"

using namespace langmine;
using namespace langmine::pipeline;
using langmine::testing::TempDir;
namespace fs = std::filesystem;

namespace {

std::shared_ptr<const Lexicon> golden_lexicon() {
  return std::make_shared<const Lexicon>(
      load_lexicon(langmine::testing::data_dir() / "gcr.txt", ListKind::kWhitelist));
}

struct SyntheticInputs {
  std::vector<fs::path> files;
  std::shared_ptr<const Lexicon> whitelist;
  std::shared_ptr<const Lexicon> blacklist;
};

// Several small WET files with ~1% needles and a blacklist drawn from the
// filler vocabulary.
SyntheticInputs synthetic_inputs(const fs::path& dir, std::size_t files, std::uint64_t bytes) {
  std::mt19937_64 rng(11);
  const auto types = bench::make_vocabulary(200, rng);
  const auto filler = bench::make_vocabulary(1500, rng, types);
  SyntheticInputs out;
  for (std::size_t i = 0; i < files; ++i) {
    const fs::path p = dir / ("part-" + std::to_string(i) + ".wet");
    std::ofstream f(p, std::ios::binary);
    bench::write_synthetic_wet(f, bytes, 60, filler, types, 100 + i);
    out.files.push_back(p);
  }
  out.whitelist = std::make_shared<const Lexicon>("gcr", ListKind::kWhitelist, 3, types);
  const std::vector<std::string> black(filler.begin(), filler.begin() + 30);
  out.blacklist = std::make_shared<const Lexicon>("fra", ListKind::kBlacklist, 3, black);
  return out;
}

std::string slurp(const fs::path& p) { return langmine::testing::read_file(p); }

jsonl::Json read_json(const fs::path& p) { return jsonl::Json::parse(slurp(p)); }

}  // namespace

TEST_CASE("golden file at threshold 1 keeps the Creole page") {
  TempDir dir;
  JobConfig job;
  job.input_paths = {langmine::testing::data_dir() / "golden3.wet"};
  job.output_dir = dir / "out";
  job.filter.targets = {golden_lexicon()};
  job.filter.threshold = 1;
  const auto report = run_first_pass(job);
  CHECK(report.documents_scanned == 3);
  CHECK(report.documents_kept_total == 1);
  CHECK(report.documents_kept.at("gcr") == 1);
  CHECK(report.parse_skipped == 0);
  const auto lines = langmine::testing::read_lines(job.output_dir / "gcr.jsonl");
  REQUIRE(lines.size() == 1);
  const auto doc = jsonl::parse_scored_document(lines[0]);
  CHECK(doc.uri == "https://gcr.example.org/lapli");
  CHECK(doc.wsc_for("gcr") == 7);  // "lavil." "lakaz." "lakou-a." keep their periods
  CHECK(read_json(job.output_dir / "manifest.json")["status"] == "complete");
}

TEST_CASE("shard count does not change merged output") {
  TempDir dir;
  const auto in = synthetic_inputs(dir.path(), 8, 60000);
  std::string reference_docs, reference_lines;
  for (std::size_t shards : {1, 3, 8}) {
    JobConfig job;
    job.input_paths = {dir.path()};
    job.output_dir = dir / ("out" + std::to_string(shards));
    job.shard_count = shards;
    job.filter.targets = {in.whitelist};
    job.filter.blacklists = {in.blacklist};
    job.filter.threshold = 3;
    job.filter.tolerance = 2;
    job.emit_lines = true;
    const auto report = run_first_pass(job);
    CHECK(report.cores == shards);
    CHECK(report.documents_scanned ==
          report.documents_kept_total + report.below_threshold + report.blacklisted +
              report.parse_skipped);
    CHECK(report.parse_skipped == 8);  // one warcinfo per file
    const auto docs = slurp(job.output_dir / "gcr.jsonl");
    const auto lines = slurp(job.output_dir / "lines" / "gcr.jsonl");
    CHECK(!docs.empty());
    CHECK(!lines.empty());
    if (shards == 1) {
      reference_docs = docs;
      reference_lines = lines;
    } else {
      CHECK(docs == reference_docs);
      CHECK(lines == reference_lines);
    }
  }
}

TEST_CASE("merged ranking is sorted and ids carry the file ordinal") {
  TempDir dir;
  const auto in = synthetic_inputs(dir.path(), 3, 40000);
  JobConfig job;
  job.input_paths = in.files;
  job.output_dir = dir / "out";
  job.shard_count = 2;
  job.filter.targets = {in.whitelist};
  job.filter.threshold = 2;
  run_first_pass(job);
  std::vector<ScoredDocument> docs;
  for (const auto& line : langmine::testing::read_lines(job.output_dir / "gcr.jsonl")) {
    docs.push_back(jsonl::parse_scored_document(line));
  }
  REQUIRE(docs.size() > 1);
  for (std::size_t i = 1; i < docs.size(); ++i) {
    CHECK(ranks_before(docs[i - 1], docs[i], "gcr"));
  }
  for (const auto& d : docs) CHECK((d.id >> kFileIdShift) < 3);
}

TEST_CASE("progress reporting leaves results unchanged") {
  TempDir dir;
  const auto in = synthetic_inputs(dir.path(), 2, 30000);
  auto run = [&](std::uint64_t interval, const std::string& name, std::ostream* progress) {
    JobConfig job;
    job.input_paths = in.files;
    job.output_dir = dir / name;
    job.filter.targets = {in.whitelist};
    job.filter.threshold = 1;
    job.stats_interval = interval;
    run_first_pass(job, progress);
    return slurp(job.output_dir / "gcr.jsonl");
  };
  std::ostringstream progress;
  CHECK(run(0, "quiet", nullptr) == run(5, "chatty", &progress));
  CHECK(progress.str().find("[shard 0] documents=5 ") != std::string::npos);
}

TEST_CASE("unreadable input is skipped with a warning") {
  TempDir dir;
  JobConfig job;
  job.input_paths = {dir / "missing.wet", langmine::testing::data_dir() / "golden3.wet"};
  job.output_dir = dir / "out";
  job.filter.targets = {golden_lexicon()};
  job.filter.threshold = 1;
  const auto report = run_first_pass(job);
  CHECK(report.files_skipped == 1);
  REQUIRE(report.warnings.size() == 1);
  CHECK(report.warnings[0].find("missing.wet") != std::string::npos);
  CHECK(report.documents_kept_total == 1);
}

TEST_CASE("invalid job configuration") {
  JobConfig job;
  CHECK_THROWS_AS(run_first_pass(job), Error);
  TempDir dir;
  job.input_paths = {langmine::testing::data_dir() / "golden3.wet"};
  job.output_dir = dir / "out";
  job.filter.targets = {golden_lexicon()};
  job.index_dir = dir / "idx";
  job.filter.cache_vocabularies = IndexMode::kNone;
  try {
    run_first_pass(job);
    FAIL("expected a config error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kConfig);
  }
  job.index_dir.reset();
  job.input_paths = {dir / "empty-dir"};
  fs::create_directories(dir / "empty-dir");
  CHECK_THROWS_AS(run_first_pass(job), Error);
}

TEST_CASE("index files replay to the same kept set") {
  TempDir dir;
  const auto in = synthetic_inputs(dir.path(), 2, 50000);
  for (IndexMode mode : {IndexMode::kPassing, IndexMode::kAll}) {
    JobConfig job;
    job.input_paths = in.files;
    job.output_dir = dir / "out";
    job.index_dir = dir / (mode == IndexMode::kAll ? "idx-all" : "idx-pass");
    job.filter.targets = {in.whitelist};
    job.filter.blacklists = {in.blacklist};
    job.filter.threshold = 2;
    job.filter.cache_vocabularies = mode;
    const auto report = run_first_pass(job);
    std::set<std::uint64_t> kept;
    for (const auto& line : langmine::testing::read_lines(job.output_dir / "gcr.jsonl")) {
      kept.insert(jsonl::parse_scored_document(line).id);
    }
    std::set<std::uint64_t> replayed;
    std::uint64_t indexed = 0;
    for (const auto& entry : fs::directory_iterator(*job.index_dir)) {
      indexed += index::read_index(entry.path()).entries.size();
      for (const auto& d : index::replay_index(entry.path(), job.filter)) replayed.insert(d.id);
    }
    CHECK(kept == replayed);
    if (mode == IndexMode::kAll) {
      CHECK(indexed == report.documents_scanned - report.parse_skipped);
    } else {
      CHECK(indexed >= kept.size());
      CHECK(indexed < report.documents_scanned);
    }
  }
}

TEST_CASE("second pass identity and block-all") {
  TempDir dir;
  JobConfig job;
  job.input_paths = {langmine::testing::data_dir() / "golden3.wet"};
  job.output_dir = dir / "first";
  job.filter.targets = {golden_lexicon()};
  job.filter.threshold = 1;
  job.emit_lines = true;
  run_first_pass(job);
  CHECK(fs::exists(job.output_dir / "lines" / "gcr.jsonl"));

  second_pass::SecondPassConfig cfg;
  cfg.target = "gcr";
  cfg.loading_threshold = 1;
  auto report = run_second_pass(job.output_dir, cfg, dir / "identity");
  CHECK(report.survivors == 1);
  CHECK(slurp(dir / "identity" / "gcr.jsonl") == slurp(job.output_dir / "gcr.jsonl"));
  CHECK(read_json(dir / "identity" / "manifest.json")["status"] == "complete");

  cfg.blocked_url_patterns = {second_pass::UrlPattern::parse("*")};
  report = run_second_pass(job.output_dir, cfg, dir / "blocked");
  CHECK(report.survivors == 0);
  CHECK(report.dropped.at("sources") == 1);
  CHECK(slurp(dir / "blocked" / "gcr.jsonl").empty());
  CHECK(slurp(dir / "blocked" / "audit.tsv").find("\tsources") != std::string::npos);

  cfg.blocked_url_patterns.clear();
  cfg.loading_threshold = 11;
  report = run_second_pass(job.output_dir, cfg, dir / "strict");
  CHECK(report.below_loading_threshold == 1);
  CHECK(report.survivors == 0);
}

TEST_CASE("second pass rejects a loading threshold below the first pass") {
  TempDir dir;
  JobConfig job;
  job.input_paths = {langmine::testing::data_dir() / "golden3.wet"};
  job.output_dir = dir / "first";
  job.filter.targets = {golden_lexicon()};
  job.filter.threshold = 5;
  run_first_pass(job);
  second_pass::SecondPassConfig cfg;
  cfg.target = "gcr";
  cfg.loading_threshold = 2;
  try {
    run_second_pass(job.output_dir, cfg, dir / "second");
    FAIL("expected a config error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kConfig);
  }
}

TEST_CASE("expand_inputs orders directory entries and drops duplicates") {
  TempDir dir;
  fs::create_directories(dir / "d");
  langmine::testing::write_file(dir / "d" / "b.wet", "");
  langmine::testing::write_file(dir / "d" / "a.wet", "");
  const auto files = expand_inputs({dir / "d", dir / "d" / "a.wet"});
  REQUIRE(files.size() == 2);
  CHECK(files[0].filename() == "a.wet");
  CHECK(files[1].filename() == "b.wet");
}

TEST_CASE("first_file_ordinal offsets ids and index names") {
  TempDir dir;
  JobConfig job;
  job.input_paths = {langmine::testing::data_dir() / "golden3.wet"};
  job.output_dir = dir / "out";
  job.index_dir = dir / "idx";
  job.first_file_ordinal = 7;
  job.filter.targets = {golden_lexicon()};
  job.filter.threshold = 1;
  run_first_pass(job);
  const auto lines = langmine::testing::read_lines(job.output_dir / "gcr.jsonl");
  REQUIRE(lines.size() == 1);
  CHECK(jsonl::parse_scored_document(lines[0]).id == (std::uint64_t{7} << kFileIdShift));
  CHECK(fs::exists(*job.index_dir / "000007-golden3.wet.idx"));
  job.first_file_ordinal = std::uint64_t{1} << 40;
  CHECK_THROWS_AS(run_first_pass(job), Error);
}
