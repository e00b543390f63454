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

#include "langmine/langmine.h"

#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "langmine/bench.hpp"
#include "langmine/error.hpp"
#include "langmine/lexicon.hpp"
#include "langmine/pipeline.hpp"
#include "langmine/scoring.hpp"
#include "langmine/second_pass.hpp"
#include "langmine/unicode.hpp"

struct lm_lexicon {
  std::shared_ptr<const langmine::Lexicon> lexicon;
};

struct lm_job {
  langmine::pipeline::JobConfig config;
  bool index_requested = false;
};

struct lm_bench {
  std::optional<std::string> needles;
  std::optional<std::string> hay;
  bool synthetic = false;
  std::size_t needle_count = 200;
  std::size_t hay_count = 9800;
  std::optional<std::string> skip_word;
  std::uint64_t seed = 42;
  unsigned repeats = 1;
  unsigned threads = 1;
  langmine::FilterConfig filter;
  std::string target_language;
  std::vector<std::uint32_t> thresholds;
  std::vector<langmine::bench::BenchResult> results;
};

namespace {

thread_local std::string g_last_error;

lm_status fail(lm_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

lm_status from_code(langmine::ErrorCode code) {
  switch (code) {
    case langmine::ErrorCode::kInvalidArgument: return LM_ERR_INVALID_ARGUMENT;
    case langmine::ErrorCode::kIo: return LM_ERR_IO;
    case langmine::ErrorCode::kFormat: return LM_ERR_FORMAT;
    case langmine::ErrorCode::kEmptyLexicon: return LM_ERR_EMPTY_LEXICON;
    case langmine::ErrorCode::kConfig: return LM_ERR_CONFIG;
  }
  return LM_ERR_INTERNAL;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
lm_status guarded(Fn&& fn) {
  try {
    fn();
    return LM_OK;
  } catch (const langmine::Error& e) {
    return fail(from_code(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(LM_ERR_INTERNAL, "out of memory");
  } catch (const std::filesystem::filesystem_error& e) {
    return fail(LM_ERR_IO, e.what());
  } catch (const std::exception& e) {
    return fail(LM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(LM_ERR_INTERNAL, "unknown error");
  }
}

#define LM_REQUIRE(cond, what)                                   \
  do {                                                           \
    if (!(cond)) return fail(LM_ERR_INVALID_ARGUMENT, (what));   \
  } while (0)

langmine::ScoreConfig to_score(const lm_score_config* config) {
  langmine::ScoreConfig score;
  if (config) {
    score.punct_normalize = config->normalize_punct != 0;
    score.min_token_len = config->min_token_len;
  }
  return score;
}

}  // namespace

extern "C" {

const char* lm_version(void) { return "0.3.0"; }

const char* lm_status_string(lm_status status) {
  switch (status) {
    case LM_OK: return "ok";
    case LM_ERR_INVALID_ARGUMENT: return "invalid argument";
    case LM_ERR_IO: return "i/o error";
    case LM_ERR_FORMAT: return "format error";
    case LM_ERR_EMPTY_LEXICON: return "empty lexicon";
    case LM_ERR_CONFIG: return "configuration error";
    case LM_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* lm_last_error(void) { return g_last_error.c_str(); }

lm_status lm_lexicon_load(const char* path, const char* language_code, lm_list_kind kind,
                          uint32_t min_type_len, lm_lexicon** out, lm_lexicon_stats* stats) {
  LM_REQUIRE(path && out, "path and out are required");
  LM_REQUIRE(kind == LM_WHITELIST || kind == LM_BLACKLIST, "unknown list kind");
  *out = nullptr;
  return guarded([&] {
    langmine::LexiconLoadStats load_stats;
    auto lexicon = std::make_shared<const langmine::Lexicon>(langmine::load_lexicon(
        path, kind == LM_WHITELIST ? langmine::ListKind::kWhitelist : langmine::ListKind::kBlacklist,
        min_type_len, language_code ? language_code : "", &load_stats));
    if (stats) {
      stats->accepted = load_stats.accepted;
      stats->rejected_short = load_stats.rejected_short;
      stats->rejected_whitespace = load_stats.rejected_whitespace;
      stats->duplicates = load_stats.duplicates;
    }
    *out = new lm_lexicon{std::move(lexicon)};
  });
}

void lm_lexicon_free(lm_lexicon* lexicon) { delete lexicon; }

size_t lm_lexicon_size(const lm_lexicon* lexicon) {
  return lexicon ? lexicon->lexicon->size() : 0;
}

const char* lm_lexicon_language(const lm_lexicon* lexicon) {
  return lexicon ? lexicon->lexicon->language_code().c_str() : "";
}

lm_status lm_lexicon_overlap(const lm_lexicon* a, const lm_lexicon* b, size_t* count,
                             char* sample_buf, size_t sample_buf_len) {
  LM_REQUIRE(a && b && count, "two lexicons and a count pointer are required");
  return guarded([&] {
    const auto report = langmine::overlap_report(*a->lexicon, *b->lexicon);
    *count = report.count;
    if (sample_buf && sample_buf_len > 0) {
      std::string joined;
      for (const auto& type : report.sample) {
        if (!joined.empty()) joined.push_back('\n');
        joined += type;
      }
      const std::size_t n = std::min(joined.size(), sample_buf_len - 1);
      std::memcpy(sample_buf, joined.data(), n);
      sample_buf[n] = '\0';
    }
  });
}

lm_status lm_score_text(const lm_lexicon* lexicon, const char* text, size_t len,
                        const lm_score_config* config, uint32_t* out) {
  LM_REQUIRE(lexicon && out && (text || len == 0), "lexicon, text and out are required");
  return guarded([&] {
    const auto score = to_score(config);
    score.validate();
    std::string body(text ? text : "", len);
    langmine::text::sanitize_utf8(body);
    *out = langmine::score(langmine::tokenize(body, score), *lexicon->lexicon);
  });
}

lm_status lm_job_create(lm_job** out) {
  LM_REQUIRE(out, "out is required");
  return guarded([&] { *out = new lm_job(); });
}

void lm_job_free(lm_job* job) { delete job; }

lm_status lm_job_add_input(lm_job* job, const char* path) {
  LM_REQUIRE(job && path && *path, "job and a non-empty path are required");
  return guarded([&] { job->config.input_paths.emplace_back(path); });
}

lm_status lm_job_add_target(lm_job* job, const lm_lexicon* whitelist) {
  LM_REQUIRE(job && whitelist, "job and lexicon are required");
  LM_REQUIRE(whitelist->lexicon->kind() == langmine::ListKind::kWhitelist,
             "targets must be loaded as whitelists");
  return guarded([&] { job->config.filter.targets.push_back(whitelist->lexicon); });
}

lm_status lm_job_add_blacklist(lm_job* job, const lm_lexicon* blacklist) {
  LM_REQUIRE(job && blacklist, "job and lexicon are required");
  LM_REQUIRE(blacklist->lexicon->kind() == langmine::ListKind::kBlacklist,
             "blacklists must be loaded as blacklists");
  return guarded([&] { job->config.filter.blacklists.push_back(blacklist->lexicon); });
}

lm_status lm_job_set_threshold(lm_job* job, uint32_t threshold) {
  LM_REQUIRE(job, "job is required");
  LM_REQUIRE(threshold >= 1, "threshold must be >= 1");
  job->config.filter.threshold = threshold;
  return LM_OK;
}

lm_status lm_job_set_tolerance(lm_job* job, uint32_t tolerance) {
  LM_REQUIRE(job, "job is required");
  LM_REQUIRE(tolerance >= 1, "tolerance must be >= 1");
  job->config.filter.tolerance = tolerance;
  return LM_OK;
}

lm_status lm_job_set_score_config(lm_job* job, const lm_score_config* config) {
  LM_REQUIRE(job && config, "job and config are required");
  LM_REQUIRE(config->min_token_len >= 1, "min_token_len must be >= 1");
  job->config.filter.score = to_score(config);
  return LM_OK;
}

lm_status lm_job_set_shards(lm_job* job, uint32_t shards) {
  LM_REQUIRE(job, "job is required");
  LM_REQUIRE(shards >= 1, "shards must be >= 1");
  job->config.shard_count = shards;
  return LM_OK;
}

lm_status lm_job_set_first_file_ordinal(lm_job* job, uint64_t ordinal) {
  LM_REQUIRE(job, "job is required");
  job->config.first_file_ordinal = ordinal;
  return LM_OK;
}

lm_status lm_job_set_output_dir(lm_job* job, const char* dir) {
  LM_REQUIRE(job && dir && *dir, "job and a non-empty directory are required");
  return guarded([&] { job->config.output_dir = dir; });
}

lm_status lm_job_set_index(lm_job* job, const char* dir, lm_index_mode mode) {
  LM_REQUIRE(job, "job is required");
  LM_REQUIRE(mode == LM_INDEX_NONE || mode == LM_INDEX_PASSING || mode == LM_INDEX_ALL,
             "unknown index mode");
  return guarded([&] {
    job->config.filter.cache_vocabularies = mode == LM_INDEX_ALL       ? langmine::IndexMode::kAll
                                            : mode == LM_INDEX_PASSING ? langmine::IndexMode::kPassing
                                                                       : langmine::IndexMode::kNone;
    if (dir && *dir && mode != LM_INDEX_NONE) {
      job->config.index_dir = std::filesystem::path(dir);
    } else {
      job->config.index_dir.reset();
    }
  });
}

lm_status lm_job_set_emit_lines(lm_job* job, int enabled, uint32_t min_line_len) {
  LM_REQUIRE(job, "job is required");
  job->config.emit_lines = enabled != 0;
  job->config.min_line_len = min_line_len;
  return LM_OK;
}

lm_status lm_job_set_progress(lm_job* job, uint64_t interval) {
  LM_REQUIRE(job, "job is required");
  job->config.stats_interval = interval;
  return LM_OK;
}

lm_status lm_job_run(lm_job* job, lm_run_report* report) {
  LM_REQUIRE(job, "job is required");
  return guarded([&] {
    const auto r = langmine::pipeline::run_first_pass(
        job->config, job->config.stats_interval ? &std::cerr : nullptr);
    if (report) {
      report->documents_scanned = r.documents_scanned;
      report->documents_kept_total = r.documents_kept_total;
      report->below_threshold = r.below_threshold;
      report->blacklisted = r.blacklisted;
      report->parse_skipped = r.parse_skipped;
      report->blacklist_evaluations = r.blacklist_evaluations;
      report->bytes_scanned = r.bytes_scanned;
      report->decode_replacements = r.decode_replacements;
      report->files_skipped = r.files_skipped;
      report->lines_emitted = r.lines_emitted;
      report->cores = r.cores;
      report->wall_time_s = r.wall_time;
      report->docs_per_core_second = r.docs_per_core_second;
      report->bytes_per_core_second = r.bytes_per_core_second;
    }
  });
}

lm_status lm_second_pass_run(const char* input, const char* config_path, const char* out_dir,
                             lm_second_pass_report* report) {
  LM_REQUIRE(input && config_path && out_dir, "input, config and output paths are required");
  return guarded([&] {
    const auto config = langmine::second_pass::load_config(config_path);
    const auto r = langmine::pipeline::run_second_pass(input, config, out_dir);
    if (report) {
      auto dropped = [&](const char* reason) {
        const auto it = r.dropped.find(reason);
        return it == r.dropped.end() ? std::uint64_t{0} : it->second;
      };
      report->seen = r.seen;
      report->loaded = r.loaded;
      report->below_loading_threshold = r.below_loading_threshold;
      report->dropped_crawler_lang = dropped("crawler_lang");
      report->dropped_related = dropped("related");
      report->dropped_sources = dropped("sources");
      report->survivors = r.survivors;
      report->wall_time_s = r.wall_time;
    }
  });
}

lm_status lm_bench_create(lm_bench** out) {
  LM_REQUIRE(out, "out is required");
  return guarded([&] { *out = new lm_bench(); });
}

void lm_bench_free(lm_bench* bench) { delete bench; }

lm_status lm_bench_set_sources(lm_bench* bench, const char* needles, const char* hay) {
  LM_REQUIRE(bench && needles && hay, "bench, needle and hay paths are required");
  return guarded([&] {
    bench->needles = needles;
    bench->hay = hay;
  });
}

lm_status lm_bench_set_synthetic(lm_bench* bench, int enabled) {
  LM_REQUIRE(bench, "bench is required");
  bench->synthetic = enabled != 0;
  return LM_OK;
}

lm_status lm_bench_set_counts(lm_bench* bench, size_t needle_count, size_t hay_count) {
  LM_REQUIRE(bench, "bench is required");
  bench->needle_count = needle_count;
  bench->hay_count = hay_count;
  return LM_OK;
}

lm_status lm_bench_set_skip_word(lm_bench* bench, const char* word) {
  LM_REQUIRE(bench, "bench is required");
  return guarded([&] {
    if (word && *word) {
      bench->skip_word = word;
    } else {
      bench->skip_word.reset();
    }
  });
}

lm_status lm_bench_set_seed(lm_bench* bench, uint64_t seed) {
  LM_REQUIRE(bench, "bench is required");
  bench->seed = seed;
  return LM_OK;
}

lm_status lm_bench_set_repeats(lm_bench* bench, uint32_t repeats) {
  LM_REQUIRE(bench && repeats >= 1, "bench and repeats >= 1 are required");
  bench->repeats = repeats;
  return LM_OK;
}

lm_status lm_bench_set_threads(lm_bench* bench, uint32_t threads) {
  LM_REQUIRE(bench && threads >= 1, "bench and threads >= 1 are required");
  bench->threads = threads;
  return LM_OK;
}

lm_status lm_bench_add_target(lm_bench* bench, const lm_lexicon* whitelist) {
  LM_REQUIRE(bench && whitelist, "bench and lexicon are required");
  LM_REQUIRE(whitelist->lexicon->kind() == langmine::ListKind::kWhitelist,
             "targets must be loaded as whitelists");
  return guarded([&] { bench->filter.targets.push_back(whitelist->lexicon); });
}

lm_status lm_bench_add_blacklist(lm_bench* bench, const lm_lexicon* blacklist) {
  LM_REQUIRE(bench && blacklist, "bench and lexicon are required");
  LM_REQUIRE(blacklist->lexicon->kind() == langmine::ListKind::kBlacklist,
             "blacklists must be loaded as blacklists");
  return guarded([&] { bench->filter.blacklists.push_back(blacklist->lexicon); });
}

lm_status lm_bench_set_target_language(lm_bench* bench, const char* language) {
  LM_REQUIRE(bench && language, "bench and language are required");
  return guarded([&] { bench->target_language = language; });
}

lm_status lm_bench_set_tolerance(lm_bench* bench, uint32_t tolerance) {
  LM_REQUIRE(bench && tolerance >= 1, "bench and tolerance >= 1 are required");
  bench->filter.tolerance = tolerance;
  return LM_OK;
}

lm_status lm_bench_set_score_config(lm_bench* bench, const lm_score_config* config) {
  LM_REQUIRE(bench && config && config->min_token_len >= 1, "bench and a valid config are required");
  bench->filter.score = to_score(config);
  return LM_OK;
}

lm_status lm_bench_add_threshold(lm_bench* bench, uint32_t threshold) {
  LM_REQUIRE(bench && threshold >= 1, "bench and threshold >= 1 are required");
  return guarded([&] { bench->thresholds.push_back(threshold); });
}

lm_status lm_bench_run(lm_bench* bench, const char* csv_path, const char* corpus_path) {
  LM_REQUIRE(bench, "bench is required");
  return guarded([&] {
    namespace lb = langmine::bench;
    lb::BenchmarkCorpus corpus;
    langmine::FilterConfig filter = bench->filter;
    std::string target = bench->target_language;
    if (bench->synthetic) {
      auto synthetic = lb::make_synthetic_benchmark(lb::calibrated_schedule(), bench->seed);
      filter.targets.insert(filter.targets.begin(), synthetic.whitelist);
      if (target.empty()) target = synthetic.whitelist->language_code();
      corpus = std::move(synthetic.corpus);
    } else {
      if (!bench->needles || !bench->hay) {
        throw langmine::Error(langmine::ErrorCode::kConfig,
                              "bench needs needle and hay sources or synthetic mode");
      }
      const auto needles = lb::read_documents(*bench->needles);
      const auto hay = lb::read_documents(*bench->hay);
      corpus = lb::build_benchmark(needles, hay, bench->needle_count, bench->hay_count,
                                   bench->skip_word, bench->seed);
    }
    if (target.empty() && !filter.targets.empty()) target = filter.targets.front()->language_code();
    std::vector<std::uint32_t> thresholds = bench->thresholds;
    if (thresholds.empty()) thresholds = {1, 3, 5, 10, 15};

    bench->results = lb::run_benchmark(corpus, filter, target, thresholds, bench->repeats,
                                       bench->threads);
    if (corpus_path && *corpus_path) lb::write_corpus_jsonl(corpus, corpus_path);
    if (csv_path && *csv_path) {
      lb::write_results_csv(bench->results, csv_path);
      langmine::jsonl::Json manifest;
      manifest["seed"] = bench->seed;
      manifest["synthetic"] = bench->synthetic;
      manifest["needles"] = bench->needles.value_or("");
      manifest["hay"] = bench->hay.value_or("");
      manifest["needle_count"] = corpus.needle_count;
      manifest["hay_count"] = corpus.hay_count;
      manifest["skip_word"] = corpus.skip_word.value_or("");
      manifest["skipped_hay"] = corpus.skipped_hay;
      manifest["target"] = target;
      langmine::jsonl::Json targets = langmine::jsonl::Json::array();
      for (const auto& t : filter.targets) targets.push_back(t->language_code());
      manifest["targets"] = std::move(targets);
      manifest["blacklists"] = filter.blacklists.size();
      manifest["tolerance"] = filter.tolerance;
      manifest["normalize_punct"] = filter.score.punct_normalize;
      manifest["thresholds"] = thresholds;
      manifest["repeats"] = bench->repeats;
      manifest["threads"] = bench->threads;
      std::ofstream out(std::string(csv_path) + ".manifest.json");
      out << manifest.dump(2) << '\n';
      if (!out) throw langmine::Error(langmine::ErrorCode::kIo, "cannot write bench manifest");
    }
  });
}

size_t lm_bench_result_count(const lm_bench* bench) { return bench ? bench->results.size() : 0; }

lm_status lm_bench_result_at(const lm_bench* bench, size_t index, lm_bench_result* out) {
  LM_REQUIRE(bench && out, "bench and out are required");
  LM_REQUIRE(index < bench->results.size(), "result index out of range");
  const auto& r = bench->results[index];
  *out = lm_bench_result{r.threshold, r.true_positives, r.false_positives,
                         r.recall_pct,  r.fpr_pct,        r.wall_time};
  return LM_OK;
}

}  // extern "C"
