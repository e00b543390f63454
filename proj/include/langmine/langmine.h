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

/*
 * langmine C API.
 *
 * All objects are opaque handles created and destroyed through this
 * interface. Every fallible call returns an lm_status; on failure a
 * human-readable message is available from lm_last_error() on the same
 * thread until the next failing call.
 */
#ifndef LANGMINE_LANGMINE_H_
#define LANGMINE_LANGMINE_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(LANGMINE_BUILDING_LIBRARY)
#    define LANGMINE_API __declspec(dllexport)
#  else
#    define LANGMINE_API __declspec(dllimport)
#  endif
#else
#  define LANGMINE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lm_status {
  LM_OK = 0,
  LM_ERR_INVALID_ARGUMENT = 1,
  LM_ERR_IO = 2,
  LM_ERR_FORMAT = 3,
  LM_ERR_EMPTY_LEXICON = 4,
  LM_ERR_CONFIG = 5,
  LM_ERR_INTERNAL = 6
} lm_status;

typedef enum lm_list_kind { LM_WHITELIST = 0, LM_BLACKLIST = 1 } lm_list_kind;

typedef enum lm_index_mode {
  LM_INDEX_NONE = 0,
  LM_INDEX_PASSING = 1, /* whitelist-passing documents only */
  LM_INDEX_ALL = 2
} lm_index_mode;

typedef struct lm_lexicon lm_lexicon;
typedef struct lm_job lm_job;
typedef struct lm_bench lm_bench;

typedef struct lm_score_config {
  int normalize_punct;
  uint32_t min_token_len;
} lm_score_config;

typedef struct lm_lexicon_stats {
  size_t accepted;
  size_t rejected_short;
  size_t rejected_whitespace;
  size_t duplicates;
} lm_lexicon_stats;

typedef struct lm_run_report {
  uint64_t documents_scanned;
  uint64_t documents_kept_total;
  uint64_t below_threshold;
  uint64_t blacklisted;
  uint64_t parse_skipped;
  uint64_t blacklist_evaluations;
  uint64_t bytes_scanned;
  uint64_t decode_replacements;
  uint64_t files_skipped;
  uint64_t lines_emitted;
  uint32_t cores;
  double wall_time_s;
  double docs_per_core_second;
  double bytes_per_core_second;
} lm_run_report;

typedef struct lm_second_pass_report {
  uint64_t seen;
  uint64_t loaded;
  uint64_t below_loading_threshold;
  uint64_t dropped_crawler_lang;
  uint64_t dropped_related;
  uint64_t dropped_sources;
  uint64_t survivors;
  double wall_time_s;
} lm_second_pass_report;

typedef struct lm_bench_result {
  uint32_t threshold;
  uint64_t true_positives;
  uint64_t false_positives;
  double recall_pct;
  double fpr_pct;
  double wall_time_s;
} lm_bench_result;

LANGMINE_API const char* lm_version(void);
LANGMINE_API const char* lm_status_string(lm_status status);
LANGMINE_API const char* lm_last_error(void);

/* Lexicons. A NULL or empty language code defaults to the file stem. */
LANGMINE_API lm_status lm_lexicon_load(const char* path, const char* language_code,
                                       lm_list_kind kind, uint32_t min_type_len,
                                       lm_lexicon** out, lm_lexicon_stats* stats);
LANGMINE_API void lm_lexicon_free(lm_lexicon* lexicon);
LANGMINE_API size_t lm_lexicon_size(const lm_lexicon* lexicon);
LANGMINE_API const char* lm_lexicon_language(const lm_lexicon* lexicon);
/* Shared type count. When sample_buf is non-NULL it receives up to 20
 * shared types, newline separated and NUL terminated (truncated to fit). */
LANGMINE_API lm_status lm_lexicon_overlap(const lm_lexicon* a, const lm_lexicon* b,
                                          size_t* count, char* sample_buf,
                                          size_t sample_buf_len);

/* Distinct types of text that belong to the lexicon. config may be NULL. */
LANGMINE_API lm_status lm_score_text(const lm_lexicon* lexicon, const char* text, size_t len,
                                     const lm_score_config* config, uint32_t* out);

/* First pass. Lexicons added to a job are shared, not moved; the caller
 * still frees its handles. */
LANGMINE_API lm_status lm_job_create(lm_job** out);
LANGMINE_API void lm_job_free(lm_job* job);
LANGMINE_API lm_status lm_job_add_input(lm_job* job, const char* path);
LANGMINE_API lm_status lm_job_add_target(lm_job* job, const lm_lexicon* whitelist);
LANGMINE_API lm_status lm_job_add_blacklist(lm_job* job, const lm_lexicon* blacklist);
LANGMINE_API lm_status lm_job_set_threshold(lm_job* job, uint32_t threshold);
LANGMINE_API lm_status lm_job_set_tolerance(lm_job* job, uint32_t tolerance);
LANGMINE_API lm_status lm_job_set_score_config(lm_job* job, const lm_score_config* config);
LANGMINE_API lm_status lm_job_set_shards(lm_job* job, uint32_t shards);
/* Document ids are (file ordinal << 32) | record ordinal. Jobs that each take
 * a slice of one crawl pass the slice's starting file number here. */
LANGMINE_API lm_status lm_job_set_first_file_ordinal(lm_job* job, uint64_t ordinal);
LANGMINE_API lm_status lm_job_set_output_dir(lm_job* job, const char* dir);
LANGMINE_API lm_status lm_job_set_index(lm_job* job, const char* dir, lm_index_mode mode);
LANGMINE_API lm_status lm_job_set_emit_lines(lm_job* job, int enabled, uint32_t min_line_len);
/* Progress lines go to stderr every `interval` documents per shard. */
LANGMINE_API lm_status lm_job_set_progress(lm_job* job, uint64_t interval);
LANGMINE_API lm_status lm_job_run(lm_job* job, lm_run_report* report);

/* Second pass over a first-pass output directory, JSONL corpus or index. */
LANGMINE_API lm_status lm_second_pass_run(const char* input, const char* config_path,
                                          const char* out_dir, lm_second_pass_report* report);

/* Benchmarks. Either both needle and hay sources are set, or the synthetic
 * calibrated corpus is used. */
LANGMINE_API lm_status lm_bench_create(lm_bench** out);
LANGMINE_API void lm_bench_free(lm_bench* bench);
LANGMINE_API lm_status lm_bench_set_sources(lm_bench* bench, const char* needles, const char* hay);
LANGMINE_API lm_status lm_bench_set_synthetic(lm_bench* bench, int enabled);
LANGMINE_API lm_status lm_bench_set_counts(lm_bench* bench, size_t needle_count, size_t hay_count);
LANGMINE_API lm_status lm_bench_set_skip_word(lm_bench* bench, const char* word);
LANGMINE_API lm_status lm_bench_set_seed(lm_bench* bench, uint64_t seed);
LANGMINE_API lm_status lm_bench_set_repeats(lm_bench* bench, uint32_t repeats);
LANGMINE_API lm_status lm_bench_set_threads(lm_bench* bench, uint32_t threads);
LANGMINE_API lm_status lm_bench_add_target(lm_bench* bench, const lm_lexicon* whitelist);
LANGMINE_API lm_status lm_bench_add_blacklist(lm_bench* bench, const lm_lexicon* blacklist);
/* Language scored against gold labels; defaults to the first target. */
LANGMINE_API lm_status lm_bench_set_target_language(lm_bench* bench, const char* language);
LANGMINE_API lm_status lm_bench_set_tolerance(lm_bench* bench, uint32_t tolerance);
LANGMINE_API lm_status lm_bench_set_score_config(lm_bench* bench, const lm_score_config* config);
LANGMINE_API lm_status lm_bench_add_threshold(lm_bench* bench, uint32_t threshold);
/* Runs the sweep. csv_path (results) and corpus_path (JSONL {gold, text})
 * may be NULL. A manifest is written next to the CSV as <csv>.manifest.json. */
LANGMINE_API lm_status lm_bench_run(lm_bench* bench, const char* csv_path, const char* corpus_path);
LANGMINE_API size_t lm_bench_result_count(const lm_bench* bench);
LANGMINE_API lm_status lm_bench_result_at(const lm_bench* bench, size_t index, lm_bench_result* out);

#ifdef __cplusplus
}
#endif

#endif /* LANGMINE_LANGMINE_H_ */
