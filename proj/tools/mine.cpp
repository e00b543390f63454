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

// mine: command-line front end over the langmine C API.
//
//   mine first-pass  --input <paths> --wordlist <lang=path>... --out DIR ...
//   mine second-pass --in DIR --config FILE --out DIR
//   mine bench       --needles PATH --hay PATH --thresholds 1,3,5,10,15 --out CSV
//   mine overlap     <wordlist> <wordlist>

#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "langmine/langmine.h"

namespace {

struct LexiconDeleter {
  void operator()(lm_lexicon* p) const { lm_lexicon_free(p); }
};
using LexiconPtr = std::unique_ptr<lm_lexicon, LexiconDeleter>;

int report_failure(const char* what, lm_status status) {
  std::fprintf(stderr, "mine: %s: %s: %s\n", what, lm_status_string(status), lm_last_error());
  return 1;
}

// "lang=path", or a bare path whose stem names the language.
bool split_wordlist(const std::string& arg, std::string* lang, std::string* path) {
  const auto eq = arg.find('=');
  if (eq == std::string::npos) {
    lang->clear();
    *path = arg;
    return !path->empty();
  }
  *lang = arg.substr(0, eq);
  *path = arg.substr(eq + 1);
  return !lang->empty() && !path->empty();
}

int load_lists(const std::vector<std::string>& args, lm_list_kind kind, uint32_t min_type_len,
               std::vector<LexiconPtr>* out) {
  for (const std::string& arg : args) {
    std::string lang, path;
    if (!split_wordlist(arg, &lang, &path)) {
      std::fprintf(stderr, "mine: bad wordlist argument '%s' (expected lang=path)\n", arg.c_str());
      return 1;
    }
    lm_lexicon* raw = nullptr;
    lm_lexicon_stats stats{};
    const lm_status st =
        lm_lexicon_load(path.c_str(), lang.empty() ? nullptr : lang.c_str(), kind, min_type_len, &raw, &stats);
    if (st != LM_OK) return report_failure(path.c_str(), st);
    std::fprintf(stderr, "loaded %s '%s': %zu types (%zu too short, %zu multi-word, %zu duplicates)\n",
                 kind == LM_WHITELIST ? "wordlist" : "blacklist", lm_lexicon_language(raw),
                 stats.accepted, stats.rejected_short, stats.rejected_whitespace, stats.duplicates);
    out->emplace_back(raw);
  }
  return 0;
}

struct FirstPassArgs {
  std::vector<std::string> inputs;
  std::vector<std::string> wordlists;
  std::vector<std::string> blacklists;
  uint32_t threshold = 5;
  uint32_t tolerance = 1;
  uint32_t min_type_len = 3;
  uint32_t min_token_len = 1;
  bool normalize_punct = false;
  std::string index_out;
  std::string index_mode = "passing";
  bool emit_lines = false;
  uint32_t min_line_len = 15;
  uint32_t shards = 1;
  uint64_t file_offset = 0;
  std::string out;
  uint64_t progress = 0;
};

int run_first_pass(const FirstPassArgs& args) {
  std::vector<LexiconPtr> targets, blacklists;
  if (load_lists(args.wordlists, LM_WHITELIST, args.min_type_len, &targets)) return 1;
  if (load_lists(args.blacklists, LM_BLACKLIST, args.min_type_len, &blacklists)) return 1;

  lm_job* raw = nullptr;
  if (lm_status st = lm_job_create(&raw); st != LM_OK) return report_failure("job", st);
  std::unique_ptr<lm_job, void (*)(lm_job*)> job(raw, lm_job_free);

  const lm_score_config score{args.normalize_punct ? 1 : 0, args.min_token_len};
  const lm_index_mode mode = args.index_out.empty()        ? LM_INDEX_NONE
                             : args.index_mode == "all"    ? LM_INDEX_ALL
                                                           : LM_INDEX_PASSING;
  lm_status st = LM_OK;
  for (const auto& input : args.inputs) {
    if ((st = lm_job_add_input(job.get(), input.c_str())) != LM_OK) return report_failure("input", st);
  }
  for (const auto& t : targets) {
    if ((st = lm_job_add_target(job.get(), t.get())) != LM_OK) return report_failure("wordlist", st);
  }
  for (const auto& b : blacklists) {
    if ((st = lm_job_add_blacklist(job.get(), b.get())) != LM_OK) return report_failure("blacklist", st);
  }
  if ((st = lm_job_set_threshold(job.get(), args.threshold)) != LM_OK ||
      (st = lm_job_set_tolerance(job.get(), args.tolerance)) != LM_OK ||
      (st = lm_job_set_score_config(job.get(), &score)) != LM_OK ||
      (st = lm_job_set_shards(job.get(), args.shards)) != LM_OK ||
      (st = lm_job_set_first_file_ordinal(job.get(), args.file_offset)) != LM_OK ||
      (st = lm_job_set_output_dir(job.get(), args.out.c_str())) != LM_OK ||
      (st = lm_job_set_index(job.get(), args.index_out.c_str(), mode)) != LM_OK ||
      (st = lm_job_set_emit_lines(job.get(), args.emit_lines, args.min_line_len)) != LM_OK ||
      (st = lm_job_set_progress(job.get(), args.progress)) != LM_OK) {
    return report_failure("configuration", st);
  }

  lm_run_report report{};
  if ((st = lm_job_run(job.get(), &report)) != LM_OK) return report_failure("first pass", st);
  std::printf("scanned %llu records (%llu bytes) in %.3f s on %u core(s)\n",
              static_cast<unsigned long long>(report.documents_scanned),
              static_cast<unsigned long long>(report.bytes_scanned), report.wall_time_s, report.cores);
  std::printf("kept %llu, below threshold %llu, blacklisted %llu, parse-skipped %llu\n",
              static_cast<unsigned long long>(report.documents_kept_total),
              static_cast<unsigned long long>(report.below_threshold),
              static_cast<unsigned long long>(report.blacklisted),
              static_cast<unsigned long long>(report.parse_skipped));
  std::printf("%.0f docs/core/s, %.2f MB/core/s\n", report.docs_per_core_second,
              report.bytes_per_core_second / 1e6);
  return 0;
}

int run_second_pass(const std::string& in, const std::string& config, const std::string& out) {
  lm_second_pass_report report{};
  const lm_status st = lm_second_pass_run(in.c_str(), config.c_str(), out.c_str(), &report);
  if (st != LM_OK) return report_failure("second pass", st);
  std::printf("seen %llu, loaded %llu, survivors %llu (dropped: crawler_lang %llu, related %llu, "
              "sources %llu)\n",
              static_cast<unsigned long long>(report.seen),
              static_cast<unsigned long long>(report.loaded),
              static_cast<unsigned long long>(report.survivors),
              static_cast<unsigned long long>(report.dropped_crawler_lang),
              static_cast<unsigned long long>(report.dropped_related),
              static_cast<unsigned long long>(report.dropped_sources));
  return 0;
}

struct BenchArgs {
  std::string needles;
  std::string hay;
  bool synthetic = false;
  std::vector<uint32_t> thresholds{1, 3, 5, 10, 15};
  std::string out;
  std::string corpus_out;
  std::vector<std::string> wordlists;
  std::vector<std::string> blacklists;
  std::string target;
  size_t needle_count = 200;
  size_t hay_count = 9800;
  std::string skip_word;
  uint64_t seed = 42;
  uint32_t repeats = 1;
  uint32_t threads = 1;
  uint32_t tolerance = 1;
  uint32_t min_type_len = 3;
  bool normalize_punct = false;
};

int run_bench(const BenchArgs& args) {
  if (!args.synthetic && (args.needles.empty() || args.hay.empty())) {
    std::fprintf(stderr, "mine: bench needs --needles and --hay, or --synthetic\n");
    return 1;
  }
  std::vector<LexiconPtr> targets, blacklists;
  if (load_lists(args.wordlists, LM_WHITELIST, args.min_type_len, &targets)) return 1;
  if (load_lists(args.blacklists, LM_BLACKLIST, args.min_type_len, &blacklists)) return 1;

  lm_bench* raw = nullptr;
  if (lm_status st = lm_bench_create(&raw); st != LM_OK) return report_failure("bench", st);
  std::unique_ptr<lm_bench, void (*)(lm_bench*)> bench(raw, lm_bench_free);

  lm_status st = LM_OK;
  const lm_score_config score{args.normalize_punct ? 1 : 0, 1};
  if (args.synthetic) {
    st = lm_bench_set_synthetic(bench.get(), 1);
  } else {
    st = lm_bench_set_sources(bench.get(), args.needles.c_str(), args.hay.c_str());
  }
  if (st != LM_OK) return report_failure("bench sources", st);
  for (const auto& t : targets) {
    if ((st = lm_bench_add_target(bench.get(), t.get())) != LM_OK) return report_failure("wordlist", st);
  }
  for (const auto& b : blacklists) {
    if ((st = lm_bench_add_blacklist(bench.get(), b.get())) != LM_OK) return report_failure("blacklist", st);
  }
  for (uint32_t t : args.thresholds) {
    if ((st = lm_bench_add_threshold(bench.get(), t)) != LM_OK) return report_failure("threshold", st);
  }
  if ((st = lm_bench_set_counts(bench.get(), args.needle_count, args.hay_count)) != LM_OK ||
      (st = lm_bench_set_skip_word(bench.get(), args.skip_word.c_str())) != LM_OK ||
      (st = lm_bench_set_seed(bench.get(), args.seed)) != LM_OK ||
      (st = lm_bench_set_repeats(bench.get(), args.repeats)) != LM_OK ||
      (st = lm_bench_set_threads(bench.get(), args.threads)) != LM_OK ||
      (st = lm_bench_set_tolerance(bench.get(), args.tolerance)) != LM_OK ||
      (st = lm_bench_set_score_config(bench.get(), &score)) != LM_OK ||
      (!args.target.empty() &&
       (st = lm_bench_set_target_language(bench.get(), args.target.c_str())) != LM_OK)) {
    return report_failure("configuration", st);
  }
  st = lm_bench_run(bench.get(), args.out.empty() ? nullptr : args.out.c_str(),
                    args.corpus_out.empty() ? nullptr : args.corpus_out.c_str());
  if (st != LM_OK) return report_failure("bench", st);

  std::printf("%9s %6s %6s %9s %7s %10s\n", "threshold", "TP", "FP", "recall%", "FPR%", "seconds");
  for (size_t i = 0; i < lm_bench_result_count(bench.get()); ++i) {
    lm_bench_result r{};
    lm_bench_result_at(bench.get(), i, &r);
    std::printf("%9u %6llu %6llu %9.2f %7.2f %10.4f\n", r.threshold,
                static_cast<unsigned long long>(r.true_positives),
                static_cast<unsigned long long>(r.false_positives), r.recall_pct, r.fpr_pct,
                r.wall_time_s);
  }
  return 0;
}

int run_overlap(const std::string& a, const std::string& b, uint32_t min_type_len) {
  std::vector<LexiconPtr> lists;
  if (load_lists({a, b}, LM_WHITELIST, min_type_len, &lists)) return 1;
  size_t count = 0;
  char sample[4096];
  const lm_status st = lm_lexicon_overlap(lists[0].get(), lists[1].get(), &count, sample, sizeof sample);
  if (st != LM_OK) return report_failure("overlap", st);
  std::printf("%zu shared types\n%s%s", count, sample, count ? "\n" : "");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"langmine: lexicon-based language mining over web-crawl archives"};
  app.require_subcommand(1);
  app.set_version_flag("--version", lm_version());

  FirstPassArgs fp;
  auto* first = app.add_subcommand("first-pass", "Filter and rank WET archives");
  first->add_option("--input", fp.inputs, "WET files or directories")->required();
  first->add_option("--wordlist", fp.wordlists, "Target whitelist as lang=path")->required();
  first->add_option("--blacklist", fp.blacklists, "Blacklist wordlist path");
  first->add_option("--threshold", fp.threshold, "Minimum whitelist score")->capture_default_str();
  first->add_option("--tolerance", fp.tolerance, "Blacklist score that rejects")->capture_default_str();
  first->add_option("--min-type-len", fp.min_type_len, "Minimum wordlist type length")->capture_default_str();
  first->add_option("--min-token-len", fp.min_token_len, "Minimum document token length")->capture_default_str();
  first->add_flag("--normalize-punct", fp.normalize_punct, "Split tokens on punctuation");
  first->add_option("--index-out", fp.index_out, "Directory for vocabulary indices");
  first->add_option("--index-mode", fp.index_mode, "passing or all")
      ->check(CLI::IsMember({"passing", "all"}))
      ->capture_default_str();
  first->add_flag("--emit-lines", fp.emit_lines, "Also write ranked line corpora");
  first->add_option("--min-line-len", fp.min_line_len, "Shortest line kept by --emit-lines")->capture_default_str();
  first->add_option("--shards", fp.shards, "Parallel workers (one input file at a time each)")->capture_default_str();
  first->add_option("--file-offset", fp.file_offset,
                    "Ordinal of the first input file, for jobs that split one crawl")
      ->capture_default_str();
  first->add_option("--out", fp.out, "Output directory")->required();
  first->add_option("--progress", fp.progress, "Report every N documents per shard");

  std::string sp_in, sp_config, sp_out;
  auto* second = app.add_subcommand("second-pass", "Refine a first-pass corpus");
  second->add_option("--in", sp_in, "First-pass output directory, JSONL corpus or index")->required();
  second->add_option("--config", sp_config, "Second-pass config file")->required()->check(CLI::ExistingFile);
  second->add_option("--out", sp_out, "Output directory")->required();

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "Recall / FPR / speed sweep over a needle+hay corpus");
  bench->add_option("--needles", ba.needles, "Needle documents (JSONL with text, or WET)");
  bench->add_option("--hay", ba.hay, "Hay documents (JSONL with text, or WET)");
  bench->add_flag("--synthetic", ba.synthetic, "Use the calibrated synthetic corpus");
  bench->add_option("--thresholds", ba.thresholds, "Comma-separated thresholds")
      ->delimiter(',')
      ->capture_default_str();
  bench->add_option("--out", ba.out, "Results CSV")->required();
  bench->add_option("--corpus-out", ba.corpus_out, "Write the sampled corpus as JSONL");
  bench->add_option("--wordlist", ba.wordlists, "Target whitelist as lang=path");
  bench->add_option("--blacklist", ba.blacklists, "Blacklist wordlist path");
  bench->add_option("--target", ba.target, "Language scored against gold labels");
  bench->add_option("--needle-count", ba.needle_count)->capture_default_str();
  bench->add_option("--hay-count", ba.hay_count)->capture_default_str();
  bench->add_option("--skip-word", ba.skip_word, "Exclude hay containing this word");
  bench->add_option("--seed", ba.seed)->capture_default_str();
  bench->add_option("--repeats", ba.repeats, "Timed passes per threshold")->capture_default_str();
  bench->add_option("--threads", ba.threads)->capture_default_str();
  bench->add_option("--tolerance", ba.tolerance)->capture_default_str();
  bench->add_option("--min-type-len", ba.min_type_len)->capture_default_str();
  bench->add_flag("--normalize-punct", ba.normalize_punct);

  std::string ov_a, ov_b;
  uint32_t ov_min = 3;
  auto* overlap = app.add_subcommand("overlap", "Count types shared by two wordlists");
  overlap->add_option("first", ov_a, "lang=path or path")->required();
  overlap->add_option("second", ov_b, "lang=path or path")->required();
  overlap->add_option("--min-type-len", ov_min)->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  if (*first) return run_first_pass(fp);
  if (*second) return run_second_pass(sp_in, sp_config, sp_out);
  if (*bench) return run_bench(ba);
  if (*overlap) return run_overlap(ov_a, ov_b, ov_min);
  return 1;
}
