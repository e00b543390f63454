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

#include "langmine/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <queue>
#include <set>
#include <thread>
#include <unistd.h>

#include "langmine/error.hpp"
#include "langmine/vocab_index.hpp"
#include "langmine/warc.hpp"

namespace langmine::pipeline {
namespace fs = std::filesystem;
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot create " + path.string());
  return out;
}

void close_output(std::ofstream& out, const fs::path& path) {
  out.flush();
  if (!out) throw Error(ErrorCode::kIo, "write failed on " + path.string());
  out.close();
}

void write_json_file(const fs::path& path, const jsonl::Json& j) {
  std::ofstream out = open_output(path);
  out << j.dump(2) << '\n';
  close_output(out, path);
}

fs::path scratch_dir(const fs::path& output_dir) {
  static std::atomic<unsigned> counter{0};
  const std::string name = ".runs-" + std::to_string(::getpid()) + "-" + std::to_string(counter++);
  if (const char* tmp = std::getenv("LANGMINE_TMPDIR"); tmp && *tmp) return fs::path(tmp) / name;
  return output_dir / name;
}

// Sorted shard runs are stored one record per line with the sort key in
// front of the JSON payload:
//   documents: wsc \t id \t json
//   lines:     matches \t length \t doc_id \t line_no \t json
struct DocKey {
  std::uint32_t wsc = 0;
  std::uint64_t id = 0;
  bool before(const DocKey& o) const { return wsc != o.wsc ? wsc > o.wsc : id < o.id; }
};

struct LineKey {
  RankedLine line;
  bool before(const LineKey& o) const { return line_ranks_before(line, o.line); }
};

std::string_view payload_after(std::string_view line, int tabs) {
  std::size_t pos = 0;
  for (int i = 0; i < tabs; ++i) pos = line.find('\t', pos) + 1;
  return line.substr(pos);
}

std::uint64_t field_u64(std::string_view line, int index) {
  std::size_t pos = 0;
  for (int i = 0; i < index; ++i) pos = line.find('\t', pos) + 1;
  return std::strtoull(line.data() + pos, nullptr, 10);
}

DocKey doc_key(std::string_view line) {
  return {static_cast<std::uint32_t>(field_u64(line, 0)), field_u64(line, 1)};
}

LineKey line_key(std::string_view line) {
  LineKey key;
  key.line.matches = static_cast<std::uint32_t>(field_u64(line, 0));
  key.line.length = static_cast<std::uint32_t>(field_u64(line, 1));
  key.line.doc_id = field_u64(line, 2);
  key.line.line_no = static_cast<std::uint32_t>(field_u64(line, 3));
  return key;
}

// k-way merge of sorted runs; sink receives each record line in order.
template <typename Key, typename ParseKey, typename Sink>
void merge_runs(const std::vector<fs::path>& runs, ParseKey parse_key, Sink sink) {
  struct Cursor {
    std::ifstream in;
    std::string line;
    Key key;
  };
  std::vector<Cursor> cursors(runs.size());
  auto advance = [&](std::size_t i) {
    if (!std::getline(cursors[i].in, cursors[i].line)) return false;
    cursors[i].key = parse_key(cursors[i].line);
    return true;
  };
  auto later = [&](std::size_t a, std::size_t b) {
    if (cursors[b].key.before(cursors[a].key)) return true;
    if (cursors[a].key.before(cursors[b].key)) return false;
    return a > b;
  };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(later)> heap(later);
  for (std::size_t i = 0; i < runs.size(); ++i) {
    cursors[i].in.open(runs[i], std::ios::binary);
    if (!cursors[i].in) throw Error(ErrorCode::kIo, "cannot reopen run " + runs[i].string());
    if (advance(i)) heap.push(i);
  }
  while (!heap.empty()) {
    const std::size_t i = heap.top();
    heap.pop();
    sink(cursors[i].line);
    if (advance(i)) heap.push(i);
  }
}

struct ShardResult {
  FilterCounters counters;
  warc::IngestStats ingest;
  std::uint64_t files_skipped = 0;
  std::vector<std::string> warnings;
  std::map<std::string, std::uint64_t> kept_per_language;
  std::map<std::string, fs::path> doc_runs;
  std::map<std::string, fs::path> line_runs;
};

jsonl::Json config_json(const JobConfig& config) {
  jsonl::Json j;
  jsonl::Json inputs = jsonl::Json::array();
  for (const auto& p : config.input_paths) inputs.push_back(p.string());
  j["input_paths"] = std::move(inputs);
  j["shard_count"] = config.shard_count;
  j["first_file_ordinal"] = config.first_file_ordinal;
  j["threshold"] = config.filter.threshold;
  j["tolerance"] = config.filter.tolerance;
  jsonl::Json targets = jsonl::Json::array();
  for (const auto& t : config.filter.targets) {
    targets.push_back({{"language", t->language_code()},
                       {"types", t->size()},
                       {"min_type_len", t->min_type_len()}});
  }
  j["targets"] = std::move(targets);
  jsonl::Json blacklists = jsonl::Json::array();
  for (const auto& b : config.filter.blacklists) {
    blacklists.push_back({{"name", b->language_code()}, {"types", b->size()}});
  }
  j["blacklists"] = std::move(blacklists);
  j["normalize_punct"] = config.filter.score.punct_normalize;
  j["min_token_len"] = config.filter.score.min_token_len;
  j["index_dir"] = config.index_dir ? config.index_dir->string() : std::string();
  j["cache_vocabularies"] = config.filter.cache_vocabularies == IndexMode::kAll       ? "all"
                            : config.filter.cache_vocabularies == IndexMode::kPassing ? "passing"
                                                                                      : "none";
  j["emit_lines"] = config.emit_lines;
  j["min_line_len"] = config.min_line_len;
  return j;
}

}  // namespace

void JobConfig::validate() const {
  if (input_paths.empty()) throw Error(ErrorCode::kConfig, "no input paths");
  if (shard_count < 1) throw Error(ErrorCode::kConfig, "shard_count must be >= 1");
  if (first_file_ordinal >= (std::uint64_t{1} << (64 - kFileIdShift))) {
    throw Error(ErrorCode::kConfig, "first_file_ordinal out of range");
  }
  if (output_dir.empty()) throw Error(ErrorCode::kConfig, "output directory required");
  if (index_dir && filter.cache_vocabularies == IndexMode::kNone) {
    throw Error(ErrorCode::kConfig, "index output requested with vocabulary caching disabled");
  }
  filter.validate();
}

jsonl::Json RunReport::to_json() const {
  jsonl::Json j;
  j["documents_scanned"] = documents_scanned;
  j["documents_kept"] = documents_kept;
  j["documents_kept_total"] = documents_kept_total;
  j["bytes_scanned"] = bytes_scanned;
  j["wall_time"] = wall_time;
  j["cores"] = cores;
  j["docs_per_core_second"] = docs_per_core_second;
  j["bytes_per_core_second"] = bytes_per_core_second;
  j["rejection_breakdown"] = {{"below_threshold", below_threshold}, {"blacklisted", blacklisted}};
  j["parse_skipped"] = parse_skipped;
  j["blacklist_evaluations"] = blacklist_evaluations;
  j["decode_replacements"] = decode_replacements;
  j["files_skipped"] = files_skipped;
  j["lines_emitted"] = lines_emitted;
  j["warnings"] = warnings;
  return j;
}

std::vector<fs::path> expand_inputs(const std::vector<fs::path>& paths) {
  std::vector<fs::path> out;
  std::set<fs::path> seen;
  for (const fs::path& p : paths) {
    std::error_code ec;
    if (fs::is_directory(p, ec)) {
      std::vector<fs::path> files;
      for (const auto& entry : fs::directory_iterator(p, ec)) {
        if (entry.is_regular_file()) files.push_back(entry.path());
      }
      std::sort(files.begin(), files.end());
      for (auto& f : files) {
        if (seen.insert(f).second) out.push_back(std::move(f));
      }
    } else if (seen.insert(p).second) {
      out.push_back(p);
    }
  }
  return out;
}

RunReport run_first_pass(const JobConfig& config, std::ostream* progress) {
  config.validate();
  const auto start = Clock::now();
  const std::vector<fs::path> files = expand_inputs(config.input_paths);
  if (files.empty()) throw Error(ErrorCode::kConfig, "input paths contain no files");

  fs::create_directories(config.output_dir);
  if (config.index_dir) fs::create_directories(*config.index_dir);
  const fs::path scratch = scratch_dir(config.output_dir);
  fs::create_directories(scratch);
  const fs::path manifest_path = config.output_dir / "manifest.json";
  fs::remove(manifest_path);

  const std::size_t shards = std::min(config.shard_count, files.size());
  std::vector<ShardResult> results(shards);
  std::vector<std::exception_ptr> failures(shards);
  std::atomic<bool> abort{false};
  std::mutex progress_mutex;

  auto worker = [&](std::size_t shard) {
    ShardResult& result = results[shard];
    try {
      std::vector<ScoredDocument> kept;
      for (std::size_t file_index = shard; file_index < files.size(); file_index += shards) {
        if (abort) return;
        const fs::path& file = files[file_index];
        std::ifstream in(file, std::ios::binary);
        if (!in) {
          ++result.files_skipped;
          result.warnings.push_back("skipped unreadable input " + file.string());
          std::lock_guard lock(progress_mutex);
          std::cerr << "warning: skipping unreadable input " << file << '\n';
          continue;
        }
        std::vector<char> buffer(1 << 20);
        in.rdbuf()->pubsetbuf(buffer.data(), static_cast<std::streamsize>(buffer.size()));

        std::optional<index::IndexWriter> writer;
        if (config.index_dir) {
          char prefix[16];
          std::snprintf(prefix, sizeof prefix, "%06llu-",
                        static_cast<unsigned long long>(config.first_file_ordinal + file_index));
          writer.emplace(*config.index_dir / (prefix + file.filename().string() + ".idx"),
                         file.string(), config.filter.score);
        }
        warc::WetReader reader(in, (config.first_file_ordinal + file_index) << kFileIdShift);
        TypeSet types;
        while (auto doc = reader.next()) {
          bool passed = false;
          const bool index_all = writer && config.filter.cache_vocabularies == IndexMode::kAll;
          auto scored = filter_document(*doc, config.filter, &result.counters,
                                        index_all ? &types : nullptr, &passed);
          if (writer && passed && !index_all) types = tokenize(doc->text, config.filter.score);
          if (writer && (passed || index_all)) writer->add(*doc, types);
          if (scored) kept.push_back(std::move(*scored));
          if (progress && config.stats_interval &&
              result.counters.documents % config.stats_interval == 0) {
            std::lock_guard lock(progress_mutex);
            *progress << "[shard " << shard << "] documents=" << result.counters.documents
                      << " kept=" << result.counters.kept << '\n';
          }
          if (abort) return;
        }
        if (writer) writer->finish();
        result.ingest += reader.stats();
      }

      for (const auto& target : config.filter.targets) {
        const std::string& lang = target->language_code();
        std::vector<const ScoredDocument*> mine;
        for (const ScoredDocument& d : kept) {
          if (d.wsc_for(lang) >= config.filter.threshold) mine.push_back(&d);
        }
        std::sort(mine.begin(), mine.end(), [&](const ScoredDocument* a, const ScoredDocument* b) {
          return ranks_before(*a, *b, lang);
        });
        result.kept_per_language[lang] = mine.size();

        const fs::path run = scratch / (lang + ".docs." + std::to_string(shard));
        std::ofstream out = open_output(run);
        for (const ScoredDocument* d : mine) {
          out << d->wsc_for(lang) << '\t' << d->id << '\t' << jsonl::to_line(*d) << '\n';
        }
        close_output(out, run);
        result.doc_runs[lang] = run;

        if (config.emit_lines) {
          std::vector<RankedLine> lines;
          for (const ScoredDocument* d : mine) {
            auto ranked = rank_lines(*d, *target, config.min_line_len, config.filter.score);
            std::move(ranked.begin(), ranked.end(), std::back_inserter(lines));
          }
          sort_lines(lines);
          const fs::path line_run = scratch / (lang + ".lines." + std::to_string(shard));
          std::ofstream lout = open_output(line_run);
          for (const RankedLine& l : lines) {
            lout << l.matches << '\t' << l.length << '\t' << l.doc_id << '\t' << l.line_no << '\t'
                 << jsonl::to_line(l) << '\n';
          }
          close_output(lout, line_run);
          result.line_runs[lang] = line_run;
        }
      }
    } catch (...) {
      failures[shard] = std::current_exception();
      abort = true;
    }
  };

  {
    std::vector<std::jthread> threads;
    threads.reserve(shards);
    for (std::size_t s = 0; s < shards; ++s) threads.emplace_back(worker, s);
  }

  RunReport report;
  report.cores = static_cast<unsigned>(shards);
  FilterCounters counters;
  warc::IngestStats ingest;
  for (const ShardResult& r : results) {
    counters += r.counters;
    ingest += r.ingest;
    report.files_skipped += r.files_skipped;
    report.warnings.insert(report.warnings.end(), r.warnings.begin(), r.warnings.end());
    for (const auto& [lang, n] : r.kept_per_language) report.documents_kept[lang] += n;
  }
  report.documents_scanned = ingest.records_read;
  report.documents_kept_total = counters.kept;
  report.bytes_scanned = ingest.bytes_read;
  report.below_threshold = counters.below_threshold;
  report.blacklisted = counters.blacklisted;
  report.parse_skipped = ingest.records_skipped;
  report.blacklist_evaluations = counters.blacklist_evaluations;
  report.decode_replacements = ingest.decode_replacements;

  for (const auto& failure : failures) {
    if (!failure) continue;
    std::string message = "unknown error";
    try {
      std::rethrow_exception(failure);
    } catch (const std::exception& e) {
      message = e.what();
    }
    jsonl::Json manifest;
    manifest["status"] = "failed";
    manifest["error"] = message;
    manifest["partial_runs"] = scratch.string();
    manifest["config"] = config_json(config);
    report.wall_time = seconds_since(start);
    manifest["report"] = report.to_json();
    write_json_file(manifest_path, manifest);
    std::rethrow_exception(failure);
  }

  // Merge shard runs into the global rankings.
  for (const auto& target : config.filter.targets) {
    const std::string& lang = target->language_code();
    std::vector<fs::path> runs;
    for (const ShardResult& r : results) runs.push_back(r.doc_runs.at(lang));
    const fs::path out_path = config.output_dir / (lang + ".jsonl");
    std::ofstream out = open_output(out_path);
    merge_runs<DocKey>(runs, doc_key,
                       [&](const std::string& line) { out << payload_after(line, 2) << '\n'; });
    close_output(out, out_path);

    if (config.emit_lines) {
      fs::create_directories(config.output_dir / "lines");
      std::vector<fs::path> line_runs;
      for (const ShardResult& r : results) line_runs.push_back(r.line_runs.at(lang));
      const fs::path lines_path = config.output_dir / "lines" / (lang + ".jsonl");
      std::ofstream lout = open_output(lines_path);
      std::vector<RankedLine> group;
      auto flush_group = [&] {
        for (const RankedLine& l : cluster_duplicates(std::move(group))) {
          lout << jsonl::to_line(l) << '\n';
          ++report.lines_emitted;
        }
        group.clear();
      };
      merge_runs<LineKey>(line_runs, line_key, [&](const std::string& raw) {
        RankedLine line = jsonl::ranked_line_from_json(jsonl::Json::parse(payload_after(raw, 4)));
        if (!group.empty() && !same_norm_score(group.front(), line)) flush_group();
        group.push_back(std::move(line));
      });
      flush_group();
      close_output(lout, lines_path);
    }
  }
  fs::remove_all(scratch);

  report.wall_time = seconds_since(start);
  const double core_seconds = report.cores * std::max(report.wall_time, 1e-9);
  report.docs_per_core_second = static_cast<double>(report.documents_scanned) / core_seconds;
  report.bytes_per_core_second = static_cast<double>(report.bytes_scanned) / core_seconds;

  jsonl::Json manifest;
  manifest["status"] = "complete";
  manifest["config"] = config_json(config);
  manifest["report"] = report.to_json();
  write_json_file(manifest_path, manifest);
  return report;
}

jsonl::Json SecondPassReport::to_json() const {
  jsonl::Json j;
  j["seen"] = seen;
  j["loaded"] = loaded;
  j["below_loading_threshold"] = below_loading_threshold;
  j["dropped"] = dropped;
  j["survivors"] = survivors;
  j["wall_time"] = wall_time;
  return j;
}

SecondPassReport run_second_pass(const fs::path& input,
                                 const second_pass::SecondPassConfig& config,
                                 const fs::path& out_dir) {
  config.validate();
  const auto start = Clock::now();
  std::vector<fs::path> sources;
  if (fs::is_directory(input)) {
    const fs::path manifest_path = input / "manifest.json";
    if (fs::exists(manifest_path)) {
      std::ifstream in(manifest_path);
      const auto manifest = jsonl::Json::parse(in, nullptr, false);
      if (manifest.is_discarded()) {
        throw Error(ErrorCode::kFormat, "unreadable manifest " + manifest_path.string());
      }
      if (manifest.value("status", std::string()) != "complete") {
        throw Error(ErrorCode::kConfig, "first pass in " + input.string() + " did not complete");
      }
      const auto threshold = manifest.at("config").at("threshold").get<std::uint32_t>();
      if (config.loading_threshold < threshold) {
        throw Error(ErrorCode::kConfig, "loading_threshold " + std::to_string(config.loading_threshold) +
                                            " is below the first-pass threshold " +
                                            std::to_string(threshold));
      }
    }
    const fs::path corpus = input / (config.target + ".jsonl");
    if (fs::exists(corpus)) {
      sources.push_back(corpus);
    } else {
      for (const auto& entry : fs::directory_iterator(input)) {
        if (entry.is_regular_file() && entry.path().extension() == ".idx") {
          sources.push_back(entry.path());
        }
      }
      std::sort(sources.begin(), sources.end());
    }
    if (sources.empty()) {
      throw Error(ErrorCode::kIo, "no corpus for '" + config.target + "' or index in " + input.string());
    }
  } else {
    sources.push_back(input);
  }

  SecondPassReport report;
  std::vector<second_pass::DropRecord> audit;
  std::vector<second_pass::Candidate> candidates;
  for (const fs::path& source : sources) {
    second_pass::LoadStats stats;
    auto loaded = second_pass::load_candidates(source, config, &audit, &stats);
    report.seen += stats.seen;
    report.loaded += stats.loaded;
    report.below_loading_threshold += stats.below_loading_threshold;
    std::move(loaded.begin(), loaded.end(), std::back_inserter(candidates));
  }
  std::sort(candidates.begin(), candidates.end(),
            [&](const second_pass::Candidate& a, const second_pass::Candidate& b) {
              return ranks_before(a.doc, b.doc, config.target);
            });

  candidates = second_pass::apply_filters(std::move(candidates), config, &audit);
  for (const auto& drop : audit) {
    if (drop.reason != "loading_threshold") ++report.dropped[drop.reason];
  }
  report.survivors = candidates.size();

  fs::create_directories(out_dir);
  const fs::path corpus_path = out_dir / (config.target + ".jsonl");
  std::ofstream out = open_output(corpus_path);
  for (const auto& c : candidates) out << jsonl::to_line(c.doc) << '\n';
  close_output(out, corpus_path);

  const fs::path audit_path = out_dir / "audit.tsv";
  std::ofstream aout = open_output(audit_path);
  for (const auto& drop : audit) aout << drop.id << '\t' << drop.reason << '\n';
  close_output(aout, audit_path);

  report.wall_time = seconds_since(start);
  jsonl::Json manifest;
  manifest["status"] = "complete";
  manifest["target"] = config.target;
  manifest["loading_threshold"] = config.loading_threshold;
  jsonl::Json order = jsonl::Json::array();
  for (auto stage : config.order) order.push_back(std::string(second_pass::stage_name(stage)));
  manifest["order"] = std::move(order);
  manifest["report"] = report.to_json();
  write_json_file(out_dir / "manifest.json", manifest);
  return report;
}

}  // namespace langmine::pipeline
