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

#ifndef LANGMINE_BENCH_HPP_
#define LANGMINE_BENCH_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "langmine/doc_filter.hpp"
#include "langmine/lexicon.hpp"
#include "langmine/warc.hpp"

// Needle/hay benchmark corpora and threshold sweeps.
namespace langmine::bench {

enum class Gold { kNeedle, kHay };

std::string_view gold_name(Gold gold);

struct LabeledDocument {
  warc::Document doc;
  Gold gold = Gold::kHay;
};

struct BenchmarkCorpus {
  std::vector<LabeledDocument> documents;
  std::size_t needle_count = 0;
  std::size_t hay_count = 0;
  std::optional<std::string> skip_word;
  // Hay documents excluded because they contained skip_word.
  std::size_t skipped_hay = 0;
  std::uint64_t seed = 0;
};

// Samples needle_count needles and hay_count hay documents without
// replacement, excluding hay whose folded text contains the folded
// skip_word, then shuffles. Ids are reassigned in corpus order. Throws
// Error(kInvalidArgument) naming the deficit when a source runs short.
BenchmarkCorpus build_benchmark(std::span<const warc::Document> needle_source,
                                std::span<const warc::Document> hay_source,
                                std::size_t needle_count, std::size_t hay_count,
                                std::optional<std::string> skip_word, std::uint64_t seed);

struct BenchResult {
  std::uint32_t threshold = 0;
  std::uint64_t true_positives = 0;
  std::uint64_t false_positives = 0;
  double recall_pct = 0.0;
  double fpr_pct = 0.0;
  // Mean seconds per full pass over the corpus.
  double wall_time = 0.0;
};

// One doc-filter pass per threshold (and per repeat). A document counts as
// positive when it is kept and wsc[target] reaches the threshold. threads > 1
// splits the corpus across worker threads.
std::vector<BenchResult> run_benchmark(const BenchmarkCorpus& corpus, FilterConfig config,
                                       std::string_view target,
                                       std::span<const std::uint32_t> thresholds,
                                       unsigned repeats = 1, unsigned threads = 1);

// Histograms of planted distinct whitelist types per document.
struct PlantingSchedule {
  std::map<std::uint32_t, std::size_t> needle_histogram;
  std::map<std::uint32_t, std::size_t> hay_histogram;
  std::size_t whitelist_size = 400;
  std::size_t filler_vocabulary = 4000;
  std::size_t tokens_per_doc = 150;

  std::size_t needle_count() const;
  std::size_t hay_count() const;
};

// 200 needles averaging 8 planted types, 9,800 hay averaging well under 1,
// no hay document with 10 or more.
PlantingSchedule calibrated_schedule();

struct SyntheticBenchmark {
  BenchmarkCorpus corpus;
  std::shared_ptr<const Lexicon> whitelist;
  std::vector<std::string> filler;
  // Planted type count for corpus.documents[i].
  std::vector<std::uint32_t> planted;
};

SyntheticBenchmark make_synthetic_benchmark(const PlantingSchedule& schedule,
                                            std::uint64_t seed,
                                            const std::string& language_code = "gcr");

// Pronounceable lowercase pseudo-words of 3 to 9 letters, unique and
// disjoint from exclude.
std::vector<std::string> make_vocabulary(std::size_t count, std::mt19937_64& rng,
                                         const std::vector<std::string>& exclude = {});

// A document body of roughly `tokens` filler tokens with `planted` distinct
// types drawn from `types` mixed in. Planted types never carry punctuation.
std::string make_document_text(std::size_t tokens, std::span<const std::string> filler,
                               std::span<const std::string> types, std::uint32_t planted,
                               std::mt19937_64& rng);

// Writes conversion records until at least target_bytes of bodies have been
// emitted. Returns the number of records.
std::uint64_t write_synthetic_wet(std::ostream& out, std::uint64_t target_bytes,
                                  std::size_t tokens_per_doc,
                                  std::span<const std::string> filler,
                                  std::span<const std::string> types, std::uint64_t seed);

// Reads documents from a WET file or from JSONL with a "text" field (and
// optional "uri"/"lang").
std::vector<warc::Document> read_documents(const std::filesystem::path& path);

void write_corpus_jsonl(const BenchmarkCorpus& corpus, const std::filesystem::path& path);
void write_results_csv(std::span<const BenchResult> results, const std::filesystem::path& path);

}  // namespace langmine::bench

#endif  // LANGMINE_BENCH_HPP_
