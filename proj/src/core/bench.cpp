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

#include "langmine/bench.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <numeric>
#include <thread>
#include <unordered_set>

#include "langmine/error.hpp"
#include "langmine/jsonl.hpp"
#include "langmine/unicode.hpp"

namespace langmine::bench {
namespace {

constexpr std::string_view kOnsets[] = {"",  "b", "d", "f", "g", "k", "l",  "m", "n",
                                        "p", "r", "s", "t", "v", "z", "ch", "j"};
constexpr std::string_view kNuclei[] = {"a", "e", "i", "o", "ou", "an", "on", "è", "é", "ò"};

std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

std::vector<std::size_t> sample_indices(std::size_t population, std::size_t count,
                                        std::mt19937_64& rng) {
  std::vector<std::size_t> idx(population);
  std::iota(idx.begin(), idx.end(), 0);
  std::shuffle(idx.begin(), idx.end(), rng);
  idx.resize(count);
  return idx;
}

}  // namespace

std::string_view gold_name(Gold gold) { return gold == Gold::kNeedle ? "needle" : "hay"; }

BenchmarkCorpus build_benchmark(std::span<const warc::Document> needle_source,
                                std::span<const warc::Document> hay_source,
                                std::size_t needle_count, std::size_t hay_count,
                                std::optional<std::string> skip_word, std::uint64_t seed) {
  BenchmarkCorpus corpus;
  corpus.skip_word = skip_word;
  corpus.seed = seed;

  std::vector<std::size_t> eligible_hay;
  eligible_hay.reserve(hay_source.size());
  const std::string folded_skip = skip_word ? text::fold_case(*skip_word) : std::string();
  for (std::size_t i = 0; i < hay_source.size(); ++i) {
    if (!folded_skip.empty() &&
        text::fold_case(hay_source[i].text).find(folded_skip) != std::string::npos) {
      ++corpus.skipped_hay;
      continue;
    }
    eligible_hay.push_back(i);
  }

  if (needle_source.size() < needle_count) {
    throw Error(ErrorCode::kInvalidArgument,
                "needle source has " + std::to_string(needle_source.size()) + " documents, " +
                    std::to_string(needle_count) + " requested (short by " +
                    std::to_string(needle_count - needle_source.size()) + ")");
  }
  if (eligible_hay.size() < hay_count) {
    throw Error(ErrorCode::kInvalidArgument,
                "hay source has " + std::to_string(eligible_hay.size()) +
                    " usable documents, " + std::to_string(hay_count) + " requested (short by " +
                    std::to_string(hay_count - eligible_hay.size()) + ")");
  }

  std::mt19937_64 rng(seed);
  for (std::size_t i : sample_indices(needle_source.size(), needle_count, rng)) {
    corpus.documents.push_back({needle_source[i], Gold::kNeedle});
  }
  for (std::size_t i : sample_indices(eligible_hay.size(), hay_count, rng)) {
    corpus.documents.push_back({hay_source[eligible_hay[i]], Gold::kHay});
  }
  std::shuffle(corpus.documents.begin(), corpus.documents.end(), rng);
  for (std::size_t i = 0; i < corpus.documents.size(); ++i) corpus.documents[i].doc.id = i;
  corpus.needle_count = needle_count;
  corpus.hay_count = hay_count;
  return corpus;
}

std::vector<BenchResult> run_benchmark(const BenchmarkCorpus& corpus, FilterConfig config,
                                       std::string_view target,
                                       std::span<const std::uint32_t> thresholds,
                                       unsigned repeats, unsigned threads) {
  repeats = std::max(1u, repeats);
  threads = std::max(1u, threads);
  std::vector<BenchResult> results;
  const auto& docs = corpus.documents;

  auto count_range = [&](std::size_t begin, std::size_t end, std::uint64_t* tp, std::uint64_t* fp) {
    for (std::size_t i = begin; i < end; ++i) {
      const auto kept = filter_document(docs[i].doc, config);
      if (!kept || kept->wsc_for(target) < config.threshold) continue;
      ++(docs[i].gold == Gold::kNeedle ? *tp : *fp);
    }
  };

  for (std::uint32_t threshold : thresholds) {
    config.threshold = threshold;
    config.validate();
    BenchResult result;
    result.threshold = threshold;
    double total_seconds = 0.0;
    for (unsigned r = 0; r < repeats; ++r) {
      std::uint64_t tp = 0, fp = 0;
      const auto start = std::chrono::steady_clock::now();
      if (threads == 1) {
        count_range(0, docs.size(), &tp, &fp);
      } else {
        std::vector<std::uint64_t> tps(threads), fps(threads);
        std::vector<std::thread> workers;
        const std::size_t chunk = (docs.size() + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
          const std::size_t begin = std::min(docs.size(), t * chunk);
          const std::size_t end = std::min(docs.size(), begin + chunk);
          workers.emplace_back(count_range, begin, end, &tps[t], &fps[t]);
        }
        for (auto& w : workers) w.join();
        tp = std::accumulate(tps.begin(), tps.end(), std::uint64_t{0});
        fp = std::accumulate(fps.begin(), fps.end(), std::uint64_t{0});
      }
      total_seconds +=
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      result.true_positives = tp;
      result.false_positives = fp;
    }
    result.wall_time = total_seconds / repeats;
    result.recall_pct = corpus.needle_count == 0
                            ? 0.0
                            : 100.0 * static_cast<double>(result.true_positives) /
                                  static_cast<double>(corpus.needle_count);
    result.fpr_pct = corpus.hay_count == 0
                         ? 0.0
                         : 100.0 * static_cast<double>(result.false_positives) /
                               static_cast<double>(corpus.hay_count);
    results.push_back(result);
  }
  return results;
}

std::size_t PlantingSchedule::needle_count() const {
  std::size_t n = 0;
  for (const auto& [k, count] : needle_histogram) n += count;
  return n;
}

std::size_t PlantingSchedule::hay_count() const {
  std::size_t n = 0;
  for (const auto& [k, count] : hay_histogram) n += count;
  return n;
}

PlantingSchedule calibrated_schedule() {
  PlantingSchedule schedule;
  // Symmetric around 8, 2 of 200 needles carry no whitelist type at all.
  schedule.needle_histogram = {{0, 2},   {1, 2},   {2, 4},   {3, 8},   {4, 12},  {5, 16},
                               {6, 20},  {7, 22},  {8, 24},  {9, 22},  {10, 20}, {11, 16},
                               {12, 12}, {13, 8},  {14, 6},  {15, 4},  {16, 2}};
  schedule.hay_histogram = {{0, 8500}, {1, 900}, {2, 250}, {3, 100}, {4, 30},
                            {5, 12},   {6, 5},   {7, 2},   {8, 1}};
  return schedule;
}

std::vector<std::string> make_vocabulary(std::size_t count, std::mt19937_64& rng,
                                         const std::vector<std::string>& exclude) {
  std::unordered_set<std::string> taken(exclude.begin(), exclude.end());
  std::vector<std::string> words;
  words.reserve(count);
  std::size_t attempts = 0;
  while (words.size() < count) {
    if (++attempts > count * 1000 + 10000) {
      throw Error(ErrorCode::kInvalidArgument, "vocabulary space exhausted");
    }
    const std::size_t syllables = 2 + uniform_index(rng, 3);
    std::string word;
    for (std::size_t s = 0; s < syllables; ++s) {
      word += kOnsets[uniform_index(rng, std::size(kOnsets))];
      word += kNuclei[uniform_index(rng, std::size(kNuclei))];
    }
    const std::size_t len = text::scalar_length(word);
    if (len < 3 || len > 9) continue;
    if (taken.insert(word).second) words.push_back(std::move(word));
  }
  return words;
}

std::string make_document_text(std::size_t tokens, std::span<const std::string> filler,
                               std::span<const std::string> types, std::uint32_t planted,
                               std::mt19937_64& rng) {
  if (planted > types.size()) {
    throw Error(ErrorCode::kInvalidArgument, "cannot plant more types than the list holds");
  }
  std::vector<std::string> words;
  const std::size_t filler_tokens = tokens > planted ? tokens - planted : 0;
  words.reserve(filler_tokens + planted + 1);
  for (std::size_t i = 0; i < filler_tokens; ++i) {
    std::string w = filler[uniform_index(rng, filler.size())];
    const std::size_t roll = uniform_index(rng, 12);
    if (roll == 0) w += ',';
    if (roll == 1) w += '.';
    words.push_back(std::move(w));
  }
  std::vector<std::string> chosen;
  std::sample(types.begin(), types.end(), std::back_inserter(chosen), planted, rng);
  for (std::string& type : chosen) {
    const std::size_t at = uniform_index(rng, words.size() + 1);
    words.insert(words.begin() + static_cast<std::ptrdiff_t>(at), type);
  }
  // One repeated planted type; repetition must not change any score.
  if (!chosen.empty() && uniform_index(rng, 2) == 0) {
    words.push_back(chosen.front());
  }

  std::string out;
  std::size_t line_left = 8 + uniform_index(rng, 9);
  bool line_start = true;
  for (std::size_t i = 0; i < words.size(); ++i) {
    std::string& w = words[i];
    if (line_start && !w.empty() && w[0] >= 'a' && w[0] <= 'z') w[0] = static_cast<char>(w[0] - 32);
    out += w;
    line_start = false;
    if (i + 1 == words.size()) break;
    if (--line_left == 0) {
      out += '\n';
      line_left = 8 + uniform_index(rng, 9);
      line_start = true;
    } else {
      out += ' ';
    }
  }
  return out;
}

SyntheticBenchmark make_synthetic_benchmark(const PlantingSchedule& schedule,
                                            std::uint64_t seed,
                                            const std::string& language_code) {
  std::mt19937_64 rng(seed);
  SyntheticBenchmark out;
  const std::vector<std::string> types = make_vocabulary(schedule.whitelist_size, rng);
  out.filler = make_vocabulary(schedule.filler_vocabulary, rng, types);
  out.whitelist = std::make_shared<const Lexicon>(language_code, ListKind::kWhitelist,
                                                  kDefaultMinTypeLen, types);

  std::vector<std::pair<Gold, std::uint32_t>> plan;
  for (const auto& [k, count] : schedule.needle_histogram) {
    plan.insert(plan.end(), count, {Gold::kNeedle, k});
  }
  for (const auto& [k, count] : schedule.hay_histogram) {
    plan.insert(plan.end(), count, {Gold::kHay, k});
  }
  std::shuffle(plan.begin(), plan.end(), rng);

  BenchmarkCorpus& corpus = out.corpus;
  corpus.seed = seed;
  corpus.needle_count = schedule.needle_count();
  corpus.hay_count = schedule.hay_count();
  corpus.documents.reserve(plan.size());
  out.planted.reserve(plan.size());
  for (std::size_t i = 0; i < plan.size(); ++i) {
    const auto [gold, k] = plan[i];
    LabeledDocument labeled;
    labeled.gold = gold;
    labeled.doc.id = i;
    labeled.doc.uri = "https://synthetic.example/doc/" + std::to_string(i);
    if (gold == Gold::kHay) labeled.doc.crawler_lang = {"fra"};
    labeled.doc.text = make_document_text(schedule.tokens_per_doc, out.filler, types, k, rng);
    labeled.doc.byte_len = labeled.doc.text.size();
    corpus.documents.push_back(std::move(labeled));
    out.planted.push_back(k);
  }
  return out;
}

std::uint64_t write_synthetic_wet(std::ostream& out, std::uint64_t target_bytes,
                                  std::size_t tokens_per_doc,
                                  std::span<const std::string> filler,
                                  std::span<const std::string> types, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  out << "WARC/1.0\r\nWARC-Type: warcinfo\r\nContent-Length: 0\r\n\r\n\r\n\r\n";
  std::uint64_t bytes = 0;
  std::uint64_t records = 0;
  while (bytes < target_bytes) {
    // About 1% of pages carry a real cluster of target types.
    const bool needle = uniform_index(rng, 100) == 0;
    const auto planted = static_cast<std::uint32_t>(
        needle ? 5 + uniform_index(rng, 16) : uniform_index(rng, 3));
    const std::string body = make_document_text(tokens_per_doc, filler, types,
                                                std::min<std::uint32_t>(planted, types.size()), rng);
    warc::write_conversion_record(out, "https://synthetic.example/page/" + std::to_string(records),
                                  needle ? "" : "fra", body);
    bytes += body.size();
    ++records;
  }
  return records;
}

std::vector<warc::Document> read_documents(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  std::string first;
  std::getline(in, first);
  in.clear();
  in.seekg(0);
  if (first.starts_with("WARC/")) return warc::read_wet_stream(in);

  std::vector<warc::Document> docs;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    jsonl::Json j;
    try {
      j = jsonl::Json::parse(line);
    } catch (const jsonl::Json::exception& e) {
      throw Error(ErrorCode::kFormat, "bad JSON in " + path.string() + ": " + e.what());
    }
    if (!j.contains("text") || !j["text"].is_string()) {
      throw Error(ErrorCode::kFormat, "record without text field in " + path.string());
    }
    warc::Document doc;
    doc.id = docs.size();
    doc.text = j["text"].get<std::string>();
    doc.byte_len = doc.text.size();
    doc.decode_replacements = text::sanitize_utf8(doc.text);
    if (j.contains("uri") && j["uri"].is_string()) doc.uri = j["uri"].get<std::string>();
    if (j.contains("lang")) {
      if (j["lang"].is_array()) {
        doc.crawler_lang = j["lang"].get<std::vector<std::string>>();
      } else if (j["lang"].is_string()) {
        doc.crawler_lang = warc::parse_language_tags(j["lang"].get<std::string>());
      }
    }
    docs.push_back(std::move(doc));
  }
  return docs;
}

void write_corpus_jsonl(const BenchmarkCorpus& corpus, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  for (const LabeledDocument& d : corpus.documents) {
    jsonl::Json j;
    j["gold"] = gold_name(d.gold);
    j["text"] = d.doc.text;
    out << j.dump(-1, ' ', false, jsonl::Json::error_handler_t::replace) << '\n';
  }
  out.flush();
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
}

void write_results_csv(std::span<const BenchResult> results, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << "threshold,true_positives,false_positives,recall_pct,fpr_pct,wall_time\n";
  out.setf(std::ios::fixed);
  for (const BenchResult& r : results) {
    out.precision(4);
    out << r.threshold << ',' << r.true_positives << ',' << r.false_positives << ','
        << r.recall_pct << ',' << r.fpr_pct << ',';
    out.precision(6);
    out << r.wall_time << '\n';
  }
  out.flush();
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
}

}  // namespace langmine::bench
