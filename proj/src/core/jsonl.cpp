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

#include "langmine/jsonl.hpp"

#include "langmine/error.hpp"
#include "langmine/unicode.hpp"

namespace langmine::jsonl {
namespace {

std::string dump(const Json& j) {
  return j.dump(-1, ' ', false, Json::error_handler_t::replace);
}

Json parse(std::string_view line) {
  try {
    return Json::parse(line);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kFormat, std::string("bad JSON line: ") + e.what());
  }
}

}  // namespace

Json to_json(const ScoredDocument& doc) {
  Json j;
  j["id"] = doc.id;
  j["uri"] = doc.uri;
  j["lang"] = doc.crawler_lang;
  Json wsc = Json::object();
  for (const auto& [language, value] : doc.wsc) wsc[language] = value;
  j["wsc"] = std::move(wsc);
  j["bsc"] = doc.bsc;
  j["text"] = doc.text;
  return j;
}

std::string to_line(const ScoredDocument& doc) { return dump(to_json(doc)); }

ScoredDocument scored_document_from_json(const Json& j) {
  try {
    ScoredDocument doc;
    doc.id = j.at("id").get<std::uint64_t>();
    doc.uri = j.value("uri", std::string());
    if (j.contains("lang") && j.at("lang").is_array()) {
      doc.crawler_lang = j.at("lang").get<std::vector<std::string>>();
    }
    for (const auto& [language, value] : j.at("wsc").items()) {
      doc.wsc.emplace(language, value.get<std::uint32_t>());
    }
    doc.bsc = j.value("bsc", 0u);
    doc.text = j.value("text", std::string());
    return doc;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kFormat, std::string("bad document record: ") + e.what());
  }
}

ScoredDocument parse_scored_document(std::string_view line) {
  return scored_document_from_json(parse(line));
}

Json to_json(const RankedLine& line) {
  Json j;
  j["doc_id"] = line.doc_id;
  j["line_no"] = line.line_no;
  j["norm_score"] = line.norm_score;
  j["matches"] = line.matches;
  j["dup_count"] = line.dup_count;
  j["text"] = line.text;
  return j;
}

std::string to_line(const RankedLine& line) { return dump(to_json(line)); }

RankedLine ranked_line_from_json(const Json& j) {
  try {
    RankedLine line;
    line.doc_id = j.at("doc_id").get<std::uint64_t>();
    line.line_no = j.at("line_no").get<std::uint32_t>();
    line.norm_score = j.at("norm_score").get<double>();
    line.matches = j.at("matches").get<std::uint32_t>();
    line.dup_count = j.value("dup_count", 1u);
    line.text = j.at("text").get<std::string>();
    line.length = static_cast<std::uint32_t>(text::scalar_length(line.text));
    return line;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kFormat, std::string("bad line record: ") + e.what());
  }
}

}  // namespace langmine::jsonl
