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

#ifndef LANGMINE_JSONL_HPP_
#define LANGMINE_JSONL_HPP_

#include "json.hpp"
#include <string>
#include <string_view>

#include "langmine/doc_filter.hpp"
#include "langmine/line_ranker.hpp"

// JSON-lines encodings of the ranked outputs:
//   documents: {"id","uri","lang","wsc","bsc","text"}
//   lines:     {"doc_id","line_no","norm_score","matches","dup_count","text"}
namespace langmine::jsonl {

using Json = nlohmann::ordered_json;

Json to_json(const ScoredDocument& doc);
std::string to_line(const ScoredDocument& doc);

// Throws Error(kFormat) on missing or mistyped fields.
ScoredDocument scored_document_from_json(const Json& j);
ScoredDocument parse_scored_document(std::string_view line);

Json to_json(const RankedLine& line);
std::string to_line(const RankedLine& line);
RankedLine ranked_line_from_json(const Json& j);

}  // namespace langmine::jsonl

#endif  // LANGMINE_JSONL_HPP_
