// Copyright 2026 The Emograph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EMOGRAPH_TEXT_NORMALIZE_HPP_
#define EMOGRAPH_TEXT_NORMALIZE_HPP_

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace emograph {

// Lowercase alphabetic tokens with URLs, stopwords and inflection suffixes
// removed.
using NormalizedText = std::vector<std::string>;

// Fixed pipeline: strip URLs -> strip non-alphabetic characters ->
// lowercase -> tokenize on whitespace -> remove stopwords (bundled list) ->
// suffix-stem each token. A token whose stem lands on a stopword is dropped,
// which keeps the pipeline idempotent. Empty input yields an empty list.
NormalizedText normalize_text(std::string_view raw);

// Replaces http(s)://... and www.... runs with spaces.
std::string strip_urls(std::string_view text);

// Deterministic suffix stripper (first matching rule, applied once):
// sses->ss, ies->y, ied->y, edly->, ing->, ed->, ly->, es->, s-> with
// minimum-stem guards. Idempotent on its own outputs.
std::string stem_token(const std::string& token);

// Bundled stopword list.
const std::unordered_set<std::string>& stopword_set();

}  // namespace emograph

#endif  // EMOGRAPH_TEXT_NORMALIZE_HPP_
