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

#include "emograph/text_normalize.hpp"

#include <cctype>
#include <sstream>

#include "emograph/embedded_data.hpp"

namespace emograph {

namespace {

bool starts_with_ci(std::string_view text, std::size_t pos,
                    std::string_view prefix) {
  if (pos + prefix.size() > text.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(text[pos + i])) != prefix[i])
      return false;
  }
  return true;
}

struct StemRule {
  std::string_view suffix;
  std::string_view replacement;
  std::size_t min_stem;  // required length before the suffix
};

// First matching rule per pass; passes repeat until no rule fires, so the
// stemmer is idempotent by construction.
constexpr StemRule kStemRules[] = {
    {"sses", "ss", 2}, {"ies", "y", 1}, {"ied", "y", 1}, {"edly", "", 3},
    {"ing", "", 3},    {"ed", "", 3},   {"ly", "", 3},   {"es", "", 3},
    {"s", "", 3},
};

bool apply_one_rule(std::string& token) {
  for (const StemRule& rule : kStemRules) {
    if (token.size() < rule.suffix.size() + rule.min_stem) continue;
    if (!token.ends_with(rule.suffix)) continue;
    // Keep double-s words ("class", "caress") out of the plural rules.
    if ((rule.suffix == "s" || rule.suffix == "es") &&
        token.ends_with("ss"))
      continue;
    token.resize(token.size() - rule.suffix.size());
    token.append(rule.replacement);
    return true;
  }
  return false;
}

}  // namespace

std::string strip_urls(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    if (starts_with_ci(text, i, "http://") ||
        starts_with_ci(text, i, "https://") ||
        starts_with_ci(text, i, "www.")) {
      while (i < text.size() &&
             !std::isspace(static_cast<unsigned char>(text[i])))
        ++i;
      out.push_back(' ');
      continue;
    }
    out.push_back(text[i]);
    ++i;
  }
  return out;
}

std::string stem_token(const std::string& token) {
  std::string stem = token;
  while (apply_one_rule(stem)) {
  }
  return stem;
}

const std::unordered_set<std::string>& stopword_set() {
  static const std::unordered_set<std::string> stopwords = [] {
    std::unordered_set<std::string> words;
    std::istringstream in(detail::kStopwordsTxt);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line[0] != '#') words.insert(line);
    }
    return words;
  }();
  return stopwords;
}

NormalizedText normalize_text(std::string_view raw) {
  std::string text = strip_urls(raw);
  for (char& c : text) {
    if (std::isalpha(static_cast<unsigned char>(c))) {
      c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    } else {
      c = ' ';
    }
  }

  const auto& stopwords = stopword_set();
  NormalizedText tokens;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    if (stopwords.contains(token)) continue;
    std::string stemmed = stem_token(token);
    if (stemmed.empty() || stopwords.contains(stemmed)) continue;
    tokens.push_back(std::move(stemmed));
  }
  return tokens;
}

}  // namespace emograph
