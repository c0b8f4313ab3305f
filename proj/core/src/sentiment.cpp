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

#include "emograph/sentiment.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <sstream>
#include <vector>

#include "emograph/embedded_data.hpp"
#include "emograph/errors.hpp"
#include "emograph/graph_io.hpp"

namespace emograph {

namespace {

constexpr std::array<std::string_view, 24> kNegators = {
    "not",    "no",      "never",   "neither",  "nor",      "nobody",
    "none",   "cannot",  "cant",    "dont",     "doesnt",   "isnt",
    "wasnt",  "werent",  "wont",    "wouldnt",  "couldnt",  "shouldnt",
    "aint",   "didnt",   "hasnt",   "havent",   "hadnt",    "without"};

constexpr std::array<std::string_view, 18> kIntensifiers = {
    "very",         "really",     "extremely",  "so",
    "too",          "absolutely", "completely", "incredibly",
    "totally",      "utterly",    "especially", "particularly",
    "remarkably",   "deeply",     "amazingly",  "exceptionally",
    "hugely",       "immensely"};

bool is_negator(const std::string& token) {
  if (std::find(kNegators.begin(), kNegators.end(), token) != kNegators.end())
    return true;
  // Contractions keep their apostrophe through trimming: "don't", "isn't".
  return token.size() > 3 && token.ends_with("n't");
}

bool is_intensifier(const std::string& token) {
  return std::find(kIntensifiers.begin(), kIntensifiers.end(), token) !=
         kIntensifiers.end();
}

struct Token {
  std::string normalized;  // lowercase, outer punctuation trimmed
  bool all_caps = false;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() &&
           std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    std::size_t start = i;
    while (i < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    if (i == start) break;
    std::string_view raw = text.substr(start, i - start);

    // Trim leading/trailing characters that are neither alphanumeric nor
    // apostrophes, so "good!" and "(good)" match the lexicon entry.
    std::size_t lo = 0;
    std::size_t hi = raw.size();
    auto keep = [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '\'';
    };
    while (lo < hi && !keep(raw[lo])) ++lo;
    while (hi > lo && !keep(raw[hi - 1])) --hi;
    if (lo >= hi) continue;
    raw = raw.substr(lo, hi - lo);

    Token token;
    int letters = 0;
    int uppercase = 0;
    for (char c : raw) {
      if (std::isalpha(static_cast<unsigned char>(c))) {
        ++letters;
        if (std::isupper(static_cast<unsigned char>(c))) ++uppercase;
      }
      token.normalized.push_back(
          static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    token.all_caps = letters >= 2 && letters == uppercase;
    tokens.push_back(std::move(token));
  }
  return tokens;
}

}  // namespace

SentimentClassifier::SentimentClassifier()
    : SentimentClassifier(from_tsv(detail::kSentimentLexiconTsv)) {}

SentimentClassifier SentimentClassifier::from_file(
    const std::filesystem::path& path) {
  return from_tsv(read_text_file(path));
}

SentimentClassifier SentimentClassifier::from_tsv(std::string_view tsv) {
  SentimentClassifier classifier{Unloaded{}};
  std::istringstream in{std::string(tsv)};
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty() || line[0] == '#') continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0)
      throw ParseError("lexicon line " + std::to_string(line_number) +
                       " is not 'token<TAB>valence'");
    const std::string token = line.substr(0, tab);
    try {
      classifier.lexicon_[token] = std::stod(line.substr(tab + 1));
    } catch (const std::exception&) {
      throw ParseError("lexicon line " + std::to_string(line_number) +
                       " has a non-numeric valence");
    }
  }
  if (classifier.lexicon_.empty()) throw ParseError("lexicon is empty");
  return classifier;
}

double SentimentClassifier::compound_from_sum(double valence_sum) noexcept {
  return valence_sum /
         std::sqrt(valence_sum * valence_sum + kNormalizationConstant);
}

EmotionLabel SentimentClassifier::label_from_compound(
    double compound) noexcept {
  if (compound >= kPositiveThreshold) return EmotionLabel::Positive;
  if (compound <= -kPositiveThreshold) return EmotionLabel::Negative;
  return EmotionLabel::Neutral;
}

SentimentScore SentimentClassifier::classify(std::string_view text) const {
  const std::vector<Token> tokens = tokenize(text);

  int exclamations = 0;
  for (char c : text) {
    if (c == '!') ++exclamations;
  }
  exclamations = std::min(exclamations, kMaxExclamationBoosts);

  SentimentScore score;
  double sum = 0.0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    auto it = lexicon_.find(tokens[i].normalized);
    if (it == lexicon_.end()) continue;
    ++score.token_hits;
    double valence = it->second;

    bool negated = false;
    bool intensified = false;
    for (std::size_t back = 1; back <= kNegationWindow && back <= i; ++back) {
      const std::string& previous = tokens[i - back].normalized;
      negated = negated || is_negator(previous);
      intensified = intensified || is_intensifier(previous);
    }
    if (intensified) valence *= kIntensifierMultiplier;
    if (tokens[i].all_caps) valence *= kAllCapsMultiplier;
    if (negated) valence = -valence;
    sum += valence;
  }

  if (sum > 0.0) sum += kExclamationBoost * exclamations;
  if (sum < 0.0) sum -= kExclamationBoost * exclamations;

  score.compound = compound_from_sum(sum);
  score.label = label_from_compound(score.compound);
  return score;
}

}  // namespace emograph
