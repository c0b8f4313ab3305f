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

#ifndef EMOGRAPH_SENTIMENT_HPP_
#define EMOGRAPH_SENTIMENT_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>

#include "emograph/emotion.hpp"

namespace emograph {

// Rule constants, frozen so scores are bit-stable across runs and platforms.
inline constexpr int kNegationWindow = 3;
inline constexpr double kIntensifierMultiplier = 1.293;
inline constexpr double kAllCapsMultiplier = 1.5;
inline constexpr double kExclamationBoost = 0.292;
inline constexpr int kMaxExclamationBoosts = 3;
inline constexpr double kNormalizationConstant = 15.0;
inline constexpr double kPositiveThreshold = 0.05;

struct SentimentScore {
  double compound = 0.0;  // in (-1, 1)
  EmotionLabel label = EmotionLabel::Neutral;
  int token_hits = 0;     // lexicon matches
};

// Deterministic lexicon classifier. Scoring rules, applied per token in
// order: lexicon valence, then the intensifier multiplier when any of the
// three preceding tokens is a booster, then the all-caps multiplier, then a
// sign flip when any of the three preceding tokens is a negator. The summed
// valence gains the exclamation boost (at most three '!' count) toward its
// own sign and is squashed to compound = s / sqrt(s^2 + 15). Labels cut at
// compound >= +0.05 (positive) and <= -0.05 (negative).
class SentimentClassifier {
 public:
  // Uses the bundled, embedded lexicon.
  SentimentClassifier();

  // Loads a lexicon in the bundled TSV format (token<TAB>valence, '#'
  // comments). Throws ParseError/IoError.
  static SentimentClassifier from_file(const std::filesystem::path& path);
  static SentimentClassifier from_tsv(std::string_view tsv);

  SentimentScore classify(std::string_view text) const;

  std::size_t lexicon_size() const { return lexicon_.size(); }
  bool has_token(const std::string& token) const {
    return lexicon_.contains(token);
  }

  static double compound_from_sum(double valence_sum) noexcept;
  static EmotionLabel label_from_compound(double compound) noexcept;

 private:
  struct Unloaded {};
  explicit SentimentClassifier(Unloaded) {}

  std::unordered_map<std::string, double> lexicon_;
};

}  // namespace emograph

#endif  // EMOGRAPH_SENTIMENT_HPP_
