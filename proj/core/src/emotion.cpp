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

#include "emograph/emotion.hpp"

#include <string>

#include "emograph/errors.hpp"

namespace emograph {

EmotionLabel emotion_from_index(int index) {
  switch (index) {
    case 0: return EmotionLabel::Positive;
    case 1: return EmotionLabel::Neutral;
    case 2: return EmotionLabel::Negative;
    default:
      throw ArgumentError("emotion class index out of range: " +
                          std::to_string(index));
  }
}

std::string_view to_string(EmotionLabel label) noexcept {
  switch (label) {
    case EmotionLabel::Positive: return "positive";
    case EmotionLabel::Neutral: return "neutral";
    case EmotionLabel::Negative: return "negative";
  }
  return "neutral";
}

EmotionLabel emotion_from_string(std::string_view text) {
  if (text == "positive") return EmotionLabel::Positive;
  if (text == "neutral") return EmotionLabel::Neutral;
  if (text == "negative") return EmotionLabel::Negative;
  throw ParseError("unknown emotion label: '" + std::string(text) + "'");
}

}  // namespace emograph
