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

#ifndef EMOGRAPH_EMOTION_HPP_
#define EMOGRAPH_EMOTION_HPP_

#include <array>
#include <string_view>

namespace emograph {

// The three emotional states a user can hold or transmit.
enum class EmotionLabel { Positive, Neutral, Negative };

inline constexpr std::array<EmotionLabel, 3> kEmotionLabels = {
    EmotionLabel::Positive, EmotionLabel::Neutral, EmotionLabel::Negative};

// Fixed numeric encoding: positive=+1.0, neutral=0.0, negative=-1.0.
constexpr double emotion_value(EmotionLabel label) noexcept {
  switch (label) {
    case EmotionLabel::Positive: return 1.0;
    case EmotionLabel::Neutral: return 0.0;
    case EmotionLabel::Negative: return -1.0;
  }
  return 0.0;
}

// Class index used by feature matrices, label vectors and share arrays:
// positive=0, neutral=1, negative=2.
constexpr int emotion_index(EmotionLabel label) noexcept {
  switch (label) {
    case EmotionLabel::Positive: return 0;
    case EmotionLabel::Neutral: return 1;
    case EmotionLabel::Negative: return 2;
  }
  return 1;
}

EmotionLabel emotion_from_index(int index);

std::string_view to_string(EmotionLabel label) noexcept;

// Throws ParseError on anything but "positive", "neutral", "negative".
EmotionLabel emotion_from_string(std::string_view text);

}  // namespace emograph

#endif  // EMOGRAPH_EMOTION_HPP_
