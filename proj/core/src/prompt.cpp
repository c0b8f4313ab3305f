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

#include "emograph/prompt.hpp"

#include <cstdio>
#include <sstream>

namespace emograph {

namespace {

constexpr std::string_view kSystemPreamble =
    "You are simulating a social media user replying in an online "
    "discussion thread.";

std::string format_unit(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.2f", value);
  return buffer;
}

}  // namespace

std::string_view tone_instruction(EmotionLabel tone) noexcept {
  switch (tone) {
    case EmotionLabel::Positive:
      return "Write a reply that keeps an upbeat, positive tone.";
    case EmotionLabel::Neutral:
      return "Maintain a neutral tone in your reply.";
    case EmotionLabel::Negative:
      return "Write a reply with a critical, negative tone.";
  }
  return "Maintain a neutral tone in your reply.";
}

std::string Prompt::render() const {
  std::ostringstream out;
  out << system_preamble << "\n"
      << "Sender: emotion=" << to_string(sender_emotion)
      << " credibility=" << format_unit(sender_credibility) << "\n"
      << "Receiver: id=" << receiver_id
      << " susceptibility=" << format_unit(receiver_susceptibility) << "\n"
      << "Interaction: kind=" << to_string(edge_kind)
      << " position=" << thread_position << "\n"
      << "Instruction: " << instruction << "\n";
  return out.str();
}

std::string Prompt::hash() const {
  char buffer[17];
  std::snprintf(buffer, sizeof(buffer), "%016llx",
                static_cast<unsigned long long>(fnv1a64(render())));
  return buffer;
}

Prompt build_prompt(const NodeState& sender, const NodeState& receiver,
                    const Edge& edge, EmotionLabel tone) {
  Prompt prompt;
  prompt.system_preamble = std::string(kSystemPreamble);
  prompt.sender_id = sender.id;
  prompt.sender_emotion = sender.emotion;
  prompt.sender_credibility = sender.credibility.value_or(0.0);
  prompt.receiver_id = receiver.id;
  prompt.receiver_susceptibility = receiver.susceptibility.value_or(0.0);
  prompt.edge_kind = edge.kind;
  prompt.thread_position = sender.activation_round.value_or(0) + 1;
  prompt.tone = tone;
  prompt.instruction = std::string(tone_instruction(tone));
  return prompt;
}

std::uint64_t fnv1a64(std::string_view text) noexcept {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (char c : text) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

}  // namespace emograph
