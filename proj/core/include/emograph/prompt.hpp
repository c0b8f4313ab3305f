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

#ifndef EMOGRAPH_PROMPT_HPP_
#define EMOGRAPH_PROMPT_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include "emograph/graph.hpp"

namespace emograph {

// Everything a provider needs to produce one reply on behalf of the
// receiver. render() is a pure function of the fields, so identical inputs
// yield identical prompt text and hash.
struct Prompt {
  std::string system_preamble;
  NodeId sender_id;
  EmotionLabel sender_emotion = EmotionLabel::Neutral;
  double sender_credibility = 0.0;
  NodeId receiver_id;
  double receiver_susceptibility = 0.0;
  EdgeKind edge_kind = EdgeKind::Reply;
  int thread_position = 1;
  EmotionLabel tone = EmotionLabel::Neutral;
  std::string instruction;

  std::string render() const;
  // FNV-1a 64-bit hash of render(), lowercase hex.
  std::string hash() const;
};

// Fixed instruction template per requested tone.
std::string_view tone_instruction(EmotionLabel tone) noexcept;

// Deterministic prompt from node and interaction metadata. The thread
// position is the round the reply would occur in (sender activation + 1).
Prompt build_prompt(const NodeState& sender, const NodeState& receiver,
                    const Edge& edge, EmotionLabel tone);

std::uint64_t fnv1a64(std::string_view text) noexcept;

}  // namespace emograph

#endif  // EMOGRAPH_PROMPT_HPP_
