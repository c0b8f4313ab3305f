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

#ifndef EMOGRAPH_LLM_DIFFUSION_HPP_
#define EMOGRAPH_LLM_DIFFUSION_HPP_

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "emograph/graph.hpp"
#include "emograph/provider.hpp"
#include "emograph/sentiment.hpp"

namespace emograph {

// Which tone instruction later rounds carry. Round 1 always instructs with
// the seed's emotion; afterwards CurrentLabel re-prompts with the sender's
// classified label while SeedTone keeps the original instruction.
enum class TonePolicy { CurrentLabel, SeedTone };

struct ReplyRecord {
  int round = 0;
  NodeId source;
  NodeId target;
  EmotionLabel source_emotion = EmotionLabel::Neutral;
  std::string prompt_hash;
  std::string reply;
  SentimentScore score;
};

struct LlmTrace {
  NodeId seed_node;
  std::uint64_t rng_seed = 0;
  int rounds_executed = 0;
  std::vector<ReplyRecord> records;
  std::vector<std::string> errors;  // per-edge provider failures
  // Seed plus activated nodes with reply edges; a tree rooted at the seed
  // when run on a fresh node set.
  Graph diffusion_graph{/*directed=*/true, Provenance::LlmSim};
};

// Breadth-wise LLM contagion: each node activated in round r-1 prompts its
// still-inactive neighbors in round r (ascending (source, target) order,
// first claimant per target), the provider answers on behalf of the target,
// the classifier labels the reply and the target adopts the label. Provider
// failures are recorded per edge and diffusion continues; a round whose
// requests all fail stops the run early. Requests inside a round may be
// issued concurrently up to max_in_flight; commits always happen in
// candidate order, so concurrency never changes results.
LlmTrace run_llm_diffusion(const Graph& graph, const NodeId& seed_node,
                           int rounds, GenerationProvider& provider,
                           const SentimentClassifier& classifier,
                           TonePolicy tone_policy, std::uint64_t rng_seed,
                           int max_in_flight = 1);

// Per-round label fractions in class-index order; each round sums to 1.
// Throws ContractError on an empty trace.
std::map<int, std::array<double, 3>> positivity_share_by_round(
    const LlmTrace& trace);

// Row-stochastic source-label -> reply-label matrix. Rows without
// observations are uniform and flagged unobserved.
struct TransitionMatrix {
  std::array<std::array<double, 3>, 3> rows{};
  std::array<bool, 3> observed{};
};
TransitionMatrix sentiment_transition_matrix(const LlmTrace& trace);

// Depth (max activation round), breadth (total activated) and drift (L1
// distance between round-1 and final-round label distributions) per trace,
// with a-minus-b deltas.
struct DiffusionComparison {
  struct Side {
    int depth = 0;
    std::size_t breadth = 0;
    double drift = 0.0;
  };
  Side a, b;
  int depth_delta = 0;
  long long breadth_delta = 0;
  double drift_delta = 0.0;
};
DiffusionComparison compare_diffusion(const LlmTrace& a, const LlmTrace& b);

// Trace wire format: JSONL reply records plus a terminal summary.
std::string serialize_llm_trace(const LlmTrace& trace);
void write_llm_trace_file(const LlmTrace& trace,
                          const std::filesystem::path& path);

}  // namespace emograph

#endif  // EMOGRAPH_LLM_DIFFUSION_HPP_
