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

#ifndef EMOGRAPH_PROPAGATION_HPP_
#define EMOGRAPH_PROPAGATION_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "emograph/graph.hpp"

namespace emograph {

enum class Strategy { Random, Theory, Eic };

std::string_view to_string(Strategy strategy) noexcept;
Strategy strategy_from_string(std::string_view text);

struct StrategyParams {
  Strategy strategy = Strategy::Random;
  // Random: fixed per-attempt probability.
  double p_fixed = 0.3;
  // Theory: emotional intensity of a neutral sender; polar senders have 1.0.
  double neutral_intensity = 0.5;
  // eIC: base probability and per-edge-kind multipliers. The default keeps
  // eIC the most selective strategy on the default generator: the hub boost
  // roughly multiplies by 1.7, so base_p near 0.25 would make eIC the
  // hottest strategy instead of the coldest.
  double base_p = 0.10;
  std::map<EdgeKind, double> kind_weights = {{EdgeKind::Reply, 1.0},
                                             {EdgeKind::Comment, 1.0},
                                             {EdgeKind::Mention, 0.8}};

  void validate() const;  // throws ArgumentError
};

struct PropagationEvent {
  int round = 0;  // >= 1
  NodeId source;
  NodeId target;
  EmotionLabel emotion_transmitted = EmotionLabel::Neutral;
  double probability_used = 0.0;
  bool success = false;
  // Credibility of the target, carried so the composite reward can be
  // recomputed from the trace alone.
  double target_credibility = 0.0;
};

struct RewardBreakdown {
  double r_spread = 0.0;  // >= 0
  double r_polar = 0.0;   // <= 0
  double r_cred = 0.0;    // >= 0
  double total = 0.0;     // r_spread + r_polar + r_cred, exactly
};

struct DiffusionTrace {
  Strategy strategy = Strategy::Random;
  NodeId seed_node;
  std::uint64_t rng_seed = 0;
  std::size_t graph_nodes = 0;
  std::size_t graph_edges = 0;
  std::vector<PropagationEvent> events;
  // Cumulative non-seed infections after each executed round; non-decreasing.
  std::vector<std::size_t> infected_by_round;
  std::vector<std::string> warnings;
  RewardBreakdown reward;

  // Non-seed nodes infected during the run.
  std::size_t spread() const { return infected_by_round.empty()
                                       ? 0
                                       : infected_by_round.back(); }
};

// Per-pair probability under the theory strategy:
// sender credibility * emotional intensity * receiver susceptibility.
// Requires both nodes to be attributed.
double theory_probability(const NodeState& sender, const NodeState& receiver,
                          const StrategyParams& params);

// Per-attempt probability under eIC:
// min(1, base_p * kind_weight * (1 + sender hub score)). An edge kind absent
// from the weight map uses 1.0 and appends a warning when a sink is given.
double eic_probability(const Edge& edge, double sender_hub,
                       const StrategyParams& params,
                       std::vector<std::string>* warnings = nullptr);

// One seeded run: the seed activates at round 0, then synchronous rounds
// execute until a round produces no new activation or max_rounds is reached.
// Candidate pairs are processed in ascending (source, target) order so the
// rng consumption order — and therefore the trace — is deterministic.
//
// Random/theory let every active node re-attempt inactive neighbors each
// round; eIC keeps independent-cascade discipline (each ordered pair is
// attempted at most once per run, by newly activated nodes).
DiffusionTrace run_simulation(const Graph& graph, const StrategyParams& params,
                              const NodeId& seed_node, int max_rounds,
                              std::uint64_t rng_seed);

// Composite reward computed from the trace alone:
//   r_spread = ln(1 + |V_infected|)
//   r_polar  = -population variance of infected emotion encodings
//   r_cred   = sum of infected credibilities
// with V_infected excluding the seed, and variance 0 when |V_infected| <= 1.
RewardBreakdown reward(const DiffusionTrace& trace);

// Trace wire format: JSONL, one record per event plus a terminal summary.
std::string serialize_trace(const DiffusionTrace& trace);
DiffusionTrace deserialize_trace(std::string_view text);
void write_trace_file(const DiffusionTrace& trace,
                      const std::filesystem::path& path);
DiffusionTrace read_trace_file(const std::filesystem::path& path);

}  // namespace emograph

#endif  // EMOGRAPH_PROPAGATION_HPP_
