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

#include "emograph/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "emograph/errors.hpp"
#include "emograph/graph_io.hpp"
#include "emograph/metrics.hpp"
#include "emograph/rng.hpp"

namespace emograph {

using ordered_json = nlohmann::ordered_json;

std::string_view to_string(Strategy strategy) noexcept {
  switch (strategy) {
    case Strategy::Random: return "random";
    case Strategy::Theory: return "theory";
    case Strategy::Eic: return "eic";
  }
  return "random";
}

Strategy strategy_from_string(std::string_view text) {
  if (text == "random") return Strategy::Random;
  if (text == "theory") return Strategy::Theory;
  if (text == "eic") return Strategy::Eic;
  throw ParseError("unknown strategy: '" + std::string(text) + "'");
}

void StrategyParams::validate() const {
  auto check_probability = [](double p, const char* name) {
    if (!(p >= 0.0 && p <= 1.0))
      throw ArgumentError(std::string(name) + " must be in [0, 1]");
  };
  check_probability(p_fixed, "p_fixed");
  check_probability(neutral_intensity, "neutral_intensity");
  check_probability(base_p, "base_p");
  for (const auto& [kind, weight] : kind_weights) {
    if (!(weight > 0.0))
      throw ArgumentError("kind weight for '" + std::string(to_string(kind)) +
                          "' must be positive");
  }
}

namespace {

double require_credibility(const NodeState& state) {
  if (!state.credibility)
    throw ContractError("node '" + state.id +
                        "' has no credibility; attribute the graph first");
  return *state.credibility;
}

double require_susceptibility(const NodeState& state) {
  if (!state.susceptibility)
    throw ContractError("node '" + state.id +
                        "' has no susceptibility; attribute the graph first");
  return *state.susceptibility;
}

double emotional_intensity(EmotionLabel emotion, const StrategyParams& params) {
  return emotion == EmotionLabel::Neutral ? params.neutral_intensity : 1.0;
}

}  // namespace

double theory_probability(const NodeState& sender, const NodeState& receiver,
                          const StrategyParams& params) {
  return require_credibility(sender) *
         emotional_intensity(sender.emotion, params) *
         require_susceptibility(receiver);
}

double eic_probability(const Edge& edge, double sender_hub,
                       const StrategyParams& params,
                       std::vector<std::string>* warnings) {
  double kind_weight = 1.0;
  auto it = params.kind_weights.find(edge.kind);
  if (it != params.kind_weights.end()) {
    kind_weight = it->second;
  } else if (warnings != nullptr) {
    warnings->push_back("no kind weight for '" +
                        std::string(to_string(edge.kind)) +
                        "' on edge " + edge.source + "->" + edge.target +
                        "; using 1.0");
  }
  return std::min(1.0, params.base_p * kind_weight * (1.0 + sender_hub));
}

DiffusionTrace run_simulation(const Graph& graph, const StrategyParams& params,
                              const NodeId& seed_node, int max_rounds,
                              std::uint64_t rng_seed) {
  params.validate();
  if (max_rounds < 1) throw ArgumentError("max_rounds must be >= 1");
  if (!graph.has_node(seed_node))
    throw ArgumentError("seed node '" + seed_node + "' is not in the graph");

  DiffusionTrace trace;
  trace.strategy = params.strategy;
  trace.seed_node = seed_node;
  trace.rng_seed = rng_seed;
  trace.graph_nodes = graph.node_count();
  trace.graph_edges = graph.edge_count();

  Rng rng(rng_seed);

  // Evolving per-run state; the input graph stays untouched.
  std::map<NodeId, int> activation;
  std::map<NodeId, EmotionLabel> emotion;
  for (const auto& [id, state] : graph.nodes()) emotion[id] = state.emotion;
  activation[seed_node] = 0;

  std::map<NodeId, double> hubs;
  if (params.strategy == Strategy::Eic) hubs = hub_scores(graph);

  // eIC independent-cascade discipline: each ordered pair at most once.
  std::set<std::pair<NodeId, NodeId>> attempted;
  std::vector<NodeId> frontier = {seed_node};
  std::size_t infected = 0;

  for (int round = 1; round <= max_rounds; ++round) {
    // Senders are fixed at round start (synchronous rounds). eIC only lets
    // newly activated nodes attempt; random/theory re-attempt from every
    // active node.
    std::vector<NodeId> senders;
    if (params.strategy == Strategy::Eic) {
      senders = frontier;
    } else {
      for (const auto& [id, r] : activation) senders.push_back(id);
    }
    std::sort(senders.begin(), senders.end());

    std::size_t successes = 0;
    std::vector<NodeId> newly_activated;
    for (const NodeId& source : senders) {
      for (const NodeId& target : graph.out_neighbors(source)) {
        if (activation.contains(target)) continue;
        if (params.strategy == Strategy::Eic &&
            !attempted.emplace(source, target).second)
          continue;

        double probability = 0.0;
        switch (params.strategy) {
          case Strategy::Random:
            probability = params.p_fixed;
            break;
          case Strategy::Theory: {
            NodeState sender_state = graph.node(source);
            sender_state.emotion = emotion.at(source);
            probability = theory_probability(sender_state, graph.node(target),
                                             params);
            break;
          }
          case Strategy::Eic: {
            // First stored edge between the pair decides kind and weight.
            const Edge* edge = nullptr;
            for (std::size_t index : graph.out_edge_indices(source)) {
              const Edge& e = graph.edges()[index];
              const NodeId& other = e.source == source ? e.target : e.source;
              if (other == target) {
                edge = &e;
                break;
              }
            }
            probability = eic_probability(*edge, hubs.at(source), params,
                                          &trace.warnings);
            break;
          }
        }

        PropagationEvent event;
        event.round = round;
        event.source = source;
        event.target = target;
        event.emotion_transmitted = emotion.at(source);
        event.probability_used = probability;
        event.target_credibility = require_credibility(graph.node(target));
        event.success = rng.bernoulli(probability);
        if (event.success) {
          activation[target] = round;
          emotion[target] = event.emotion_transmitted;
          newly_activated.push_back(target);
          ++successes;
          ++infected;
        }
        trace.events.push_back(std::move(event));
      }
    }

    trace.infected_by_round.push_back(infected);
    frontier = std::move(newly_activated);
    if (successes == 0) break;
  }

  trace.reward = reward(trace);
  return trace;
}

RewardBreakdown reward(const DiffusionTrace& trace) {
  std::vector<double> values;
  double credibility_sum = 0.0;
  for (const PropagationEvent& event : trace.events) {
    if (!event.success) continue;
    values.push_back(emotion_value(event.emotion_transmitted));
    credibility_sum += event.target_credibility;
  }

  RewardBreakdown breakdown;
  const std::size_t n = values.size();
  breakdown.r_spread = std::log(1.0 + static_cast<double>(n));
  if (n > 1) {
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(n);
    double variance = 0.0;
    for (double v : values) variance += (v - mean) * (v - mean);
    variance /= static_cast<double>(n);
    if (variance != 0.0) breakdown.r_polar = -variance;
  }
  breakdown.r_cred = credibility_sum;
  breakdown.total = breakdown.r_spread + breakdown.r_polar + breakdown.r_cred;
  return breakdown;
}

std::string serialize_trace(const DiffusionTrace& trace) {
  std::ostringstream out;
  for (const PropagationEvent& event : trace.events) {
    ordered_json j;
    j["type"] = "event";
    j["round"] = event.round;
    j["source"] = event.source;
    j["target"] = event.target;
    j["emotion"] = to_string(event.emotion_transmitted);
    j["probability"] = event.probability_used;
    j["success"] = event.success;
    j["target_credibility"] = event.target_credibility;
    out << j.dump() << "\n";
  }
  ordered_json summary;
  summary["type"] = "summary";
  summary["strategy"] = to_string(trace.strategy);
  summary["seed_node"] = trace.seed_node;
  summary["rng_seed"] = trace.rng_seed;
  summary["graph_nodes"] = trace.graph_nodes;
  summary["graph_edges"] = trace.graph_edges;
  summary["infected_by_round"] = trace.infected_by_round;
  summary["warnings"] = trace.warnings;
  summary["reward"] = {{"r_spread", trace.reward.r_spread},
                       {"r_polar", trace.reward.r_polar},
                       {"r_cred", trace.reward.r_cred},
                       {"total", trace.reward.total}};
  out << summary.dump() << "\n";
  return out.str();
}

DiffusionTrace deserialize_trace(std::string_view text) {
  DiffusionTrace trace;
  bool saw_summary = false;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    ordered_json j;
    try {
      j = ordered_json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("trace line " + std::to_string(line_number) +
                       " is not valid JSON: " + e.what());
    }
    try {
      const std::string type = j.at("type").get<std::string>();
      if (type == "event") {
        PropagationEvent event;
        event.round = j.at("round").get<int>();
        event.source = j.at("source").get<std::string>();
        event.target = j.at("target").get<std::string>();
        event.emotion_transmitted =
            emotion_from_string(j.at("emotion").get<std::string>());
        event.probability_used = j.at("probability").get<double>();
        event.success = j.at("success").get<bool>();
        event.target_credibility = j.at("target_credibility").get<double>();
        trace.events.push_back(std::move(event));
      } else if (type == "summary") {
        saw_summary = true;
        trace.strategy =
            strategy_from_string(j.at("strategy").get<std::string>());
        trace.seed_node = j.at("seed_node").get<std::string>();
        trace.rng_seed = j.at("rng_seed").get<std::uint64_t>();
        trace.graph_nodes = j.at("graph_nodes").get<std::size_t>();
        trace.graph_edges = j.at("graph_edges").get<std::size_t>();
        trace.infected_by_round =
            j.at("infected_by_round").get<std::vector<std::size_t>>();
        trace.warnings = j.at("warnings").get<std::vector<std::string>>();
        const auto& r = j.at("reward");
        trace.reward.r_spread = r.at("r_spread").get<double>();
        trace.reward.r_polar = r.at("r_polar").get<double>();
        trace.reward.r_cred = r.at("r_cred").get<double>();
        trace.reward.total = r.at("total").get<double>();
      } else {
        throw ParseError("trace line " + std::to_string(line_number) +
                         " has unknown type '" + type + "'");
      }
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("malformed trace line " + std::to_string(line_number) +
                       ": " + e.what());
    }
  }
  if (!saw_summary) throw ParseError("trace has no summary record");
  return trace;
}

void write_trace_file(const DiffusionTrace& trace,
                      const std::filesystem::path& path) {
  write_text_file(path, serialize_trace(trace));
}

DiffusionTrace read_trace_file(const std::filesystem::path& path) {
  return deserialize_trace(read_text_file(path));
}

}  // namespace emograph
