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

#include "emograph/llm_diffusion.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <set>
#include <sstream>

#include <json.hpp>

#include "emograph/errors.hpp"
#include "emograph/graph_io.hpp"
#include "emograph/rng.hpp"

namespace emograph {

using ordered_json = nlohmann::ordered_json;

namespace {

struct Candidate {
  NodeId source;
  NodeId target;
  std::size_t edge_index = 0;
  Prompt prompt;
};

struct RequestResult {
  bool ok = false;
  std::string text;  // reply on success, error message otherwise
};

// Issues the round's requests with at most max_in_flight concurrent calls.
// Results land in candidate order regardless of completion order.
std::vector<RequestResult> issue_requests(
    GenerationProvider& provider, const std::vector<Candidate>& candidates,
    const GenerationOptions& options, int max_in_flight) {
  std::vector<RequestResult> results(candidates.size());
  if (max_in_flight <= 1) {
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      try {
        results[i] = {true, provider.generate(candidates[i].prompt, options)};
      } catch (const std::exception& e) {
        results[i] = {false, e.what()};
      }
    }
    return results;
  }

  std::size_t next = 0;
  while (next < candidates.size()) {
    const std::size_t batch_end = std::min(
        candidates.size(), next + static_cast<std::size_t>(max_in_flight));
    std::vector<std::future<std::string>> futures;
    for (std::size_t i = next; i < batch_end; ++i) {
      futures.push_back(std::async(std::launch::async, [&, i] {
        return provider.generate(candidates[i].prompt, options);
      }));
    }
    for (std::size_t i = next; i < batch_end; ++i) {
      try {
        results[i] = {true, futures[i - next].get()};
      } catch (const std::exception& e) {
        results[i] = {false, e.what()};
      }
    }
    next = batch_end;
  }
  return results;
}

std::array<double, 3> label_distribution(
    const std::vector<const ReplyRecord*>& records) {
  std::array<double, 3> shares{};
  if (records.empty()) return shares;
  for (const ReplyRecord* record : records)
    shares[emotion_index(record->score.label)] += 1.0;
  for (double& share : shares) share /= static_cast<double>(records.size());
  return shares;
}

}  // namespace

LlmTrace run_llm_diffusion(const Graph& graph, const NodeId& seed_node,
                           int rounds, GenerationProvider& provider,
                           const SentimentClassifier& classifier,
                           TonePolicy tone_policy, std::uint64_t rng_seed,
                           int max_in_flight) {
  if (rounds < 1) throw ArgumentError("rounds must be >= 1");
  if (!graph.has_node(seed_node))
    throw ArgumentError("seed node '" + seed_node + "' is not in the graph");

  LlmTrace trace;
  trace.seed_node = seed_node;
  trace.rng_seed = rng_seed;
  trace.diffusion_graph.set_seed(rng_seed);

  // Evolving view: activation round and current label per reached node.
  std::map<NodeId, int> activation;
  std::map<NodeId, EmotionLabel> current_label;
  activation[seed_node] = 0;
  current_label[seed_node] = graph.node(seed_node).emotion;

  {
    NodeState seed_state = graph.node(seed_node);
    seed_state.activation_round = 0;
    seed_state.post_frequency = 1;  // the original post
    trace.diffusion_graph.add_node(std::move(seed_state));
  }

  GenerationOptions options;
  options.seed = rng_seed;

  std::vector<NodeId> frontier = {seed_node};
  for (int round = 1; round <= rounds; ++round) {
    std::sort(frontier.begin(), frontier.end());

    std::vector<Candidate> candidates;
    std::set<NodeId> claimed;
    for (const NodeId& source : frontier) {
      const EmotionLabel tone = tone_policy == TonePolicy::SeedTone
                                    ? current_label.at(seed_node)
                                    : current_label.at(source);
      for (const NodeId& target : graph.out_neighbors(source)) {
        if (activation.contains(target) || claimed.contains(target)) continue;
        claimed.insert(target);

        std::size_t edge_index = 0;
        for (std::size_t index : graph.out_edge_indices(source)) {
          const Edge& e = graph.edges()[index];
          const NodeId& other = e.source == source ? e.target : e.source;
          if (other == target) {
            edge_index = index;
            break;
          }
        }

        NodeState sender_state = graph.node(source);
        sender_state.emotion = current_label.at(source);
        sender_state.activation_round = activation.at(source);
        Candidate candidate{source, target, edge_index,
                            build_prompt(sender_state, graph.node(target),
                                         graph.edges()[edge_index], tone)};
        candidates.push_back(std::move(candidate));
      }
    }
    if (candidates.empty()) break;

    const auto results =
        issue_requests(provider, candidates, options, max_in_flight);

    std::vector<NodeId> newly_activated;
    std::size_t failures = 0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const Candidate& candidate = candidates[i];
      if (!results[i].ok) {
        ++failures;
        trace.errors.push_back("round " + std::to_string(round) + " " +
                               candidate.source + "->" + candidate.target +
                               ": " + results[i].text);
        continue;
      }
      const std::string& reply = results[i].text;
      ReplyRecord record;
      record.round = round;
      record.source = candidate.source;
      record.target = candidate.target;
      record.source_emotion = current_label.at(candidate.source);
      record.prompt_hash = candidate.prompt.hash();
      record.reply = reply;
      record.score = classifier.classify(reply);

      activation[candidate.target] = round;
      current_label[candidate.target] = record.score.label;
      newly_activated.push_back(candidate.target);

      NodeState target_state = graph.node(candidate.target);
      target_state.emotion = record.score.label;
      target_state.activation_round = round;
      target_state.post_frequency = 1;  // the reply it authored
      trace.diffusion_graph.add_node(std::move(target_state));

      Edge edge = graph.edges()[candidate.edge_index];
      edge.source = candidate.source;
      edge.target = candidate.target;
      edge.emotion = record.score.label;
      edge.text_length = static_cast<int>(reply.size());
      trace.diffusion_graph.add_edge(std::move(edge));

      trace.records.push_back(std::move(record));
    }

    trace.rounds_executed = round;
    if (failures == candidates.size()) {
      trace.errors.push_back("round " + std::to_string(round) +
                             ": all requests failed, stopping early");
      break;
    }
    frontier = std::move(newly_activated);
    if (frontier.empty()) break;
  }

  return trace;
}

std::map<int, std::array<double, 3>> positivity_share_by_round(
    const LlmTrace& trace) {
  if (trace.records.empty())
    throw ContractError("positivity shares require a nonempty trace");

  std::map<int, std::vector<const ReplyRecord*>> by_round;
  for (const ReplyRecord& record : trace.records)
    by_round[record.round].push_back(&record);

  std::map<int, std::array<double, 3>> shares;
  for (const auto& [round, records] : by_round)
    shares[round] = label_distribution(records);
  return shares;
}

TransitionMatrix sentiment_transition_matrix(const LlmTrace& trace) {
  std::array<std::array<std::size_t, 3>, 3> counts{};
  for (const ReplyRecord& record : trace.records)
    ++counts[emotion_index(record.source_emotion)]
            [emotion_index(record.score.label)];

  TransitionMatrix matrix;
  for (int row = 0; row < 3; ++row) {
    std::size_t total = 0;
    for (int col = 0; col < 3; ++col) total += counts[row][col];
    matrix.observed[row] = total > 0;
    for (int col = 0; col < 3; ++col) {
      matrix.rows[row][col] =
          total > 0 ? static_cast<double>(counts[row][col]) /
                          static_cast<double>(total)
                    : 1.0 / 3.0;
    }
  }
  return matrix;
}

DiffusionComparison compare_diffusion(const LlmTrace& a, const LlmTrace& b) {
  if (a.records.empty() || b.records.empty())
    throw ContractError("diffusion comparison requires nonempty traces");

  auto side = [](const LlmTrace& trace) {
    DiffusionComparison::Side s;
    std::vector<const ReplyRecord*> first_round;
    std::vector<const ReplyRecord*> final_round;
    int last = 0;
    for (const ReplyRecord& record : trace.records)
      last = std::max(last, record.round);
    for (const ReplyRecord& record : trace.records) {
      if (record.round == 1) first_round.push_back(&record);
      if (record.round == last) final_round.push_back(&record);
    }
    s.depth = last;
    s.breadth = trace.records.size();
    const auto first = label_distribution(first_round);
    const auto final_ = label_distribution(final_round);
    for (int i = 0; i < 3; ++i) s.drift += std::abs(first[i] - final_[i]);
    return s;
  };

  DiffusionComparison comparison;
  comparison.a = side(a);
  comparison.b = side(b);
  comparison.depth_delta = comparison.a.depth - comparison.b.depth;
  comparison.breadth_delta =
      static_cast<long long>(comparison.a.breadth) -
      static_cast<long long>(comparison.b.breadth);
  comparison.drift_delta = comparison.a.drift - comparison.b.drift;
  return comparison;
}

std::string serialize_llm_trace(const LlmTrace& trace) {
  std::ostringstream out;
  for (const ReplyRecord& record : trace.records) {
    ordered_json j;
    j["type"] = "reply";
    j["round"] = record.round;
    j["source"] = record.source;
    j["target"] = record.target;
    j["source_emotion"] = to_string(record.source_emotion);
    j["prompt_hash"] = record.prompt_hash;
    j["reply"] = record.reply;
    j["compound"] = record.score.compound;
    j["label"] = to_string(record.score.label);
    j["token_hits"] = record.score.token_hits;
    out << j.dump() << "\n";
  }

  ordered_json summary;
  summary["type"] = "summary";
  summary["seed_node"] = trace.seed_node;
  summary["rng_seed"] = trace.rng_seed;
  summary["rounds_executed"] = trace.rounds_executed;
  summary["replies"] = trace.records.size();
  summary["errors"] = trace.errors;
  if (!trace.records.empty()) {
    ordered_json shares = ordered_json::object();
    for (const auto& [round, fractions] : positivity_share_by_round(trace)) {
      shares[std::to_string(round)] = {{"positive", fractions[0]},
                                       {"neutral", fractions[1]},
                                       {"negative", fractions[2]}};
    }
    summary["shares_by_round"] = std::move(shares);
  }
  out << summary.dump() << "\n";
  return out.str();
}

void write_llm_trace_file(const LlmTrace& trace,
                          const std::filesystem::path& path) {
  write_text_file(path, serialize_llm_trace(trace));
}

}  // namespace emograph
