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

#include "emograph/batch.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "emograph/errors.hpp"
#include "emograph/rng.hpp"

namespace emograph {

using ordered_json = nlohmann::ordered_json;

namespace {

// Seed stream tags; run index mixes in separately.
enum SeedStream : std::uint64_t {
  kGraphStream = 0x01,
  kAttributeStream = 0x02,
  kSimulationStream = 0x03,
  kSeedNodeStream = 0x04,
};

std::uint64_t run_seed(const BatchConfig& config, Strategy strategy,
                       SeedStream stream, int run) {
  const auto strategy_tag = static_cast<std::uint64_t>(strategy) + 1;
  return derive_seed(config.master_seed, (strategy_tag << 8) | stream,
                     static_cast<std::uint64_t>(run));
}

std::string format_double(double value, int decimals) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", decimals, value);
  return buffer;
}

}  // namespace

BatchSummary batch_experiment(const BatchConfig& config, int n_runs) {
  if (n_runs < 1) throw ArgumentError("n_runs must be >= 1");
  config.params.validate();

  BatchSummary summary;
  summary.runs = n_runs;
  summary.config = config;

  for (Strategy strategy : config.strategies) {
    StrategySummary row;
    row.strategy = strategy;
    double spread_sum = 0.0;
    double reward_sum = 0.0;
    std::size_t max_spread = 0;
    std::size_t min_spread = std::numeric_limits<std::size_t>::max();
    double max_reward = std::numeric_limits<double>::lowest();
    double min_reward = std::numeric_limits<double>::max();

    for (int run = 0; run < n_runs; ++run) {
      Graph graph = generate_er_graph(
          config.nodes, config.edge_prob,
          run_seed(config, strategy, kGraphStream, run));
      init_node_attributes(graph, config.emotion_dist,
                           run_seed(config, strategy, kAttributeStream, run));

      Rng picker(run_seed(config, strategy, kSeedNodeStream, run));
      auto it = graph.nodes().begin();
      std::advance(it, static_cast<long>(picker.uniform_index(
                       graph.node_count())));
      const NodeId seed_node = it->first;

      StrategyParams params = config.params;
      params.strategy = strategy;
      DiffusionTrace trace =
          run_simulation(graph, params, seed_node, config.max_rounds,
                         run_seed(config, strategy, kSimulationStream, run));

      const std::size_t spread = trace.spread();
      spread_sum += static_cast<double>(spread);
      reward_sum += trace.reward.total;
      max_spread = std::max(max_spread, spread);
      min_spread = std::min(min_spread, spread);
      max_reward = std::max(max_reward, trace.reward.total);
      min_reward = std::min(min_reward, trace.reward.total);
    }

    row.avg_spread = spread_sum / n_runs;
    row.avg_reward = reward_sum / n_runs;
    row.max_spread = max_spread;
    row.min_spread = min_spread;
    row.max_reward = max_reward;
    row.min_reward = min_reward;
    summary.rows.push_back(row);
  }
  return summary;
}

std::string render_summary_table(const BatchSummary& summary) {
  static constexpr const char* kHeaders[] = {
      "Strategy",   "Avg. Spread", "Avg. Reward", "Max Spread",
      "Min Spread", "Max Reward",  "Min Reward"};

  std::vector<std::vector<std::string>> cells;
  cells.emplace_back(std::begin(kHeaders), std::end(kHeaders));
  for (const StrategySummary& row : summary.rows) {
    cells.push_back({std::string(to_string(row.strategy)),
                     format_double(row.avg_spread, 2),
                     format_double(row.avg_reward, 3),
                     std::to_string(row.max_spread),
                     std::to_string(row.min_spread),
                     format_double(row.max_reward, 3),
                     format_double(row.min_reward, 3)});
  }

  std::vector<std::size_t> widths(cells[0].size(), 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c)
      widths[c] = std::max(widths[c], row[c].size());

  std::ostringstream out;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << "  ";
      out << row[c] << std::string(widths[c] - row[c].size(), ' ');
    }
    out << "\n";
  }
  return out.str();
}

std::string serialize_batch_summary(const BatchSummary& summary) {
  ordered_json doc;
  doc["runs"] = summary.runs;
  auto& rows = doc["strategies"] = ordered_json::array();
  for (const StrategySummary& row : summary.rows) {
    rows.push_back({{"strategy", to_string(row.strategy)},
                    {"avg_spread", row.avg_spread},
                    {"avg_reward", row.avg_reward},
                    {"max_spread", row.max_spread},
                    {"min_spread", row.min_spread},
                    {"max_reward", row.max_reward},
                    {"min_reward", row.min_reward}});
  }
  const BatchConfig& config = summary.config;
  doc["config"] = {
      {"nodes", config.nodes},
      {"edge_prob", config.edge_prob},
      {"emotion_dist",
       {{"positive", config.emotion_dist.positive},
        {"neutral", config.emotion_dist.neutral},
        {"negative", config.emotion_dist.negative}}},
      {"max_rounds", config.max_rounds},
      {"p_fixed", config.params.p_fixed},
      {"neutral_intensity", config.params.neutral_intensity},
      {"base_p", config.params.base_p},
      {"kind_weights",
       {{"reply", config.params.kind_weights.at(EdgeKind::Reply)},
        {"comment", config.params.kind_weights.at(EdgeKind::Comment)},
        {"mention", config.params.kind_weights.at(EdgeKind::Mention)}}},
      {"master_seed", config.master_seed}};
  return doc.dump(2) + "\n";
}

bool strategy_ordering_holds(const BatchSummary& summary) {
  const StrategySummary* random = nullptr;
  const StrategySummary* theory = nullptr;
  const StrategySummary* eic = nullptr;
  for (const StrategySummary& row : summary.rows) {
    switch (row.strategy) {
      case Strategy::Random: random = &row; break;
      case Strategy::Theory: theory = &row; break;
      case Strategy::Eic: eic = &row; break;
    }
  }
  if (random == nullptr || theory == nullptr || eic == nullptr) return false;
  return random->avg_spread > theory->avg_spread &&
         theory->avg_spread > eic->avg_spread &&
         random->avg_reward > theory->avg_reward &&
         theory->avg_reward > eic->avg_reward;
}

}  // namespace emograph
