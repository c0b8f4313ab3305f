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

#include "emograph/generators.hpp"

#include <array>
#include <string>

#include "emograph/errors.hpp"
#include "emograph/rng.hpp"

namespace emograph {

Graph generate_er_graph(int n, double p_edge, std::uint64_t rng_seed) {
  if (n < 1) throw ArgumentError("node count must be >= 1");
  if (p_edge < 0.0 || p_edge > 1.0)
    throw ArgumentError("edge probability must be in [0, 1]");

  Graph graph(/*directed=*/false, Provenance::Synthetic, rng_seed);
  for (int i = 0; i < n; ++i)
    graph.add_node(NodeState{.id = std::to_string(i)});

  Rng rng(rng_seed);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.bernoulli(p_edge)) {
        graph.add_edge(
            Edge{.source = std::to_string(i), .target = std::to_string(j)});
      }
    }
  }
  return graph;
}

Graph generate_chain_graphs(int num_chains, int chain_len,
                            std::uint64_t rng_seed) {
  if (num_chains < 1) throw ArgumentError("chain count must be >= 1");
  if (chain_len < 2) throw ArgumentError("chain length must be >= 2");

  Graph graph(/*directed=*/true, Provenance::Synthetic, rng_seed);
  for (int c = 0; c < num_chains; ++c) {
    for (int k = 0; k < chain_len; ++k)
      graph.add_node(NodeState{.id = std::to_string(c * chain_len + k)});
  }
  for (int c = 0; c < num_chains; ++c) {
    for (int k = 0; k + 1 < chain_len; ++k) {
      graph.add_edge(Edge{.source = std::to_string(c * chain_len + k),
                          .target = std::to_string(c * chain_len + k + 1)});
    }
  }
  return graph;
}

Graph generate_star_chain_graph(int num_chains, int chain_len,
                                std::uint64_t rng_seed) {
  if (num_chains < 1) throw ArgumentError("chain count must be >= 1");
  if (chain_len < 1) throw ArgumentError("chain length must be >= 1");

  Graph graph(/*directed=*/true, Provenance::Synthetic, rng_seed);
  graph.add_node(NodeState{.id = "0"});
  for (int c = 0; c < num_chains; ++c) {
    for (int k = 0; k < chain_len; ++k)
      graph.add_node(NodeState{.id = std::to_string(1 + c * chain_len + k)});
  }
  for (int c = 0; c < num_chains; ++c) {
    graph.add_edge(
        Edge{.source = "0", .target = std::to_string(1 + c * chain_len)});
    for (int k = 0; k + 1 < chain_len; ++k) {
      graph.add_edge(Edge{.source = std::to_string(1 + c * chain_len + k),
                          .target = std::to_string(1 + c * chain_len + k + 1)});
    }
  }
  return graph;
}

void init_node_attributes(Graph& graph, const EmotionDistribution& dist,
                          std::uint64_t rng_seed) {
  if (graph.node_count() == 0) return;
  if (dist.positive < 0.0 || dist.neutral < 0.0 || dist.negative < 0.0)
    throw ArgumentError("emotion weights must be nonnegative");
  if (dist.positive + dist.neutral + dist.negative <= 0.0)
    throw ArgumentError("emotion weights must not all be zero");

  const std::array<double, 3> weights = {dist.positive, dist.neutral,
                                         dist.negative};
  Rng rng(rng_seed);
  for (auto& [id, state] : graph.mutable_nodes()) {
    state.emotion =
        emotion_from_index(static_cast<int>(rng.categorical(weights)));
    state.credibility = rng.uniform();
    state.susceptibility = rng.uniform();
  }
}

}  // namespace emograph
