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

#ifndef EMOGRAPH_GENERATORS_HPP_
#define EMOGRAPH_GENERATORS_HPP_

#include <cstdint>

#include "emograph/graph.hpp"

namespace emograph {

// Relative weights over the three labels, in class-index order
// (positive, neutral, negative). Weights need not sum to one.
struct EmotionDistribution {
  double positive = 1.0;
  double neutral = 1.0;
  double negative = 1.0;
};

// Erdős–Rényi G(n, p): undirected, each of the n*(n-1)/2 node pairs joined
// independently with probability p_edge. Node ids are "0".."n-1".
// Deterministic for a fixed seed.
Graph generate_er_graph(int n, double p_edge, std::uint64_t rng_seed);

// num_chains disjoint directed reply paths of chain_len nodes each; every
// user appears exactly once. Node ids are sequential across chains.
Graph generate_chain_graphs(int num_chains, int chain_len,
                            std::uint64_t rng_seed);

// A root node replied to by num_chains chains of chain_len nodes: the radial
// reply-tree shape a single-seed LLM diffusion produces. Node "0" is the
// root; node count = 1 + num_chains*chain_len, edge count =
// num_chains*chain_len.
Graph generate_star_chain_graph(int num_chains, int chain_len,
                                std::uint64_t rng_seed);

// Assigns every node an emotion drawn from the distribution plus credibility
// and susceptibility drawn uniformly from [0,1]. Nodes are visited in
// ascending id order so the draw sequence is deterministic for a fixed seed.
// Empty graph is a no-op; all-zero weights raise ArgumentError.
void init_node_attributes(Graph& graph, const EmotionDistribution& dist,
                          std::uint64_t rng_seed);

}  // namespace emograph

#endif  // EMOGRAPH_GENERATORS_HPP_
