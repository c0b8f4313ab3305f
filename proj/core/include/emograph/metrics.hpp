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

#ifndef EMOGRAPH_METRICS_HPP_
#define EMOGRAPH_METRICS_HPP_

#include <cstddef>
#include <map>
#include <vector>

#include "emograph/graph.hpp"

namespace emograph {

struct DegreeStats {
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  double average_degree = 0.0;
  std::size_t max_degree = 0;
  // Indexed by degree; sums to node_count.
  std::vector<std::size_t> degree_histogram;
};

// Global average of per-node local clustering (closed neighbor pairs over
// possible pairs). Nodes of degree < 2 contribute 0. Directed graphs are
// evaluated on their undirected projection; parallel edges collapse.
// Empty graph yields 0.
double clustering_coefficient(const Graph& graph);

// Fraction of directed edges (u,v) whose reverse (v,u) also exists.
// Throws ContractError on undirected graphs; zero edges yields 0.
double reciprocity(const Graph& graph);

// Exact counts and degree histogram; average_degree = 2*edges/nodes with
// parallel edges counted.
DegreeStats degree_stats(const Graph& graph);

// Degree centrality normalized by the maximum degree: hub(v) = deg(v)/max_deg,
// all zero when max_deg is 0. Throws ContractError on an empty graph.
std::map<NodeId, double> hub_scores(const Graph& graph);

// Number of weakly connected components (direction ignored).
std::size_t weakly_connected_components(const Graph& graph);

// Induced subgraph on the k most active users, ranked by degree with ties
// broken by ascending id. k >= node count returns a copy of the graph.
Graph top_k_by_degree(const Graph& graph, std::size_t k);

}  // namespace emograph

#endif  // EMOGRAPH_METRICS_HPP_
