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

#include "emograph/metrics.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "emograph/errors.hpp"

namespace emograph {

double clustering_coefficient(const Graph& graph) {
  if (graph.node_count() == 0) return 0.0;

  std::map<NodeId, std::set<NodeId>> adjacency;
  for (const auto& [id, state] : graph.nodes()) adjacency[id];
  for (const Edge& e : graph.edges()) {
    adjacency[e.source].insert(e.target);
    adjacency[e.target].insert(e.source);
  }

  double sum = 0.0;
  for (const auto& [id, neighbors] : adjacency) {
    const std::size_t k = neighbors.size();
    if (k < 2) continue;
    std::size_t links = 0;
    for (auto a = neighbors.begin(); a != neighbors.end(); ++a) {
      auto b = a;
      for (++b; b != neighbors.end(); ++b) {
        if (adjacency[*a].contains(*b)) ++links;
      }
    }
    sum += 2.0 * static_cast<double>(links) /
           (static_cast<double>(k) * static_cast<double>(k - 1));
  }
  return sum / static_cast<double>(graph.node_count());
}

double reciprocity(const Graph& graph) {
  if (!graph.directed())
    throw ContractError("reciprocity requires a directed graph");
  if (graph.edge_count() == 0) return 0.0;

  std::set<std::pair<NodeId, NodeId>> pairs;
  for (const Edge& e : graph.edges()) pairs.emplace(e.source, e.target);

  std::size_t reciprocated = 0;
  for (const Edge& e : graph.edges()) {
    if (pairs.contains({e.target, e.source})) ++reciprocated;
  }
  return static_cast<double>(reciprocated) /
         static_cast<double>(graph.edge_count());
}

DegreeStats degree_stats(const Graph& graph) {
  DegreeStats stats;
  stats.node_count = graph.node_count();
  stats.edge_count = graph.edge_count();
  if (stats.node_count == 0) return stats;

  for (const auto& [id, state] : graph.nodes()) {
    const std::size_t d = graph.degree(id);
    stats.max_degree = std::max(stats.max_degree, d);
    if (stats.degree_histogram.size() <= d) stats.degree_histogram.resize(d + 1);
    ++stats.degree_histogram[d];
  }
  stats.average_degree = 2.0 * static_cast<double>(stats.edge_count) /
                         static_cast<double>(stats.node_count);
  return stats;
}

std::map<NodeId, double> hub_scores(const Graph& graph) {
  if (graph.node_count() == 0)
    throw ContractError("hub scores require a nonempty graph");

  std::size_t max_degree = 0;
  for (const auto& [id, state] : graph.nodes())
    max_degree = std::max(max_degree, graph.degree(id));

  std::map<NodeId, double> scores;
  for (const auto& [id, state] : graph.nodes()) {
    scores[id] = max_degree == 0
                     ? 0.0
                     : static_cast<double>(graph.degree(id)) /
                           static_cast<double>(max_degree);
  }
  return scores;
}

Graph top_k_by_degree(const Graph& graph, std::size_t k) {
  std::vector<std::pair<std::size_t, NodeId>> ranked;
  for (const auto& [id, state] : graph.nodes())
    ranked.emplace_back(graph.degree(id), id);
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });

  std::set<NodeId> kept;
  for (std::size_t i = 0; i < std::min(k, ranked.size()); ++i)
    kept.insert(ranked[i].second);

  Graph subgraph(graph.directed(), graph.provenance(), graph.seed());
  for (const NodeId& id : kept) subgraph.add_node(graph.node(id));
  for (const Edge& e : graph.edges()) {
    if (kept.contains(e.source) && kept.contains(e.target))
      subgraph.add_edge(e);
  }
  return subgraph;
}

std::size_t weakly_connected_components(const Graph& graph) {
  std::set<NodeId> unvisited;
  for (const auto& [id, state] : graph.nodes()) unvisited.insert(id);

  std::size_t components = 0;
  while (!unvisited.empty()) {
    ++components;
    std::vector<NodeId> stack = {*unvisited.begin()};
    unvisited.erase(unvisited.begin());
    while (!stack.empty()) {
      NodeId current = std::move(stack.back());
      stack.pop_back();
      for (const NodeId& next : graph.undirected_neighbors(current)) {
        if (unvisited.erase(next) > 0) stack.push_back(next);
      }
    }
  }
  return components;
}

}  // namespace emograph
