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

#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "emograph/errors.hpp"
#include "emograph/generators.hpp"
#include "emograph/graph_io.hpp"
#include "emograph/metrics.hpp"
#include "emograph/rng.hpp"

using namespace emograph;

namespace {

Graph attributed(Graph graph, std::uint64_t seed = 7) {
  init_node_attributes(graph, EmotionDistribution{}, seed);
  return graph;
}

// Independent component search used as the oracle for the chain examples.
std::size_t count_components_brute_force(const Graph& graph) {
  std::set<NodeId> remaining;
  for (const auto& [id, state] : graph.nodes()) remaining.insert(id);
  std::size_t components = 0;
  while (!remaining.empty()) {
    ++components;
    std::vector<NodeId> queue = {*remaining.begin()};
    remaining.erase(remaining.begin());
    while (!queue.empty()) {
      NodeId current = queue.back();
      queue.pop_back();
      for (const Edge& e : graph.edges()) {
        NodeId other;
        if (e.source == current) {
          other = e.target;
        } else if (e.target == current) {
          other = e.source;
        } else {
          continue;
        }
        if (remaining.erase(other) > 0) queue.push_back(other);
      }
    }
  }
  return components;
}

// Triangle enumeration oracle for clustering examples.
std::size_t count_triangles_brute_force(const Graph& graph) {
  std::vector<NodeId> ids;
  for (const auto& [id, state] : graph.nodes()) ids.push_back(id);
  std::set<std::pair<NodeId, NodeId>> undirected;
  for (const Edge& e : graph.edges()) {
    undirected.emplace(std::min(e.source, e.target),
                       std::max(e.source, e.target));
  }
  auto linked = [&](const NodeId& a, const NodeId& b) {
    return undirected.contains({std::min(a, b), std::max(a, b)});
  };
  std::size_t triangles = 0;
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j)
      for (std::size_t k = j + 1; k < ids.size(); ++k)
        if (linked(ids[i], ids[j]) && linked(ids[j], ids[k]) &&
            linked(ids[i], ids[k]))
          ++triangles;
  return triangles;
}

Graph undirected_graph(int n) {
  Graph graph(/*directed=*/false);
  for (int i = 0; i < n; ++i)
    graph.add_node(NodeState{.id = std::to_string(i)});
  return graph;
}

Graph directed_graph(int n) {
  Graph graph(/*directed=*/true);
  for (int i = 0; i < n; ++i)
    graph.add_node(NodeState{.id = std::to_string(i)});
  return graph;
}

}  // namespace

TEST_CASE("er generator: degenerate probabilities") {
  Graph empty = generate_er_graph(10, 0.0, 1);
  CHECK(empty.node_count() == 10);
  CHECK(empty.edge_count() == 0);

  Graph complete = generate_er_graph(10, 1.0, 1);
  CHECK(complete.edge_count() == 45);
  CHECK(degree_stats(complete).average_degree == doctest::Approx(9.0));
}

TEST_CASE("er generator: mean edge count matches the binomial oracle") {
  // 45 pairs at p = 0.5 give a binomial mean of 22.5.
  const double expected = 0.5 * (10.0 * 9.0 / 2.0);
  double total = 0.0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed)
    total += static_cast<double>(generate_er_graph(10, 0.5, seed).edge_count());
  const double mean = total / 1000.0;
  CHECK(mean > expected - 2.0);
  CHECK(mean < expected + 2.0);
}

TEST_CASE("er generator: argument validation and determinism") {
  CHECK_THROWS_AS(generate_er_graph(10, 1.5, 1), ArgumentError);
  CHECK_THROWS_AS(generate_er_graph(10, -0.1, 1), ArgumentError);
  CHECK_THROWS_AS(generate_er_graph(0, 0.5, 1), ArgumentError);

  Graph a = attributed(generate_er_graph(10, 0.5, 42));
  Graph b = attributed(generate_er_graph(10, 0.5, 42));
  CHECK(serialize_graph(a) == serialize_graph(b));
}

TEST_CASE("chain generator: counts and components") {
  Graph sim = generate_chain_graphs(100, 4, 3);
  CHECK(sim.node_count() == 400);
  CHECK(sim.edge_count() == 300);

  Graph minimal = generate_chain_graphs(1, 2, 0);
  CHECK(minimal.node_count() == 2);
  CHECK(minimal.edge_count() == 1);

  Graph three = generate_chain_graphs(3, 5, 0);
  CHECK(three.node_count() == 15);
  CHECK(three.edge_count() == 12);
  CHECK(weakly_connected_components(three) == 3);
  CHECK(count_components_brute_force(three) == 3);

  CHECK_THROWS_AS(generate_chain_graphs(1, 1, 0), ArgumentError);
}

TEST_CASE("chain generator: forests have no cycles") {
  // nodes - components == edges characterizes a forest.
  for (int chains : {1, 3, 10}) {
    for (int length : {2, 4, 7}) {
      Graph graph = generate_chain_graphs(chains, length, 11);
      CHECK(graph.node_count() ==
            static_cast<std::size_t>(chains) * length);
      CHECK(graph.edge_count() ==
            static_cast<std::size_t>(chains) * (length - 1));
      CHECK(weakly_connected_components(graph) ==
            static_cast<std::size_t>(chains));
      CHECK(graph.node_count() - weakly_connected_components(graph) ==
            graph.edge_count());
    }
  }
}

TEST_CASE("star-chain generator: radial reply tree") {
  Graph tree = generate_star_chain_graph(100, 4, 5);
  CHECK(tree.node_count() == 401);
  CHECK(tree.edge_count() == 400);
  CHECK(weakly_connected_components(tree) == 1);
  CHECK(tree.out_neighbors("0").size() == 100);
}

TEST_CASE("init_node_attributes: degenerate distribution and determinism") {
  Graph graph = generate_er_graph(20, 0.3, 9);
  init_node_attributes(graph, EmotionDistribution{1.0, 0.0, 0.0}, 1);
  for (const auto& [id, state] : graph.nodes()) {
    CHECK(state.emotion == EmotionLabel::Positive);
    CHECK(*state.credibility >= 0.0);
    CHECK(*state.credibility <= 1.0);
    CHECK(*state.susceptibility >= 0.0);
    CHECK(*state.susceptibility <= 1.0);
  }

  Graph a = generate_er_graph(20, 0.3, 9);
  Graph b = generate_er_graph(20, 0.3, 9);
  init_node_attributes(a, EmotionDistribution{}, 33);
  init_node_attributes(b, EmotionDistribution{}, 33);
  CHECK(serialize_graph(a) == serialize_graph(b));

  Graph empty_graph(/*directed=*/false);
  CHECK_NOTHROW(init_node_attributes(empty_graph, EmotionDistribution{}, 1));
  CHECK_THROWS_AS(
      init_node_attributes(graph, EmotionDistribution{0.0, 0.0, 0.0}, 1),
      ArgumentError);
  CHECK_THROWS_AS(
      init_node_attributes(graph, EmotionDistribution{-1.0, 1.0, 1.0}, 1),
      ArgumentError);
}

TEST_CASE("init_node_attributes: uniform shares concentrate near 1/3") {
  Graph graph(/*directed=*/false);
  for (int i = 0; i < 3000; ++i)
    graph.add_node(NodeState{.id = std::to_string(i)});
  init_node_attributes(graph, EmotionDistribution{}, 2024);

  std::array<int, 3> counts{};
  for (const auto& [id, state] : graph.nodes())
    ++counts[emotion_index(state.emotion)];
  for (int count : counts) {
    const double share = count / 3000.0;
    CHECK(share > 1.0 / 3.0 - 0.03);
    CHECK(share < 1.0 / 3.0 + 0.03);
  }
}

TEST_CASE("clustering coefficient") {
  CHECK(clustering_coefficient(generate_chain_graphs(5, 4, 0)) == 0.0);

  Graph triangle = undirected_graph(3);
  triangle.add_edge({.source = "0", .target = "1"});
  triangle.add_edge({.source = "1", .target = "2"});
  triangle.add_edge({.source = "0", .target = "2"});
  CHECK(clustering_coefficient(triangle) == doctest::Approx(1.0));
  CHECK(count_triangles_brute_force(triangle) == 1);

  Graph cycle = undirected_graph(4);
  cycle.add_edge({.source = "0", .target = "1"});
  cycle.add_edge({.source = "1", .target = "2"});
  cycle.add_edge({.source = "2", .target = "3"});
  cycle.add_edge({.source = "0", .target = "3"});
  CHECK(count_triangles_brute_force(cycle) == 0);
  CHECK(clustering_coefficient(cycle) == 0.0);

  Graph empty_graph(/*directed=*/false);
  CHECK(clustering_coefficient(empty_graph) == 0.0);
}

TEST_CASE("reciprocity") {
  CHECK(reciprocity(generate_chain_graphs(4, 4, 0)) == 0.0);

  Graph mutual = directed_graph(2);
  mutual.add_edge({.source = "0", .target = "1"});
  mutual.add_edge({.source = "1", .target = "0"});
  CHECK(reciprocity(mutual) == doctest::Approx(1.0));

  Graph partial = directed_graph(3);
  partial.add_edge({.source = "0", .target = "1"});
  partial.add_edge({.source = "1", .target = "0"});
  partial.add_edge({.source = "1", .target = "2"});
  CHECK(reciprocity(partial) == doctest::Approx(2.0 / 3.0));

  Graph empty_directed = directed_graph(3);
  CHECK(reciprocity(empty_directed) == 0.0);
  CHECK_THROWS_AS(reciprocity(undirected_graph(2)), ContractError);
}

TEST_CASE("degree stats") {
  // First 26 of the 45 pairs over 10 nodes: average degree 2*26/10 = 5.20.
  Graph dense = undirected_graph(10);
  int added = 0;
  for (int i = 0; i < 10 && added < 26; ++i) {
    for (int j = i + 1; j < 10 && added < 26; ++j) {
      dense.add_edge({.source = std::to_string(i), .target = std::to_string(j)});
      ++added;
    }
  }
  DegreeStats stats = degree_stats(dense);
  CHECK(stats.edge_count == 26);
  CHECK(stats.average_degree == doctest::Approx(5.20));

  DegreeStats single = degree_stats(undirected_graph(1));
  CHECK(single.average_degree == 0.0);
  CHECK(single.degree_histogram == std::vector<std::size_t>{1});

  Graph star = undirected_graph(6);
  for (int leaf = 1; leaf < 6; ++leaf)
    star.add_edge({.source = "0", .target = std::to_string(leaf)});
  DegreeStats star_stats = degree_stats(star);
  CHECK(star_stats.max_degree == 5);
  CHECK(star_stats.average_degree == doctest::Approx(10.0 / 6.0));

  std::size_t histogram_total = 0;
  for (std::size_t count : star_stats.degree_histogram)
    histogram_total += count;
  CHECK(histogram_total == star_stats.node_count);
}

TEST_CASE("degree sum equals twice the edge count") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph graph = generate_er_graph(12, 0.4, seed);
    std::size_t degree_sum = 0;
    for (const auto& [id, state] : graph.nodes())
      degree_sum += graph.degree(id);
    CHECK(degree_sum == 2 * graph.edge_count());
  }
}

TEST_CASE("hub scores") {
  Graph path = undirected_graph(0);
  path.add_node(NodeState{.id = "A"});
  path.add_node(NodeState{.id = "B"});
  path.add_node(NodeState{.id = "C"});
  path.add_edge({.source = "A", .target = "B"});
  path.add_edge({.source = "B", .target = "C"});
  auto scores = hub_scores(path);
  CHECK(scores.at("A") == doctest::Approx(0.5));
  CHECK(scores.at("B") == doctest::Approx(1.0));
  CHECK(scores.at("C") == doctest::Approx(0.5));

  Graph with_isolated = undirected_graph(3);
  with_isolated.add_edge({.source = "0", .target = "1"});
  CHECK(hub_scores(with_isolated).at("2") == 0.0);

  Graph edgeless = undirected_graph(2);
  for (const auto& [id, score] : hub_scores(edgeless)) CHECK(score == 0.0);

  Graph empty_graph(/*directed=*/false);
  CHECK_THROWS_AS(hub_scores(empty_graph), ContractError);
}

TEST_CASE("graph serialization round-trips random graphs") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    Rng rng(seed);
    const int n = 2 + static_cast<int>(rng.uniform_index(15));
    const double p = rng.uniform();
    Graph graph = generate_er_graph(n, p, seed * 31);
    init_node_attributes(graph, EmotionDistribution{1, 2, 1}, seed * 17);

    const std::string bytes = serialize_graph(graph);
    Graph back = deserialize_graph(bytes);
    CHECK(serialize_graph(back) == bytes);
    CHECK(back.node_count() == graph.node_count());
    CHECK(back.edge_count() == graph.edge_count());
    CHECK(back.directed() == graph.directed());
    CHECK(back.seed() == graph.seed());
  }
}

TEST_CASE("graph serialization round-trips the 400-node chain graph") {
  Graph sim = attributed(generate_chain_graphs(100, 4, 12));
  Graph back = deserialize_graph(serialize_graph(sim));
  CHECK(back.node_count() == 400);
  CHECK(back.edge_count() == 300);
  CHECK(back.directed());
}

TEST_CASE("graph deserialization validates documents") {
  Graph graph = attributed(generate_er_graph(3, 1.0, 1));
  std::string good = serialize_graph(graph);

  SUBCASE("unknown edge endpoint") {
    std::string bad = good;
    const auto pos = bad.find("\"source\": \"0\"");
    REQUIRE(pos != std::string::npos);
    bad.replace(pos, 13, "\"source\": \"9\"");
    CHECK_THROWS_WITH_AS(deserialize_graph(bad),
                         doctest::Contains("edge record 0"), ParseError);
  }

  SUBCASE("schema version mismatch") {
    std::string bad = good;
    const auto pos = bad.find("\"schema_version\": 1");
    REQUIRE(pos != std::string::npos);
    bad.replace(pos, 19, "\"schema_version\": 9");
    CHECK_THROWS_AS(deserialize_graph(bad), ParseError);
  }

  SUBCASE("out-of-range credibility") {
    Graph small(/*directed=*/false);
    small.add_node(NodeState{.id = "u",
                             .credibility = 0.5,
                             .susceptibility = 0.5});
    std::string bad = serialize_graph(small);
    const auto pos = bad.find("\"credibility\": 0.5");
    REQUIRE(pos != std::string::npos);
    bad.replace(pos, 18, "\"credibility\": 1.5");
    CHECK_THROWS_WITH_AS(deserialize_graph(bad), doctest::Contains("'u'"),
                         ParseError);
  }

  SUBCASE("not json at all") {
    CHECK_THROWS_AS(deserialize_graph("not json"), ParseError);
  }
}

TEST_CASE("graph invariants: self-loops, duplicates, weights") {
  Graph graph = undirected_graph(2);
  CHECK_THROWS_AS(graph.add_edge({.source = "0", .target = "0"}),
                  ArgumentError);
  CHECK_THROWS_AS(
      graph.add_edge({.source = "0", .target = "1", .weight = 0.0}),
      ArgumentError);
  CHECK_THROWS_AS(graph.add_node(NodeState{.id = "0"}), ArgumentError);
  CHECK_THROWS_AS(graph.add_edge({.source = "0", .target = "9"}),
                  ArgumentError);

  // Undirected edges store canonical endpoint order; parallel edges persist.
  graph.add_edge({.source = "1", .target = "0"});
  graph.add_edge({.source = "0", .target = "1"});
  CHECK(graph.edge_count() == 2);
  CHECK(graph.edges()[0].source == "0");
  CHECK(graph.edges()[0].target == "1");
}

TEST_CASE("dot export lists nodes with colors and labeled edges") {
  Graph graph = directed_graph(2);
  graph.node("0").emotion = EmotionLabel::Positive;
  graph.node("1").emotion = EmotionLabel::Negative;
  graph.add_edge({.source = "0", .target = "1", .kind = EdgeKind::Mention});
  const std::string dot = to_dot(graph);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("\"0\" [color=\"green\"];") != std::string::npos);
  CHECK(dot.find("\"1\" [color=\"red\"];") != std::string::npos);
  CHECK(dot.find("\"0\" -> \"1\" [label=\"mention\"];") != std::string::npos);

  Graph undirected = undirected_graph(2);
  undirected.add_edge({.source = "0", .target = "1"});
  CHECK(to_dot(undirected).find("\"0\" -- \"1\"") != std::string::npos);
}
