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

#ifndef EMOGRAPH_GRAPH_HPP_
#define EMOGRAPH_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "emograph/emotion.hpp"

namespace emograph {

// Node identifiers are strings so synthetic indices and real user names share
// one graph type. All deterministic orderings are lexicographic over ids.
using NodeId = std::string;

enum class EdgeKind { Reply, Comment, Mention };

std::string_view to_string(EdgeKind kind) noexcept;
EdgeKind edge_kind_from_string(std::string_view text);

// Where a graph came from: a synthetic generator, an LLM-driven simulation,
// or ingested real interaction records.
enum class Provenance { Synthetic, LlmSim, Real };

std::string_view to_string(Provenance provenance) noexcept;
Provenance provenance_from_string(std::string_view text);

// Per-user attributes. Credibility and susceptibility stay unset until
// init_node_attributes (or an ingest default) assigns them; operations that
// need them report the offending node instead of inventing values.
struct NodeState {
  NodeId id;
  EmotionLabel emotion = EmotionLabel::Neutral;
  std::optional<double> credibility;     // in [0, 1]
  std::optional<double> susceptibility;  // in [0, 1]
  int post_frequency = 0;
  std::optional<int> activation_round;   // absent = never infected
  std::optional<double> account_age;     // accepted in files, never synthesized
};

struct Edge {
  NodeId source;
  NodeId target;
  EdgeKind kind = EdgeKind::Reply;
  double weight = 1.0;  // > 0
  std::optional<int> depth;
  std::optional<int> text_length;
  // Sentiment annotation attached by ingestion (one label per reply record).
  std::optional<EmotionLabel> emotion;
};

// Attributed directed or undirected multigraph. Node ids are unique, edge
// endpoints must exist, self-loops are rejected, and undirected edges are
// stored once with canonical (source <= target) endpoint ordering. Parallel
// edges are permitted and preserved.
//
// Instances are meant to be fully constructed, then shared read-only across
// concurrent workers; construction and mutation are single-writer.
class Graph {
 public:
  static constexpr int kSchemaVersion = 1;

  explicit Graph(bool directed, Provenance provenance = Provenance::Synthetic,
                 std::uint64_t seed = 0)
      : directed_(directed), provenance_(provenance), seed_(seed) {}

  bool directed() const noexcept { return directed_; }
  Provenance provenance() const noexcept { return provenance_; }
  void set_provenance(Provenance p) noexcept { provenance_ = p; }
  std::uint64_t seed() const noexcept { return seed_; }
  void set_seed(std::uint64_t s) noexcept { seed_ = s; }

  // Throws ArgumentError on duplicate id or empty id.
  NodeState& add_node(NodeState node);
  bool has_node(const NodeId& id) const { return nodes_.contains(id); }
  const NodeState& node(const NodeId& id) const;
  NodeState& node(const NodeId& id);
  std::size_t node_count() const noexcept { return nodes_.size(); }
  const std::map<NodeId, NodeState>& nodes() const noexcept { return nodes_; }
  // Single-writer mutation of node attributes in place.
  std::map<NodeId, NodeState>& mutable_nodes() noexcept { return nodes_; }

  // Validates endpoints, weight and the no-self-loop rule; canonicalizes
  // endpoint order on undirected graphs. Returns the stored edge.
  const Edge& add_edge(Edge edge);
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  // Unique neighbor ids in ascending order. On directed graphs these follow
  // edge direction; on undirected graphs they are all adjacent nodes.
  std::vector<NodeId> out_neighbors(const NodeId& id) const;

  // Unique neighbor ids ignoring edge direction, ascending.
  std::vector<NodeId> undirected_neighbors(const NodeId& id) const;

  // Total degree (in+out on directed graphs), counting parallel edges.
  std::size_t degree(const NodeId& id) const;

  // Indices into edges() of edges leaving `id` (incident edges on undirected
  // graphs), in insertion order.
  std::vector<std::size_t> out_edge_indices(const NodeId& id) const;

 private:
  const std::vector<std::size_t>* find_out(const NodeId& id) const;
  const std::vector<std::size_t>* find_in(const NodeId& id) const;

  bool directed_;
  Provenance provenance_;
  std::uint64_t seed_;
  std::map<NodeId, NodeState> nodes_;
  std::vector<Edge> edges_;
  // Undirected graphs index each edge under both endpoints in out_by_node_.
  std::map<NodeId, std::vector<std::size_t>> out_by_node_;
  std::map<NodeId, std::vector<std::size_t>> in_by_node_;
};

}  // namespace emograph

#endif  // EMOGRAPH_GRAPH_HPP_
