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

#include "emograph/graph.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "emograph/errors.hpp"

namespace emograph {

std::string_view to_string(EdgeKind kind) noexcept {
  switch (kind) {
    case EdgeKind::Reply: return "reply";
    case EdgeKind::Comment: return "comment";
    case EdgeKind::Mention: return "mention";
  }
  return "reply";
}

EdgeKind edge_kind_from_string(std::string_view text) {
  if (text == "reply") return EdgeKind::Reply;
  if (text == "comment") return EdgeKind::Comment;
  if (text == "mention") return EdgeKind::Mention;
  throw ParseError("unknown edge kind: '" + std::string(text) + "'");
}

std::string_view to_string(Provenance provenance) noexcept {
  switch (provenance) {
    case Provenance::Synthetic: return "synthetic";
    case Provenance::LlmSim: return "llm-sim";
    case Provenance::Real: return "real";
  }
  return "synthetic";
}

Provenance provenance_from_string(std::string_view text) {
  if (text == "synthetic") return Provenance::Synthetic;
  if (text == "llm-sim") return Provenance::LlmSim;
  if (text == "real") return Provenance::Real;
  throw ParseError("unknown provenance: '" + std::string(text) + "'");
}

NodeState& Graph::add_node(NodeState node) {
  if (node.id.empty()) throw ArgumentError("node id must be nonempty");
  auto [it, inserted] = nodes_.emplace(node.id, std::move(node));
  if (!inserted) throw ArgumentError("duplicate node id: '" + it->first + "'");
  return it->second;
}

const NodeState& Graph::node(const NodeId& id) const {
  auto it = nodes_.find(id);
  if (it == nodes_.end()) throw ArgumentError("unknown node id: '" + id + "'");
  return it->second;
}

NodeState& Graph::node(const NodeId& id) {
  auto it = nodes_.find(id);
  if (it == nodes_.end()) throw ArgumentError("unknown node id: '" + id + "'");
  return it->second;
}

const Edge& Graph::add_edge(Edge edge) {
  if (!has_node(edge.source))
    throw ArgumentError("edge source '" + edge.source + "' is not a node");
  if (!has_node(edge.target))
    throw ArgumentError("edge target '" + edge.target + "' is not a node");
  if (edge.source == edge.target)
    throw ArgumentError("self-loop rejected on node '" + edge.source + "'");
  if (!(edge.weight > 0.0))
    throw ArgumentError("edge weight must be positive");
  if (!directed_ && edge.target < edge.source)
    std::swap(edge.source, edge.target);

  const std::size_t index = edges_.size();
  edges_.push_back(std::move(edge));
  const Edge& stored = edges_.back();
  out_by_node_[stored.source].push_back(index);
  if (directed_) {
    in_by_node_[stored.target].push_back(index);
  } else {
    out_by_node_[stored.target].push_back(index);
  }
  return stored;
}

const std::vector<std::size_t>* Graph::find_out(const NodeId& id) const {
  auto it = out_by_node_.find(id);
  return it == out_by_node_.end() ? nullptr : &it->second;
}

const std::vector<std::size_t>* Graph::find_in(const NodeId& id) const {
  auto it = in_by_node_.find(id);
  return it == in_by_node_.end() ? nullptr : &it->second;
}

std::vector<NodeId> Graph::out_neighbors(const NodeId& id) const {
  if (!has_node(id)) throw ArgumentError("unknown node id: '" + id + "'");
  std::set<NodeId> unique;
  if (const auto* out = find_out(id)) {
    for (std::size_t index : *out) {
      const Edge& e = edges_[index];
      unique.insert(e.source == id ? e.target : e.source);
    }
  }
  return {unique.begin(), unique.end()};
}

std::vector<NodeId> Graph::undirected_neighbors(const NodeId& id) const {
  if (!has_node(id)) throw ArgumentError("unknown node id: '" + id + "'");
  std::set<NodeId> unique;
  if (const auto* out = find_out(id)) {
    for (std::size_t index : *out) {
      const Edge& e = edges_[index];
      unique.insert(e.source == id ? e.target : e.source);
    }
  }
  if (directed_) {
    if (const auto* in = find_in(id)) {
      for (std::size_t index : *in) unique.insert(edges_[index].source);
    }
  }
  return {unique.begin(), unique.end()};
}

std::size_t Graph::degree(const NodeId& id) const {
  if (!has_node(id)) throw ArgumentError("unknown node id: '" + id + "'");
  std::size_t total = 0;
  if (const auto* out = find_out(id)) total += out->size();
  if (directed_) {
    if (const auto* in = find_in(id)) total += in->size();
  }
  return total;
}

std::vector<std::size_t> Graph::out_edge_indices(const NodeId& id) const {
  if (!has_node(id)) throw ArgumentError("unknown node id: '" + id + "'");
  if (const auto* out = find_out(id)) return *out;
  return {};
}

}  // namespace emograph
