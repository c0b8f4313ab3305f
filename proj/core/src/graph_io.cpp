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

#include "emograph/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "emograph/errors.hpp"

namespace emograph {

using ordered_json = nlohmann::ordered_json;

namespace {

void require_unit_interval(double value, const std::string& what) {
  if (!(value >= 0.0 && value <= 1.0))
    throw ParseError(what + " out of range [0, 1]");
}

std::string_view emotion_color(EmotionLabel label) {
  switch (label) {
    case EmotionLabel::Positive: return "green";
    case EmotionLabel::Neutral: return "gray";
    case EmotionLabel::Negative: return "red";
  }
  return "gray";
}

}  // namespace

std::string serialize_graph(const Graph& graph) {
  ordered_json doc;
  doc["schema_version"] = Graph::kSchemaVersion;
  doc["directed"] = graph.directed();
  doc["provenance"] = to_string(graph.provenance());
  doc["seed"] = graph.seed();

  auto& nodes = doc["nodes"] = ordered_json::array();
  for (const auto& [id, state] : graph.nodes()) {
    if (!state.credibility.has_value())
      throw ContractError("node '" + id + "' has no credibility; attribute "
                          "the graph before serializing");
    if (!state.susceptibility.has_value())
      throw ContractError("node '" + id + "' has no susceptibility; attribute "
                          "the graph before serializing");
    ordered_json n;
    n["id"] = id;
    n["emotion"] = to_string(state.emotion);
    n["credibility"] = *state.credibility;
    n["susceptibility"] = *state.susceptibility;
    n["post_frequency"] = state.post_frequency;
    if (state.activation_round) n["activation_round"] = *state.activation_round;
    if (state.account_age) n["account_age"] = *state.account_age;
    nodes.push_back(std::move(n));
  }

  auto& edges = doc["edges"] = ordered_json::array();
  for (const Edge& e : graph.edges()) {
    ordered_json j;
    j["source"] = e.source;
    j["target"] = e.target;
    j["kind"] = to_string(e.kind);
    j["weight"] = e.weight;
    if (e.depth) j["depth"] = *e.depth;
    if (e.text_length) j["text_length"] = *e.text_length;
    if (e.emotion) j["emotion"] = to_string(*e.emotion);
    edges.push_back(std::move(j));
  }

  return doc.dump(2) + "\n";
}

Graph deserialize_graph(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("graph document is not valid JSON: ") +
                     e.what());
  }

  try {
    const int version = doc.at("schema_version").get<int>();
    if (version != Graph::kSchemaVersion)
      throw ParseError("unsupported schema_version " +
                       std::to_string(version) + ", expected " +
                       std::to_string(Graph::kSchemaVersion));

    Graph graph(doc.at("directed").get<bool>(),
                provenance_from_string(
                    doc.at("provenance").get<std::string>()),
                doc.at("seed").get<std::uint64_t>());

    std::size_t node_index = 0;
    for (const auto& n : doc.at("nodes")) {
      NodeState state;
      state.id = n.at("id").get<std::string>();
      const std::string where = "node record " + std::to_string(node_index) +
                                " ('" + state.id + "')";
      state.emotion = emotion_from_string(n.at("emotion").get<std::string>());
      state.credibility = n.at("credibility").get<double>();
      require_unit_interval(*state.credibility, where + " credibility");
      state.susceptibility = n.at("susceptibility").get<double>();
      require_unit_interval(*state.susceptibility, where + " susceptibility");
      state.post_frequency = n.at("post_frequency").get<int>();
      if (state.post_frequency < 0)
        throw ParseError(where + " post_frequency is negative");
      if (n.contains("activation_round")) {
        state.activation_round = n["activation_round"].get<int>();
        if (*state.activation_round < 0)
          throw ParseError(where + " activation_round is negative");
      }
      if (n.contains("account_age"))
        state.account_age = n["account_age"].get<double>();
      try {
        graph.add_node(std::move(state));
      } catch (const ArgumentError& e) {
        throw ParseError(where + ": " + e.what());
      }
      ++node_index;
    }

    std::size_t edge_index = 0;
    for (const auto& j : doc.at("edges")) {
      const std::string where = "edge record " + std::to_string(edge_index);
      Edge e;
      e.source = j.at("source").get<std::string>();
      e.target = j.at("target").get<std::string>();
      e.kind = edge_kind_from_string(j.at("kind").get<std::string>());
      e.weight = j.at("weight").get<double>();
      if (j.contains("depth")) {
        e.depth = j["depth"].get<int>();
        if (*e.depth < 0) throw ParseError(where + " depth is negative");
      }
      if (j.contains("text_length")) {
        e.text_length = j["text_length"].get<int>();
        if (*e.text_length < 0)
          throw ParseError(where + " text_length is negative");
      }
      if (j.contains("emotion"))
        e.emotion = emotion_from_string(j["emotion"].get<std::string>());
      try {
        graph.add_edge(std::move(e));
      } catch (const ArgumentError& err) {
        throw ParseError(where + ": " + err.what());
      }
      ++edge_index;
    }
    return graph;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed graph document: ") + e.what());
  }
}

void write_graph_file(const Graph& graph, const std::filesystem::path& path) {
  write_text_file(path, serialize_graph(graph));
}

Graph read_graph_file(const std::filesystem::path& path) {
  return deserialize_graph(read_text_file(path));
}

std::string to_dot(const Graph& graph) {
  std::ostringstream out;
  const char* arrow = graph.directed() ? " -> " : " -- ";
  out << (graph.directed() ? "digraph" : "graph") << " emograph {\n";
  for (const auto& [id, state] : graph.nodes()) {
    out << "  \"" << id << "\" [color=\"" << emotion_color(state.emotion)
        << "\"];\n";
  }
  for (const Edge& e : graph.edges()) {
    out << "  \"" << e.source << "\"" << arrow << "\"" << e.target
        << "\" [label=\"" << to_string(e.kind) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path,
                     std::string_view content) {
  if (path.has_parent_path())
    std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write file: " + path.string());
  out << content;
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace emograph
