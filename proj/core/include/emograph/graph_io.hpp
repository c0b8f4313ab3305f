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

#ifndef EMOGRAPH_GRAPH_IO_HPP_
#define EMOGRAPH_GRAPH_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "emograph/graph.hpp"

namespace emograph {

// Canonical JSON document for a graph. Field order is fixed and nodes are
// emitted in ascending id order, so identical graphs serialize to identical
// bytes. Throws ContractError when a node lacks credibility/susceptibility
// (serialize only fully attributed graphs).
std::string serialize_graph(const Graph& graph);

// Inverse of serialize_graph. Validates schema version, endpoint existence,
// attribute ranges and enum values; errors name the offending record.
Graph deserialize_graph(std::string_view text);

void write_graph_file(const Graph& graph, const std::filesystem::path& path);
Graph read_graph_file(const std::filesystem::path& path);

// Graphviz document: one node per line with an emotion-keyed color, edges
// labeled with their kind.
std::string to_dot(const Graph& graph);

// Small shared file helpers.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path,
                     std::string_view content);

}  // namespace emograph

#endif  // EMOGRAPH_GRAPH_IO_HPP_
