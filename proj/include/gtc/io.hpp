// Copyright 2026 The gtc Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gtc/graph.hpp"

namespace gtc {

enum class GraphFormat { Graph6, Dot, EdgeList, Json };

// "graph6", "dot", "edges" / "edge-list", "json". Throws FormatError otherwise.
GraphFormat graph_format_from_string(std::string_view name);

// Serializes g under the fixed vertex ordering. graph6 output carries no
// trailing newline; the other formats end with one.
std::string export_graph(const LabeledGraph& g, GraphFormat format);
std::string export_graph(const LabeledGraph& g, std::string_view format);

// Standard graph6 encoding of an unlabeled simple graph.
std::string encode_graph6(const Adjacency& adj);
// Inverse of encode_graph6; neighbor lists come back sorted. Accepts an
// optional ">>graph6<<" header and trailing whitespace.
Adjacency decode_graph6(std::string_view text);

struct LabeledEdge {
  VertexRef u;
  VertexRef v;
  EdgeClass cls;

  bool operator==(const LabeledEdge&) const = default;
};

// Parses lines of the form "a3 a4 OuterEdge". The family decides the layer
// letters. Blank lines are skipped.
std::vector<LabeledEdge> parse_edge_list(std::string_view text, Family family);

// Rebuilds the graph named by the "params" object and checks that the listed
// vertices and edges agree with it exactly. Throws FormatError on mismatch.
LabeledGraph parse_graph_json(std::string_view text);

}  // namespace gtc
