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


#include <gtest/gtest.h>

#include "gtc/error.hpp"
#include "gtc/graph.hpp"
#include "gtc/io.hpp"

namespace gtc {
namespace {

// Reference strings produced by networkx.to_graph6_bytes on graphs built
// directly from the defining edge formulas.
TEST(Graph6, FrozenEncodings) {
  EXPECT_EQ(export_graph(build_petersen(PetersenParams(5, 2)), "graph6"),
            "IheA@GUAo");
  EXPECT_EQ(export_graph(build_tc(GtcParams(4, 1)), "graph6"), "Kl`@OgG@GC_L");
  EXPECT_EQ(export_graph(build_tc(GtcParams(10, 3)), "graph6"),
            "]hCGGC@_K?G?G?C?@??GO?`?@A?@A??`??G??@???C???GC??GC??CA??@?_??HC?"
            "??cO??@G_");
}

TEST(Graph6, RoundTrip) {
  for (auto [n, k] : {std::pair{4, 1}, {10, 3}, {30, 7}, {40, 19}}) {
    LabeledGraph g = build_tc(GtcParams(n, k));
    Adjacency back = decode_graph6(encode_graph6(g.adjacency()));
    EXPECT_EQ(back, g.adjacency());
  }
  // 63 or more vertices needs the long size prefix.
  LabeledGraph big = build_tc(GtcParams(24, 5));
  std::string enc = encode_graph6(big.adjacency());
  EXPECT_EQ(enc.front(), '~');
  EXPECT_EQ(decode_graph6(enc), big.adjacency());
}

TEST(Graph6, RejectsMalformed) {
  EXPECT_THROW(decode_graph6(""), FormatError);
  EXPECT_THROW(decode_graph6("IheA@GUA"), FormatError);    // truncated
  EXPECT_THROW(decode_graph6("IheA@GUAoo"), FormatError);  // too long
  EXPECT_THROW(decode_graph6("IheA@GUAp"), FormatError);   // padding bit set
  EXPECT_THROW(decode_graph6("I\x01"), FormatError);
}

TEST(EdgeList, RoundTrip) {
  LabeledGraph g = build_tc(GtcParams(12, 5));
  auto edges = parse_edge_list(export_graph(g, GraphFormat::EdgeList),
                               Family::TutteCoxeter);
  ASSERT_EQ(static_cast<int>(edges.size()), g.num_edges());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = g.edges()[i];
    EXPECT_EQ(edges[i].u, g.vertex(e.u));
    EXPECT_EQ(edges[i].v, g.vertex(e.v));
    EXPECT_EQ(edges[i].cls, e.cls);
  }
}

TEST(EdgeList, RejectsMalformed) {
  EXPECT_THROW(parse_edge_list("a0 a1\n", Family::TutteCoxeter), FormatError);
  EXPECT_THROW(parse_edge_list("a0 x1 OuterEdge\n", Family::TutteCoxeter),
               FormatError);
  EXPECT_THROW(parse_edge_list("a0 a1 Bogus\n", Family::TutteCoxeter),
               FormatError);
}

TEST(Json, RoundTrip) {
  for (Family f : {Family::TutteCoxeter, Family::Petersen}) {
    LabeledGraph g = build_graph(f, 10, 3);
    LabeledGraph back = parse_graph_json(export_graph(g, GraphFormat::Json));
    EXPECT_EQ(back.name(), g.name());
    EXPECT_EQ(back.edges(), g.edges());
  }
}

TEST(Json, RejectsInconsistent) {
  EXPECT_THROW(parse_graph_json("not json"), FormatError);
  EXPECT_THROW(parse_graph_json(R"({"params":{"family":"cube","n":4,"k":1}})"),
               FormatError);
  std::string text = export_graph(build_tc(GtcParams(4, 1)), GraphFormat::Json);
  std::string tampered = text;
  auto pos = tampered.find("\"InnerEdge\"");
  ASSERT_NE(pos, std::string::npos);
  tampered.replace(pos, 11, "\"OuterEdge\"");
  EXPECT_THROW(parse_graph_json(tampered), FormatError);
}

TEST(Dot, MentionsEveryEdge) {
  LabeledGraph g = build_petersen(PetersenParams(5, 2));
  std::string dot = export_graph(g, GraphFormat::Dot);
  EXPECT_NE(dot.find("u0 -- v0 [class=Spoke1]"), std::string::npos);
  EXPECT_NE(dot.find("v0 -- v2 [class=InnerEdge]"), std::string::npos);
}

TEST(Format, UnknownName) {
  EXPECT_THROW(graph_format_from_string("png"), FormatError);
  EXPECT_EQ(graph_format_from_string("edge-list"), GraphFormat::EdgeList);
}

}  // namespace
}  // namespace gtc
