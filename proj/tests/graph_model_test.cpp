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


#include <numeric>

#include <gtest/gtest.h>

#include "gtc/error.hpp"
#include "gtc/graph.hpp"
#include "oracles.hpp"

namespace gtc {
namespace {

TEST(GtcParams, RejectsInvalid) {
  EXPECT_THROW(GtcParams(7, 2), ParamError);
  EXPECT_THROW(GtcParams(2, 1), ParamError);
  EXPECT_THROW(GtcParams(10, 0), ParamError);
  EXPECT_THROW(GtcParams(10, 5), ParamError);
  EXPECT_NO_THROW(GtcParams(10, 4));
  try {
    GtcParams(7, 2);
    FAIL();
  } catch (const ParamError& e) {
    EXPECT_STREQ(e.what(), "n must be even");
  }
}

TEST(PetersenParams, RejectsInvalid) {
  EXPECT_THROW(PetersenParams(2, 1), ParamError);
  EXPECT_THROW(PetersenParams(5, 3), ParamError);
  EXPECT_NO_THROW(PetersenParams(5, 2));
  EXPECT_NO_THROW(PetersenParams(3, 1));
}

TEST(BuildTc, SizesAndClasses) {
  for (int n = 4; n <= 20; n += 2) {
    for (int k = 1; 2 * k < n; ++k) {
      LabeledGraph g = build_tc(GtcParams(n, k));
      EXPECT_EQ(g.num_vertices(), 3 * n);
      EXPECT_EQ(g.num_edges(), 9 * n / 2);
      int per_class[5] = {};
      for (const Edge& e : g.edges()) ++per_class[static_cast<int>(e.cls)];
      EXPECT_EQ(per_class[0], n);
      EXPECT_EQ(per_class[1], n);
      EXPECT_EQ(per_class[2], n / 2);
      EXPECT_EQ(per_class[3], n);
      EXPECT_EQ(per_class[4], n);
    }
  }
}

TEST(BuildTc, MatchesDefiningFormulas) {
  for (auto [n, k] : {std::pair{4, 1}, {10, 3}, {12, 5}, {16, 6}}) {
    LabeledGraph g = build_tc(GtcParams(n, k));
    oracle::Graph ref = oracle::tc(n, k);
    for (int v = 0; v < 3 * n; ++v) {
      std::set<int> got(g.neighbors(v).begin(), g.neighbors(v).end());
      EXPECT_EQ(got, ref.adj[v]) << g.label(v);
      for (int w : ref.adj[v]) {
        EXPECT_EQ(static_cast<int>(*g.edge_class(v, w)), ref.edge_class(v, w));
      }
    }
  }
}

TEST(BuildPetersen, MatchesDefiningFormulas) {
  for (auto [n, k] : {std::pair{4, 1}, {5, 2}, {10, 3}, {24, 5}}) {
    LabeledGraph g = build_petersen(PetersenParams(n, k));
    EXPECT_EQ(g.num_edges(), 3 * n);
    oracle::Graph ref = oracle::petersen(n, k);
    for (int v = 0; v < 2 * n; ++v) {
      std::set<int> got(g.neighbors(v).begin(), g.neighbors(v).end());
      EXPECT_EQ(got, ref.adj[v]);
    }
    EXPECT_EQ(g.edge_class(0, n), EdgeClass::Spoke1);
    EXPECT_EQ(g.edge_class(n, n + k), EdgeClass::InnerEdge);
  }
}

TEST(LabeledGraph, LabelsAndIds) {
  LabeledGraph g = build_tc(GtcParams(10, 3));
  EXPECT_EQ(g.name(), "TC(10,3)");
  EXPECT_EQ(g.label(3), "a3");
  EXPECT_EQ(g.label(13), "b3");
  EXPECT_EQ(g.label(23), "c3");
  EXPECT_EQ(g.from_label("c7"), 27);
  EXPECT_FALSE(g.from_label("u1").has_value());
  EXPECT_FALSE(g.from_label("a10").has_value());
  EXPECT_EQ(g.id({Layer::Middle, 4}), 14);
  EXPECT_EQ(g.vertex(25).layer, Layer::Inner);
  EXPECT_TRUE(g.adjacent(20, 23));
  EXPECT_FALSE(g.adjacent(20, 21));
  EXPECT_FALSE(g.edge_class(0, 5).has_value());
  EXPECT_EQ(g.layer_set().size(), 3u);
  EXPECT_EQ(g.edge_class_set().size(), 5u);

  LabeledGraph p = build_petersen(PetersenParams(5, 2));
  EXPECT_EQ(p.name(), "P(5,2)");
  EXPECT_EQ(p.label(7), "v2");
  EXPECT_EQ(p.layer_set().size(), 2u);
  EXPECT_EQ(p.edge_class_set().size(), 3u);
  EXPECT_THROW(p.id({Layer::Middle, 0}), ParamError);
}

TEST(LabeledGraph, EdgeIndexIsConsistent) {
  LabeledGraph g = build_tc(GtcParams(14, 4));
  for (int i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edges()[i];
    EXPECT_LT(e.u, e.v);
    EXPECT_EQ(g.edge_index(e.u, e.v), i);
    EXPECT_EQ(g.edge_index(e.v, e.u), i);
  }
}

TEST(InnerStructure, ComponentsFollowGcd) {
  for (int n = 4; n <= 30; n += 2) {
    for (int k = 1; 2 * k < n; ++k) {
      InnerStructure s = inner_structure(GtcParams(n, k));
      int d = std::gcd(n, k);
      EXPECT_EQ(s.d, d);
      EXPECT_EQ(s.component_length, n / d);
      ASSERT_EQ(static_cast<int>(s.components.size()), d);
      for (const auto& comp : s.components) {
        EXPECT_EQ(static_cast<int>(comp.size()), n / d);
        for (const VertexRef& r : comp) EXPECT_EQ(r.layer, Layer::Inner);
      }
    }
  }
}

TEST(EnumStrings, RoundTrip) {
  for (EdgeClass c : kEdgeClasses) {
    EXPECT_EQ(edge_class_from_string(to_string(c)), c);
  }
  EXPECT_EQ(family_from_string("tc"), Family::TutteCoxeter);
  EXPECT_EQ(family_from_string("petersen"), Family::Petersen);
  EXPECT_FALSE(family_from_string("cube").has_value());
  EXPECT_EQ(edge_class_between(Layer::Middle, Layer::Inner), EdgeClass::Spoke2);
}

}  // namespace
}  // namespace gtc
