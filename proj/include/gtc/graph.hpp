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

// Generalized Tutte-Coxeter graphs TC(n,k) and generalized Petersen graphs
// P(n,k) with vertex-layer and edge-class labels.
//
// Vertex ordering is fixed for every graph built here: the outer block
// (a_i or u_i) by index, then the middle block (b_i, TC only), then the inner
// block (c_i or v_i). Vertex ids are positions in that ordering. All
// serialization and canonical forms use it.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gtc {

using VertexId = int;
using Adjacency = std::vector<std::vector<VertexId>>;

enum class Family : std::uint8_t { TutteCoxeter, Petersen };

enum class Layer : std::uint8_t { Outer, Middle, Inner };

enum class EdgeClass : std::uint8_t {
  OuterEdge,
  Spoke1,
  MiddleEdge,
  Spoke2,
  InnerEdge,
};

inline constexpr std::array<EdgeClass, 5> kEdgeClasses = {
    EdgeClass::OuterEdge, EdgeClass::Spoke1, EdgeClass::MiddleEdge,
    EdgeClass::Spoke2, EdgeClass::InnerEdge};

std::string_view to_string(Family family);
std::string_view to_string(Layer layer);
std::string_view to_string(EdgeClass cls);

// Accepts "tc" / "petersen" (and the long spellings used in JSON output).
std::optional<Family> family_from_string(std::string_view s);
std::optional<Layer> layer_from_string(std::string_view s);
std::optional<EdgeClass> edge_class_from_string(std::string_view s);

// The only edge class that can join two vertices of the given TC layers.
std::optional<EdgeClass> edge_class_between(Layer a, Layer b);

// Parameters of TC(n,k): n even, n >= 4, 1 <= k < n/2.
class GtcParams {
 public:
  // Throws ParamError naming the violated constraint.
  GtcParams(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }

  auto operator<=>(const GtcParams&) const = default;

 private:
  int n_;
  int k_;
};

// Parameters of P(n,k): n >= 3, 1 <= k < n/2.
class PetersenParams {
 public:
  PetersenParams(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }

  auto operator<=>(const PetersenParams&) const = default;

 private:
  int n_;
  int k_;
};

struct VertexRef {
  Layer layer;
  int index;

  auto operator<=>(const VertexRef&) const = default;
};

// Undirected edge stored with u < v.
struct Edge {
  VertexId u;
  VertexId v;
  EdgeClass cls;

  bool operator==(const Edge&) const = default;
};

// Immutable simple cubic graph with layer and edge-class labels.
class LabeledGraph {
 public:
  Family family() const { return family_; }
  int n() const { return n_; }
  int k() const { return k_; }

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  // Sorted by (u, v).
  const std::vector<Edge>& edges() const { return edges_; }

  // The three neighbors of v in increasing id order.
  std::span<const VertexId, 3> neighbors(VertexId v) const { return adj_[v]; }

  bool adjacent(VertexId u, VertexId v) const;
  // Index into edges(), if u and v are adjacent.
  std::optional<int> edge_index(VertexId u, VertexId v) const;
  std::optional<EdgeClass> edge_class(VertexId u, VertexId v) const;

  VertexRef vertex(VertexId v) const;
  // Throws ParamError if the reference is not a vertex of this graph.
  VertexId id(VertexRef ref) const;
  Layer layer(VertexId v) const { return vertex(v).layer; }
  const std::vector<Layer>& layers() const;

  // Layers present in this family, in block order.
  std::span<const Layer> layer_set() const;
  // Edge classes present in this family.
  std::span<const EdgeClass> edge_class_set() const;

  // "a3", "b0", "c7" for TC; "u3", "v7" for Petersen.
  std::string label(VertexId v) const;
  std::optional<VertexId> from_label(std::string_view label) const;

  // "TC(10,3)" or "P(5,2)".
  std::string name() const;

  Adjacency adjacency() const;

 private:
  friend LabeledGraph build_tc(const GtcParams& params);
  friend LabeledGraph build_petersen(const PetersenParams& params);

  LabeledGraph(Family family, int n, int k, int num_layers);
  void add_edge(VertexRef a, VertexRef b, EdgeClass cls);
  void finalize();

  Family family_;
  int n_;
  int k_;
  std::vector<std::array<VertexId, 3>> adj_;
  std::vector<std::array<int, 3>> slot_edge_;
  std::vector<Layer> layers_;
  std::vector<Edge> edges_;
};

LabeledGraph build_tc(const GtcParams& params);
LabeledGraph build_petersen(const PetersenParams& params);

// Builds either family; throws ParamError on invalid (n, k).
LabeledGraph build_graph(Family family, int n, int k);

// The subgraph on inner vertices is a disjoint union of d = gcd(n,k) cycles of
// length n/d. Each component lists c_r, c_{r+k}, c_{r+2k}, ... for r < d.
struct InnerStructure {
  int d;
  int component_length;
  std::vector<std::vector<VertexRef>> components;
};

InnerStructure inner_structure(const GtcParams& params);

}  // namespace gtc
