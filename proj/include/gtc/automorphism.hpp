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

// Exact automorphism groups of small graphs by color refinement and
// individualization. Layer and edge-class labels play no part in the search.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gtc/graph.hpp"

namespace gtc {

// A vertex permutation known to preserve adjacency of the graph it was
// checked against.
class Permutation {
 public:
  static Permutation identity(int n);
  // Throws ValidationError unless `image` is a bijection on [0, |V|) that
  // maps edges to edges.
  static Permutation checked(const Adjacency& adj, std::vector<VertexId> image);

  VertexId operator()(VertexId v) const { return image_[v]; }
  int size() const { return static_cast<int>(image_.size()); }
  const std::vector<VertexId>& image() const { return image_; }
  bool is_identity() const;

  bool operator==(const Permutation&) const = default;

 private:
  explicit Permutation(std::vector<VertexId> image) : image_(std::move(image)) {}

  std::vector<VertexId> image_;
};

bool is_automorphism(const Adjacency& adj, std::span<const VertexId> image);

// color[v] for every vertex.
using Coloring = std::vector<int>;

// Iterates "same color and same multiset of neighbor colors" to a fixed
// point. The result is equitable, renumbered 0..c-1, and depends only on the
// input coloring up to isomorphism: colors are ordered by (old color,
// sorted neighbor colors).
Coloring refine_colors(const Adjacency& adj, Coloring initial);
Coloring refine_colors(const LabeledGraph& g, Coloring initial);

struct AutOptions {
  int max_vertices = 600;
  std::int64_t node_budget = 10'000'000;

  // Defaults, with node_budget overridden by GTC_NODE_BUDGET when set.
  static AutOptions from_env();
};

// Unlabeled group data.
struct GroupSummary {
  std::uint64_t order = 1;
  // One automorphism per orbit point of each point stabilizer along the base,
  // i.e. a strong generating set. Identity elements are never included.
  std::vector<Permutation> generators;
  std::vector<VertexId> base;
  std::int64_t search_nodes = 0;
};

// Throws ResourceError when |V| exceeds max_vertices or the search visits
// more than node_budget tree nodes.
GroupSummary automorphism_group(const Adjacency& adj,
                                const AutOptions& options = {});

// Orbits of the group generated by `generators`, each sorted, ordered by
// smallest member.
std::vector<std::vector<VertexId>> vertex_orbits(
    int num_vertices, std::span<const Permutation> generators);

// Orbits on edge indices of g. Throws ValidationError if a generator does not
// map some edge of g to an edge.
std::vector<std::vector<int>> edge_orbits(const LabeledGraph& g,
                                          std::span<const Permutation> generators);

struct AutReport {
  std::uint64_t group_order = 1;
  std::vector<Permutation> generators;
  std::vector<std::vector<VertexId>> vertex_orbits;
  std::vector<std::vector<int>> edge_orbits;
  bool vertex_transitive = false;
  bool edge_transitive = false;
  std::int64_t search_nodes = 0;
};

AutReport automorphisms(const LabeledGraph& g, const AutOptions& options = {});

// {n, k, family, group_order, vertex_orbits: [sizes], edge_orbits: [sizes],
//  vertex_transitive, edge_transitive}
std::string aut_report_json(const LabeledGraph& g, const AutReport& report);

}  // namespace gtc
