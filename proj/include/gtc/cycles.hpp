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

#include <compare>
#include <map>
#include <span>
#include <vector>

#include "gtc/graph.hpp"

namespace gtc {

// A simple cycle stored in canonical form: rotated so the smallest vertex id
// comes first, then oriented so the second vertex is the smaller of that
// vertex's two cycle neighbors.
struct Cycle {
  std::vector<VertexId> vertices;

  int length() const { return static_cast<int>(vertices.size()); }

  auto operator<=>(const Cycle&) const = default;
};

// Canonical form of a closed walk given as a vertex sequence. Does not check
// adjacency; see check_cycle.
Cycle canonical_cycle(std::span<const VertexId> walk);

// True when walk has at least 3 distinct vertices and consecutive vertices
// (cyclically) are adjacent in g.
bool is_simple_cycle(const LabeledGraph& g, std::span<const VertexId> walk);

// Throws ValidationError describing the first defect.
void check_cycle(const LabeledGraph& g, std::span<const VertexId> walk);

// Key l holds the l-cycles, sorted. Every length in [3, l_max] has a key.
using CyclesByLength = std::map<int, std::vector<Cycle>>;

// Depth-first path extension from each root v over vertices greater than v;
// a path closing back at v is emitted once, in the orientation whose second
// vertex is smaller than its last. Roots are distributed over `jobs` OpenMP
// threads (0 means the runtime default). Output does not depend on `jobs`.
CyclesByLength enumerate_cycles(const LabeledGraph& g, int l_max, int jobs = 0);

// Single-threaded reference for enumerate_cycles.
CyclesByLength enumerate_cycles_serial(const LabeledGraph& g, int l_max);

// Per-class vertex and edge counts of one cycle.
struct CycleProfile {
  int ov = 0;
  int mv = 0;
  int iv = 0;
  int oe = 0;
  int s1e = 0;
  int me = 0;
  int s2e = 0;
  int ie = 0;

  int vertex_total() const { return ov + mv + iv; }
  int edge_total() const { return oe + s1e + me + s2e + ie; }

  bool operator==(const CycleProfile&) const = default;
};

// Throws ValidationError if c is not a cycle of g.
CycleProfile profile(const LabeledGraph& g, const Cycle& c);

}  // namespace gtc
