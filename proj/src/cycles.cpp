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

#include "gtc/cycles.hpp"

#include <algorithm>
#include <string>

#include <omp.h>

#include "gtc/error.hpp"

namespace gtc {

namespace {

void check_bound(int l_max) {
  if (l_max < 3) throw ParamError("l_max must be at least 3");
}

// All cycles whose smallest vertex is `root`, with at most l_max vertices.
void cycles_from_root(const LabeledGraph& g, VertexId root, int l_max,
                      std::vector<char>& on_path, std::vector<Cycle>& out) {
  struct Frame {
    VertexId vertex;
    int next_slot;
  };
  std::vector<VertexId> path{root};
  std::vector<Frame> stack{{root, 0}};
  on_path[root] = 1;
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next_slot == 3) {
      on_path[top.vertex] = 0;
      path.pop_back();
      stack.pop_back();
      continue;
    }
    const VertexId w = g.neighbors(top.vertex)[top.next_slot++];
    if (w == root) {
      if (path.size() >= 3 && path[1] < path.back()) out.push_back({path});
    } else if (w > root && !on_path[w] &&
               static_cast<int>(path.size()) < l_max) {
      on_path[w] = 1;
      path.push_back(w);
      stack.push_back({w, 0});
    }
  }
}

CyclesByLength bucket(int l_max, std::vector<std::vector<Cycle>>& per_root) {
  CyclesByLength out;
  for (int l = 3; l <= l_max; ++l) out[l];
  for (auto& cycles : per_root) {
    for (auto& c : cycles) out[c.length()].push_back(std::move(c));
  }
  for (auto& [l, cycles] : out) std::sort(cycles.begin(), cycles.end());
  return out;
}

}  // namespace

Cycle canonical_cycle(std::span<const VertexId> walk) {
  const auto len = walk.size();
  if (len == 0) return {};
  const auto start = static_cast<std::size_t>(
      std::min_element(walk.begin(), walk.end()) - walk.begin());
  const VertexId forward = walk[(start + 1) % len];
  const VertexId backward = walk[(start + len - 1) % len];
  Cycle c;
  c.vertices.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    const auto pos = forward <= backward ? (start + i) % len
                                         : (start + len - i) % len;
    c.vertices.push_back(walk[pos]);
  }
  return c;
}

bool is_simple_cycle(const LabeledGraph& g, std::span<const VertexId> walk) {
  try {
    check_cycle(g, walk);
    return true;
  } catch (const ValidationError&) {
    return false;
  }
}

void check_cycle(const LabeledGraph& g, std::span<const VertexId> walk) {
  if (walk.size() < 3) throw ValidationError("cycle shorter than 3");
  std::vector<char> seen(g.num_vertices(), 0);
  for (std::size_t i = 0; i < walk.size(); ++i) {
    const VertexId v = walk[i];
    if (v < 0 || v >= g.num_vertices()) {
      throw ValidationError("vertex id out of range");
    }
    if (seen[v]) throw ValidationError("repeated vertex " + g.label(v));
    seen[v] = 1;
    const VertexId next = walk[(i + 1) % walk.size()];
    if (next < 0 || next >= g.num_vertices() || !g.adjacent(v, next)) {
      throw ValidationError("non-edge after " + g.label(v));
    }
  }
}

CyclesByLength enumerate_cycles(const LabeledGraph& g, int l_max, int jobs) {
  check_bound(l_max);
  const int n = g.num_vertices();
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  std::vector<std::vector<Cycle>> per_root(n);
#pragma omp parallel num_threads(threads)
  {
    std::vector<char> on_path(n, 0);
#pragma omp for schedule(dynamic, 4)
    for (VertexId root = 0; root < n; ++root) {
      cycles_from_root(g, root, l_max, on_path, per_root[root]);
    }
  }
  return bucket(l_max, per_root);
}

CyclesByLength enumerate_cycles_serial(const LabeledGraph& g, int l_max) {
  check_bound(l_max);
  const int n = g.num_vertices();
  std::vector<std::vector<Cycle>> per_root(n);
  std::vector<char> on_path(n, 0);
  for (VertexId root = 0; root < n; ++root) {
    cycles_from_root(g, root, l_max, on_path, per_root[root]);
  }
  return bucket(l_max, per_root);
}

CycleProfile profile(const LabeledGraph& g, const Cycle& c) {
  check_cycle(g, c.vertices);
  CycleProfile p;
  const auto len = c.vertices.size();
  for (std::size_t i = 0; i < len; ++i) {
    const VertexId v = c.vertices[i];
    switch (g.layer(v)) {
      case Layer::Outer: ++p.ov; break;
      case Layer::Middle: ++p.mv; break;
      case Layer::Inner: ++p.iv; break;
    }
    switch (*g.edge_class(v, c.vertices[(i + 1) % len])) {
      case EdgeClass::OuterEdge: ++p.oe; break;
      case EdgeClass::Spoke1: ++p.s1e; break;
      case EdgeClass::MiddleEdge: ++p.me; break;
      case EdgeClass::Spoke2: ++p.s2e; break;
      case EdgeClass::InnerEdge: ++p.ie; break;
    }
  }
  return p;
}

}  // namespace gtc
