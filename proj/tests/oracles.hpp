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


// Reference implementations used only by tests. They share no code with the
// library: graphs are rebuilt from the defining formulas, cycles are counted
// as closed walks, and automorphisms are found by plain backtracking.

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

// Edge classes in census order: outer, spoke1, middle, spoke2, inner.
enum Cls { kOuter = 0, kSpoke1, kMiddle, kSpoke2, kInner };

struct Graph {
  int layers = 0;  // 3 for TC, 2 for Petersen
  int n = 0;
  std::vector<std::set<int>> adj;
  std::map<std::pair<int, int>, int> cls;

  void add(int u, int v, int c) {
    if (u > v) std::swap(u, v);
    adj[u].insert(v);
    adj[v].insert(u);
    cls[{u, v}] = c;
  }
  int edge_class(int u, int v) const {
    return cls.at({std::min(u, v), std::max(u, v)});
  }
  int layer(int v) const { return v / n; }
};

inline Graph tc(int n, int k) {
  Graph g{3, n, std::vector<std::set<int>>(3 * n), {}};
  for (int i = 0; i < n; ++i) {
    g.add(i, (i + 1) % n, kOuter);
    g.add(i, n + i, kSpoke1);
    g.add(n + i, n + (i + n / 2) % n, kMiddle);
    g.add(n + i, 2 * n + i, kSpoke2);
    g.add(2 * n + i, 2 * n + (i + k) % n, kInner);
  }
  return g;
}

inline Graph petersen(int n, int k) {
  Graph g{2, n, std::vector<std::set<int>>(2 * n), {}};
  for (int i = 0; i < n; ++i) {
    g.add(i, (i + 1) % n, kOuter);
    g.add(i, n + i, kSpoke1);
    g.add(n + i, n + (i + k) % n, kInner);
  }
  return g;
}

// Census row as {count, OV, MV, IV, OE, S1E, ME, S2E, IE}. Every simple
// cycle of length l is seen 2l times as a closed walk (l starts, two
// directions), so totals are divided by 2l at the end.
using Row = std::array<std::int64_t, 9>;

inline Row census(const Graph& g, int l) {
  Row sum{};
  std::vector<int> path;
  std::vector<char> used(g.adj.size(), 0);
  auto tally = [&] {
    sum[0] += 1;
    for (int v : path) sum[1 + g.layer(v)] += 1;
    for (std::size_t i = 0; i < path.size(); ++i) {
      int c = g.edge_class(path[i], path[(i + 1) % path.size()]);
      sum[4 + c] += 1;
    }
  };
  auto dfs = [&](auto&& self, int v) -> void {
    if (static_cast<int>(path.size()) == l) {
      if (g.adj[v].count(path.front())) tally();
      return;
    }
    for (int w : g.adj[v]) {
      if (used[w]) continue;
      used[w] = 1;
      path.push_back(w);
      self(self, w);
      path.pop_back();
      used[w] = 0;
    }
  };
  for (int s = 0; s < static_cast<int>(g.adj.size()); ++s) {
    used[s] = 1;
    path = {s};
    dfs(dfs, s);
    used[s] = 0;
  }
  for (auto& x : sum) x /= 2 * l;
  // Petersen spokes and inner edges sit at class slots 1 and 4; the layer
  // slot for Petersen inner vertices is index 1 (MV) and is moved to IV.
  if (g.layers == 2) {
    sum[3] = sum[2];
    sum[2] = 0;
  }
  return sum;
}

// Number of bijections of {0..N-1} that map edges to edges. Vertices are
// assigned in order and each partial map is checked against all earlier
// assignments; no refinement or symmetry pruning is used.
inline std::uint64_t automorphism_count(const std::vector<std::set<int>>& adj) {
  const int nv = static_cast<int>(adj.size());
  std::vector<int> image(nv, -1);
  std::vector<char> taken(nv, 0);
  std::uint64_t count = 0;
  auto go = [&](auto&& self, int v) -> void {
    if (v == nv) {
      ++count;
      return;
    }
    for (int w = 0; w < nv; ++w) {
      if (taken[w]) continue;
      bool ok = adj[v].size() == adj[w].size();
      for (int u = 0; ok && u < v; ++u) {
        ok = adj[v].count(u) == adj[w].count(image[u]);
      }
      if (!ok) continue;
      image[v] = w;
      taken[w] = 1;
      self(self, v + 1);
      taken[w] = 0;
    }
  };
  go(go, 0);
  return count;
}

}  // namespace oracle
