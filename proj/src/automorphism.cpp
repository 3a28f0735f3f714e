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

#include "gtc/automorphism.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>

#include "json.hpp"

#include "gtc/error.hpp"

namespace gtc {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::vector<int>> classes() {
    std::map<int, std::vector<int>> by_root;
    for (int x = 0; x < static_cast<int>(parent_.size()); ++x) {
      by_root[find(x)].push_back(x);
    }
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : by_root) out.push_back(std::move(members));
    return out;
  }

 private:
  std::vector<int> parent_;
};

int num_colors(const Coloring& c) {
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

// Renumbers arbitrary color values to 0..c-1 preserving their order.
Coloring normalize(const Coloring& c) {
  std::vector<int> values(c);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  Coloring out(c.size());
  for (std::size_t v = 0; v < c.size(); ++v) {
    out[v] = static_cast<int>(
        std::lower_bound(values.begin(), values.end(), c[v]) - values.begin());
  }
  return out;
}

Coloring refine(const Adjacency& adj, Coloring color) {
  const int n = static_cast<int>(adj.size());
  std::vector<std::vector<int>> sig(n);
  std::vector<int> order(n);
  int colors = num_colors(color);
  while (true) {
    for (int v = 0; v < n; ++v) {
      auto& s = sig[v];
      s.clear();
      s.push_back(color[v]);
      for (VertexId w : adj[v]) s.push_back(color[w]);
      std::sort(s.begin() + 1, s.end());
    }
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return sig[a] < sig[b]; });
    Coloring next(n);
    int c = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++c;
      next[order[i]] = c;
    }
    const int next_colors = n == 0 ? 0 : c + 1;
    color = std::move(next);
    if (next_colors == colors) return color;
    colors = next_colors;
  }
}

// v alone keeps its color; the rest of its cell moves just after it.
Coloring individualize(const Coloring& color, VertexId v) {
  const int c = color[v];
  Coloring out(color);
  for (std::size_t u = 0; u < out.size(); ++u) {
    if (out[u] > c || (out[u] == c && static_cast<VertexId>(u) != v)) ++out[u];
  }
  return out;
}

// Cell sizes and per-cell neighbor-color multisets of an equitable coloring.
std::vector<int> quotient(const Adjacency& adj, const Coloring& color) {
  const int colors = num_colors(color);
  std::vector<int> size(colors, 0);
  std::vector<int> rep(colors, -1);
  for (std::size_t v = 0; v < color.size(); ++v) {
    if (size[color[v]]++ == 0) rep[color[v]] = static_cast<int>(v);
  }
  std::vector<int> out;
  for (int c = 0; c < colors; ++c) {
    out.push_back(size[c]);
    std::vector<int> nb;
    for (VertexId w : adj[rep[c]]) nb.push_back(color[w]);
    std::sort(nb.begin(), nb.end());
    out.push_back(static_cast<int>(nb.size()));
    out.insert(out.end(), nb.begin(), nb.end());
  }
  return out;
}

bool discrete(const Coloring& color) {
  return num_colors(color) == static_cast<int>(color.size());
}

// Smallest color whose cell has more than one vertex.
int target_cell(const Coloring& color) {
  std::vector<int> size(num_colors(color), 0);
  for (int c : color) ++size[c];
  for (int c = 0; c < static_cast<int>(size.size()); ++c) {
    if (size[c] > 1) return c;
  }
  return -1;
}

class Search {
 public:
  Search(const Adjacency& adj, const AutOptions& options)
      : adj_(adj), options_(options) {}

  GroupSummary run() {
    const int n = static_cast<int>(adj_.size());
    GroupSummary out;
    if (n == 0) return out;
    Coloring color = refine(adj_, Coloring(n, 0));
    while (true) {
      invariants_.push_back(quotient(adj_, color));
      if (discrete(color)) break;
      const int t = target_cell(color);
      VertexId b = 0;
      while (color[b] != t) ++b;
      targets_.push_back(t);
      base_.push_back(b);
      color = refine(adj_, individualize(color, b));
    }
    first_leaf_vertex_.assign(n, -1);
    for (VertexId v = 0; v < n; ++v) first_leaf_vertex_[color[v]] = v;
    transversals_.resize(base_.size());

    explore(0, refine(adj_, Coloring(n, 0)));

    std::uint64_t product = 1;
    for (auto& level : transversals_) {
      product *= level.size() + 1;
      for (auto& [image, perm] : level) out.generators.push_back(std::move(perm));
    }
    if (product != leaves_) {
      throw std::logic_error("automorphism count disagrees with stabilizer chain");
    }
    out.order = leaves_;
    out.base = base_;
    out.search_nodes = nodes_;
    return out;
  }

 private:
  void explore(std::size_t depth, const Coloring& color) {
    if (++nodes_ > options_.node_budget) {
      throw ResourceError("automorphism search exceeded node budget of " +
                          std::to_string(options_.node_budget));
    }
    if (quotient(adj_, color) != invariants_[depth]) return;
    if (depth == base_.size()) {
      leaf(color);
      return;
    }
    const int t = targets_[depth];
    for (VertexId w = 0; w < static_cast<VertexId>(color.size()); ++w) {
      if (color[w] == t) explore(depth + 1, refine(adj_, individualize(color, w)));
    }
  }

  void leaf(const Coloring& color) {
    const int n = static_cast<int>(color.size());
    std::vector<VertexId> by_color(n);
    for (VertexId v = 0; v < n; ++v) by_color[color[v]] = v;
    std::vector<VertexId> image(n);
    for (int c = 0; c < n; ++c) image[first_leaf_vertex_[c]] = by_color[c];
    if (!is_automorphism(adj_, image)) return;
    ++leaves_;
    for (std::size_t d = 0; d < base_.size(); ++d) {
      const VertexId moved = image[base_[d]];
      if (moved == base_[d]) continue;
      if (!transversals_[d].contains(moved)) {
        transversals_[d].emplace(moved, Permutation::checked(adj_, image));
      }
      return;
    }
  }

  const Adjacency& adj_;
  AutOptions options_;
  std::vector<std::vector<int>> invariants_;
  std::vector<int> targets_;
  std::vector<VertexId> base_;
  std::vector<VertexId> first_leaf_vertex_;
  std::vector<std::map<VertexId, Permutation>> transversals_;
  std::uint64_t leaves_ = 0;
  std::int64_t nodes_ = 0;
};

}  // namespace

Permutation Permutation::identity(int n) {
  std::vector<VertexId> image(n);
  std::iota(image.begin(), image.end(), 0);
  return Permutation(std::move(image));
}

Permutation Permutation::checked(const Adjacency& adj,
                                 std::vector<VertexId> image) {
  if (image.size() != adj.size()) {
    throw ValidationError("permutation size does not match graph");
  }
  std::vector<char> hit(image.size(), 0);
  for (VertexId v : image) {
    if (v < 0 || v >= static_cast<VertexId>(image.size()) || hit[v]) {
      throw ValidationError("not a bijection");
    }
    hit[v] = 1;
  }
  if (!is_automorphism(adj, image)) {
    throw ValidationError("permutation does not preserve adjacency");
  }
  return Permutation(std::move(image));
}

bool Permutation::is_identity() const {
  for (std::size_t v = 0; v < image_.size(); ++v) {
    if (image_[v] != static_cast<VertexId>(v)) return false;
  }
  return true;
}

bool is_automorphism(const Adjacency& adj, std::span<const VertexId> image) {
  if (image.size() != adj.size()) return false;
  for (std::size_t v = 0; v < adj.size(); ++v) {
    const auto& target = adj[image[v]];
    if (target.size() != adj[v].size()) return false;
    for (VertexId w : adj[v]) {
      if (std::find(target.begin(), target.end(), image[w]) == target.end()) {
        return false;
      }
    }
  }
  return true;
}

Coloring refine_colors(const Adjacency& adj, Coloring initial) {
  if (initial.size() != adj.size()) {
    throw ParamError("coloring must cover every vertex");
  }
  return refine(adj, normalize(initial));
}

Coloring refine_colors(const LabeledGraph& g, Coloring initial) {
  return refine_colors(g.adjacency(), std::move(initial));
}

AutOptions AutOptions::from_env() {
  AutOptions options;
  if (const char* env = std::getenv("GTC_NODE_BUDGET"); env && *env) {
    char* end = nullptr;
    const long long value = std::strtoll(env, &end, 10);
    if (*end != '\0' || value <= 0) {
      throw ParamError("GTC_NODE_BUDGET must be a positive integer");
    }
    options.node_budget = value;
  }
  return options;
}

GroupSummary automorphism_group(const Adjacency& adj, const AutOptions& options) {
  if (static_cast<int>(adj.size()) > options.max_vertices) {
    throw ResourceError("graph has " + std::to_string(adj.size()) +
                        " vertices; automorphism search is limited to " +
                        std::to_string(options.max_vertices));
  }
  return Search(adj, options).run();
}

std::vector<std::vector<VertexId>> vertex_orbits(
    int num_vertices, std::span<const Permutation> generators) {
  UnionFind uf(num_vertices);
  for (const Permutation& g : generators) {
    for (VertexId v = 0; v < num_vertices; ++v) uf.unite(v, g(v));
  }
  return uf.classes();
}

std::vector<std::vector<int>> edge_orbits(const LabeledGraph& g,
                                          std::span<const Permutation> generators) {
  UnionFind uf(g.num_edges());
  for (const Permutation& p : generators) {
    if (p.size() != g.num_vertices()) {
      throw ValidationError("generator size does not match graph");
    }
    for (int e = 0; e < g.num_edges(); ++e) {
      const Edge& edge = g.edges()[e];
      const auto image = g.edge_index(p(edge.u), p(edge.v));
      if (!image) {
        throw ValidationError("generator maps edge " + g.label(edge.u) + "-" +
                              g.label(edge.v) + " to a non-edge");
      }
      uf.unite(e, *image);
    }
  }
  return uf.classes();
}

AutReport automorphisms(const LabeledGraph& g, const AutOptions& options) {
  GroupSummary group = automorphism_group(g.adjacency(), options);
  AutReport report;
  report.group_order = group.order;
  report.vertex_orbits = vertex_orbits(g.num_vertices(), group.generators);
  report.edge_orbits = edge_orbits(g, group.generators);
  report.vertex_transitive = report.vertex_orbits.size() == 1;
  report.edge_transitive = report.edge_orbits.size() == 1;
  report.generators = std::move(group.generators);
  report.search_nodes = group.search_nodes;
  return report;
}

std::string aut_report_json(const LabeledGraph& g, const AutReport& report) {
  std::vector<std::size_t> vsizes, esizes;
  for (const auto& o : report.vertex_orbits) vsizes.push_back(o.size());
  for (const auto& o : report.edge_orbits) esizes.push_back(o.size());
  const nlohmann::json doc = {{"n", g.n()},
                              {"k", g.k()},
                              {"family", to_string(g.family())},
                              {"group_order", report.group_order},
                              {"vertex_orbits", vsizes},
                              {"edge_orbits", esizes},
                              {"vertex_transitive", report.vertex_transitive},
                              {"edge_transitive", report.edge_transitive}};
  return doc.dump(2) + "\n";
}

}  // namespace gtc
