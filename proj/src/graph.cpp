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

#include "gtc/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "gtc/error.hpp"

namespace gtc {

namespace {

constexpr std::array<Layer, 3> kTcLayers = {Layer::Outer, Layer::Middle,
                                            Layer::Inner};
constexpr std::array<Layer, 2> kPetersenLayers = {Layer::Outer, Layer::Inner};
constexpr std::array<EdgeClass, 3> kPetersenClasses = {
    EdgeClass::OuterEdge, EdgeClass::Spoke1, EdgeClass::InnerEdge};

int mod(int a, int n) {
  const int r = a % n;
  return r < 0 ? r + n : r;
}

char layer_letter(Family family, Layer layer) {
  if (family == Family::Petersen) return layer == Layer::Outer ? 'u' : 'v';
  switch (layer) {
    case Layer::Outer: return 'a';
    case Layer::Middle: return 'b';
    case Layer::Inner: return 'c';
  }
  return '?';
}

}  // namespace

std::string_view to_string(Family family) {
  return family == Family::TutteCoxeter ? "tc" : "petersen";
}

std::string_view to_string(Layer layer) {
  switch (layer) {
    case Layer::Outer: return "outer";
    case Layer::Middle: return "middle";
    case Layer::Inner: return "inner";
  }
  return "?";
}

std::string_view to_string(EdgeClass cls) {
  switch (cls) {
    case EdgeClass::OuterEdge: return "OuterEdge";
    case EdgeClass::Spoke1: return "Spoke1";
    case EdgeClass::MiddleEdge: return "MiddleEdge";
    case EdgeClass::Spoke2: return "Spoke2";
    case EdgeClass::InnerEdge: return "InnerEdge";
  }
  return "?";
}

std::optional<Family> family_from_string(std::string_view s) {
  if (s == "tc" || s == "tutte-coxeter") return Family::TutteCoxeter;
  if (s == "petersen" || s == "p") return Family::Petersen;
  return std::nullopt;
}

std::optional<Layer> layer_from_string(std::string_view s) {
  for (Layer l : kTcLayers) {
    if (to_string(l) == s) return l;
  }
  return std::nullopt;
}

std::optional<EdgeClass> edge_class_from_string(std::string_view s) {
  for (EdgeClass c : kEdgeClasses) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

std::optional<EdgeClass> edge_class_between(Layer a, Layer b) {
  if (b < a) std::swap(a, b);
  if (a == Layer::Outer && b == Layer::Outer) return EdgeClass::OuterEdge;
  if (a == Layer::Middle && b == Layer::Middle) return EdgeClass::MiddleEdge;
  if (a == Layer::Inner && b == Layer::Inner) return EdgeClass::InnerEdge;
  if (a == Layer::Outer && b == Layer::Middle) return EdgeClass::Spoke1;
  if (a == Layer::Middle && b == Layer::Inner) return EdgeClass::Spoke2;
  return std::nullopt;
}

GtcParams::GtcParams(int n, int k) : n_(n), k_(k) {
  if (n % 2 != 0) throw ParamError("n must be even");
  if (n < 4) throw ParamError("n must be at least 4");
  if (k < 1 || 2 * k >= n) throw ParamError("k must satisfy 1 ≤ k < n/2");
}

PetersenParams::PetersenParams(int n, int k) : n_(n), k_(k) {
  if (n < 3) throw ParamError("n must be at least 3");
  if (k < 1 || 2 * k >= n) throw ParamError("k must satisfy 1 ≤ k < n/2");
}

LabeledGraph::LabeledGraph(Family family, int n, int k, int num_layers)
    : family_(family), n_(n), k_(k) {
  const auto size = static_cast<std::size_t>(num_layers) * n;
  adj_.assign(size, {-1, -1, -1});
  slot_edge_.assign(size, {-1, -1, -1});
  layers_.resize(size);
  for (VertexId v = 0; v < static_cast<VertexId>(size); ++v) {
    layers_[v] = layer_set()[v / n];
  }
}

bool LabeledGraph::adjacent(VertexId u, VertexId v) const {
  const auto& nb = adj_[u];
  return std::find(nb.begin(), nb.end(), v) != nb.end();
}

std::optional<int> LabeledGraph::edge_index(VertexId u, VertexId v) const {
  const auto& nb = adj_[u];
  for (int s = 0; s < 3; ++s) {
    if (nb[s] == v) return slot_edge_[u][s];
  }
  return std::nullopt;
}

std::optional<EdgeClass> LabeledGraph::edge_class(VertexId u, VertexId v) const {
  if (auto e = edge_index(u, v)) return edges_[*e].cls;
  return std::nullopt;
}

VertexRef LabeledGraph::vertex(VertexId v) const {
  return {layers_[v], v % n_};
}

VertexId LabeledGraph::id(VertexRef ref) const {
  const auto set = layer_set();
  const auto it = std::find(set.begin(), set.end(), ref.layer);
  if (it == set.end()) {
    throw ParamError(std::string(name()) + " has no " +
                     std::string(to_string(ref.layer)) + " layer");
  }
  return static_cast<VertexId>(it - set.begin()) * n_ + mod(ref.index, n_);
}

const std::vector<Layer>& LabeledGraph::layers() const { return layers_; }

std::span<const Layer> LabeledGraph::layer_set() const {
  if (family_ == Family::Petersen) return kPetersenLayers;
  return kTcLayers;
}

std::span<const EdgeClass> LabeledGraph::edge_class_set() const {
  if (family_ == Family::Petersen) return kPetersenClasses;
  return kEdgeClasses;
}

std::string LabeledGraph::label(VertexId v) const {
  const VertexRef ref = vertex(v);
  return layer_letter(family_, ref.layer) + std::to_string(ref.index);
}

std::optional<VertexId> LabeledGraph::from_label(std::string_view label) const {
  if (label.size() < 2) return std::nullopt;
  for (Layer l : layer_set()) {
    if (label[0] != layer_letter(family_, l)) continue;
    int index = 0;
    const auto* first = label.data() + 1;
    const auto* last = label.data() + label.size();
    auto [ptr, ec] = std::from_chars(first, last, index);
    if (ec != std::errc() || ptr != last || index < 0 || index >= n_) {
      return std::nullopt;
    }
    return id({l, index});
  }
  return std::nullopt;
}

std::string LabeledGraph::name() const {
  const char* prefix = family_ == Family::Petersen ? "P(" : "TC(";
  return prefix + std::to_string(n_) + "," + std::to_string(k_) + ")";
}

Adjacency LabeledGraph::adjacency() const {
  Adjacency out(adj_.size());
  for (std::size_t v = 0; v < adj_.size(); ++v) {
    out[v].assign(adj_[v].begin(), adj_[v].end());
  }
  return out;
}

void LabeledGraph::add_edge(VertexRef a, VertexRef b, EdgeClass cls) {
  VertexId u = id(a);
  VertexId v = id(b);
  if (u == v) throw std::logic_error("loop at " + label(u));
  if (u > v) std::swap(u, v);
  if (adjacent(u, v)) return;  // the listed middle pairs repeat each edge
  auto attach = [&](VertexId x, VertexId y) {
    auto& nb = adj_[x];
    const auto free = std::find(nb.begin(), nb.end(), -1);
    if (free == nb.end()) throw std::logic_error("degree exceeds 3 at " + label(x));
    *free = y;
  };
  attach(u, v);
  attach(v, u);
  edges_.push_back({u, v, cls});
}

void LabeledGraph::finalize() {
  std::sort(edges_.begin(), edges_.end(), [](const Edge& x, const Edge& y) {
    return std::pair(x.u, x.v) < std::pair(y.u, y.v);
  });
  for (auto& nb : adj_) {
    if (std::find(nb.begin(), nb.end(), -1) != nb.end()) {
      throw std::logic_error("graph is not cubic");
    }
    std::sort(nb.begin(), nb.end());
  }
  for (int e = 0; e < num_edges(); ++e) {
    const Edge& edge = edges_[e];
    for (auto [x, y] : {std::pair(edge.u, edge.v), std::pair(edge.v, edge.u)}) {
      const auto& nb = adj_[x];
      const auto slot = std::find(nb.begin(), nb.end(), y) - nb.begin();
      slot_edge_[x][slot] = e;
    }
  }
}

LabeledGraph build_tc(const GtcParams& params) {
  const int n = params.n();
  const int k = params.k();
  LabeledGraph g(Family::TutteCoxeter, n, k, 3);
  for (int i = 0; i < n; ++i) {
    g.add_edge({Layer::Outer, i}, {Layer::Outer, i + 1}, EdgeClass::OuterEdge);
    g.add_edge({Layer::Outer, i}, {Layer::Middle, i}, EdgeClass::Spoke1);
    g.add_edge({Layer::Middle, i}, {Layer::Middle, i + n / 2},
               EdgeClass::MiddleEdge);
    g.add_edge({Layer::Middle, i}, {Layer::Inner, i}, EdgeClass::Spoke2);
    g.add_edge({Layer::Inner, i}, {Layer::Inner, i + k}, EdgeClass::InnerEdge);
  }
  g.finalize();
  return g;
}

LabeledGraph build_petersen(const PetersenParams& params) {
  const int n = params.n();
  const int k = params.k();
  LabeledGraph g(Family::Petersen, n, k, 2);
  for (int i = 0; i < n; ++i) {
    g.add_edge({Layer::Outer, i}, {Layer::Outer, i + 1}, EdgeClass::OuterEdge);
    g.add_edge({Layer::Outer, i}, {Layer::Inner, i}, EdgeClass::Spoke1);
    g.add_edge({Layer::Inner, i}, {Layer::Inner, i + k}, EdgeClass::InnerEdge);
  }
  g.finalize();
  return g;
}

LabeledGraph build_graph(Family family, int n, int k) {
  if (family == Family::Petersen) return build_petersen(PetersenParams(n, k));
  return build_tc(GtcParams(n, k));
}

InnerStructure inner_structure(const GtcParams& params) {
  const int n = params.n();
  const int k = params.k();
  InnerStructure out;
  out.d = std::gcd(n, k);
  out.component_length = n / out.d;
  for (int r = 0; r < out.d; ++r) {
    std::vector<VertexRef> comp;
    comp.reserve(out.component_length);
    for (int j = 0; j < out.component_length; ++j) {
      comp.push_back({Layer::Inner, (r + j * k) % n});
    }
    out.components.push_back(std::move(comp));
  }
  return out;
}

}  // namespace gtc
