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

#include "gtc/io.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

#include "gtc/error.hpp"

namespace gtc {

namespace {

using nlohmann::json;

constexpr int kGraph6Bias = 63;

void append_size(std::string& out, int n) {
  if (n < 63) {
    out.push_back(static_cast<char>(n + kGraph6Bias));
  } else if (n < 258048) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kGraph6Bias));
    }
  } else {
    throw FormatError("graph6: too many vertices");
  }
}

int sextet(char c) {
  const int value = static_cast<unsigned char>(c) - kGraph6Bias;
  if (value < 0 || value > 63) throw FormatError("graph6: byte out of range");
  return value;
}

json graph_json(const LabeledGraph& g) {
  json vertices = json::array();
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const VertexRef ref = g.vertex(v);
    vertices.push_back({{"layer", to_string(ref.layer)}, {"index", ref.index}});
  }
  json edges = json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back({{"u", e.u}, {"v", e.v}, {"class", to_string(e.cls)}});
  }
  return {
      {"params", {{"family", to_string(g.family())}, {"n", g.n()}, {"k", g.k()}}},
      {"vertices", std::move(vertices)},
      {"edges", std::move(edges)},
  };
}

std::string dot(const LabeledGraph& g) {
  std::ostringstream out;
  out << "graph \"" << g.name() << "\" {\n";
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    out << "  " << g.label(v) << " [layer=" << to_string(g.layer(v)) << "];\n";
  }
  for (const Edge& e : g.edges()) {
    out << "  " << g.label(e.u) << " -- " << g.label(e.v)
        << " [class=" << to_string(e.cls) << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string edge_list(const LabeledGraph& g) {
  std::string out;
  for (const Edge& e : g.edges()) {
    out += g.label(e.u);
    out += ' ';
    out += g.label(e.v);
    out += ' ';
    out += to_string(e.cls);
    out += '\n';
  }
  return out;
}

}  // namespace

GraphFormat graph_format_from_string(std::string_view name) {
  if (name == "graph6") return GraphFormat::Graph6;
  if (name == "dot") return GraphFormat::Dot;
  if (name == "edges" || name == "edge-list") return GraphFormat::EdgeList;
  if (name == "json") return GraphFormat::Json;
  throw FormatError("unsupported format: " + std::string(name));
}

std::string export_graph(const LabeledGraph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::Graph6: return encode_graph6(g.adjacency());
    case GraphFormat::Dot: return dot(g);
    case GraphFormat::EdgeList: return edge_list(g);
    case GraphFormat::Json: return graph_json(g).dump(2) + "\n";
  }
  throw FormatError("unsupported format");
}

std::string export_graph(const LabeledGraph& g, std::string_view format) {
  return export_graph(g, graph_format_from_string(format));
}

std::string encode_graph6(const Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  std::string out;
  append_size(out, n);
  // Upper triangle in column order: (0,1), (0,2), (1,2), (0,3), ...
  int bits = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      const bool edge =
          std::find(adj[i].begin(), adj[i].end(), j) != adj[i].end();
      bits = (bits << 1) | (edge ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(bits + kGraph6Bias));
        bits = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    out.push_back(static_cast<char>((bits << (6 - filled)) + kGraph6Bias));
  }
  return out;
}

Adjacency decode_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' ||
                           text.back() == ' ')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw FormatError("graph6: empty input");

  std::size_t pos = 0;
  int n = 0;
  if (text[0] != '~') {
    n = sextet(text[0]);
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == '~') {
      throw FormatError("graph6: unsupported size prefix");
    }
    for (int i = 1; i <= 3; ++i) n = (n << 6) | sextet(text[i]);
    pos = 4;
  }
  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t expected = (pairs + 5) / 6;
  if (text.size() - pos != expected) {
    throw FormatError("graph6: expected " + std::to_string(expected) +
                      " data bytes, got " + std::to_string(text.size() - pos));
  }
  Adjacency adj(n);
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int byte = sextet(text[pos + bit / 6]);
      if (byte & (1 << (5 - bit % 6))) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  }
  for (; bit % 6 != 0; ++bit) {
    if (sextet(text[pos + bit / 6]) & (1 << (5 - bit % 6))) {
      throw FormatError("graph6: nonzero padding");
    }
  }
  for (auto& nb : adj) std::sort(nb.begin(), nb.end());
  return adj;
}

std::vector<LabeledEdge> parse_edge_list(std::string_view text, Family family) {
  auto parse_ref = [family](const std::string& token, int line) -> VertexRef {
    const char letter = token.empty() ? '\0' : token[0];
    std::optional<Layer> layer;
    if (family == Family::Petersen) {
      if (letter == 'u') layer = Layer::Outer;
      if (letter == 'v') layer = Layer::Inner;
    } else {
      if (letter == 'a') layer = Layer::Outer;
      if (letter == 'b') layer = Layer::Middle;
      if (letter == 'c') layer = Layer::Inner;
    }
    if (!layer || token.size() < 2 ||
        !std::all_of(token.begin() + 1, token.end(),
                     [](char c) { return c >= '0' && c <= '9'; })) {
      throw FormatError("edge list line " + std::to_string(line) +
                        ": bad vertex label '" + token + "'");
    }
    return {*layer, std::stoi(token.substr(1))};
  };

  std::vector<LabeledEdge> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string a, b, cls, extra;
    if (!(fields >> a)) continue;
    if (!(fields >> b >> cls) || (fields >> extra)) {
      throw FormatError("edge list line " + std::to_string(line_no) +
                        ": expected 'u v Class'");
    }
    const auto edge_class = edge_class_from_string(cls);
    if (!edge_class) {
      throw FormatError("edge list line " + std::to_string(line_no) +
                        ": unknown edge class '" + cls + "'");
    }
    out.push_back({parse_ref(a, line_no), parse_ref(b, line_no), *edge_class});
  }
  return out;
}

LabeledGraph parse_graph_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("json: ") + e.what());
  }
  try {
    const auto& params = doc.at("params");
    const auto family =
        family_from_string(params.at("family").get<std::string>());
    if (!family) throw FormatError("json: unknown family");
    LabeledGraph g =
        build_graph(*family, params.at("n").get<int>(), params.at("k").get<int>());

    const auto& vertices = doc.at("vertices");
    if (vertices.size() != static_cast<std::size_t>(g.num_vertices())) {
      throw FormatError("json: vertex count does not match params");
    }
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      const auto layer =
          layer_from_string(vertices[v].at("layer").get<std::string>());
      const VertexRef expected = g.vertex(v);
      if (!layer || *layer != expected.layer ||
          vertices[v].at("index").get<int>() != expected.index) {
        throw FormatError("json: vertex " + std::to_string(v) +
                          " out of canonical order");
      }
    }

    std::vector<Edge> listed;
    for (const auto& e : doc.at("edges")) {
      const auto cls = edge_class_from_string(e.at("class").get<std::string>());
      if (!cls) throw FormatError("json: unknown edge class");
      VertexId u = e.at("u").get<int>();
      VertexId v = e.at("v").get<int>();
      if (u > v) std::swap(u, v);
      listed.push_back({u, v, *cls});
    }
    std::sort(listed.begin(), listed.end(), [](const Edge& x, const Edge& y) {
      return std::pair(x.u, x.v) < std::pair(y.u, y.v);
    });
    if (listed != g.edges()) {
      throw FormatError("json: edge set does not match " + g.name());
    }
    return g;
  } catch (const json::exception& e) {
    throw FormatError(std::string("json: ") + e.what());
  } catch (const ParamError& e) {
    throw FormatError(std::string("json: ") + e.what());
  }
}

}  // namespace gtc
