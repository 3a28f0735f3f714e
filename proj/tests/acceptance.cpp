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


// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "gtc/automorphism.hpp"
#include "gtc/census.hpp"
#include "gtc/cycles.hpp"
#include "gtc/graph.hpp"
#include "gtc/patterns.hpp"
#include "gtc/verification.hpp"
#include "oracles.hpp"

namespace {

using namespace gtc;

struct Outcome {
  bool ok = true;
  std::string failures;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) failures += "; ";
      failures += what;
      ok = false;
    }
  }
};

std::string hits_text(const std::vector<NK>& hits) {
  std::string s = "[";
  for (std::size_t i = 0; i < hits.size(); ++i) {
    if (i) s += ",";
    s += "(" + std::to_string(hits[i].first) + "," + std::to_string(hits[i].second) + ")";
  }
  return s + "]";
}

std::string row_text(const CensusRow& r) {
  std::ostringstream o;
  o << "count=" << r.count << " OV=" << r.OV << " MV=" << r.MV << " IV=" << r.IV
    << " OE=" << r.OE << " S1E=" << r.S1E << " ME=" << r.ME << " S2E=" << r.S2E
    << " IE=" << r.IE;
  return o.str();
}

void tc_transitivity_sweep(Outcome& o, Property prop) {
  SweepResult r = sweep(Family::TutteCoxeter, 40, prop);
  o.expect(r.hits == std::vector<NK>{{10, 3}}, "hits " + hits_text(r.hits));
  o.expect(r.errors().empty(), "errors " + hits_text(r.errors()));
  o.detail << "hits=" << hits_text(r.hits) << " instances=" << r.instances.size();
}

void tutte_coxeter_facts(Outcome& o) {
  LabeledGraph g = build_tc(GtcParams(10, 3));
  AutReport a = automorphisms(g);
  int gi = girth(g);
  o.expect(a.vertex_transitive, "not vertex-transitive");
  o.expect(a.edge_transitive, "not edge-transitive");
  o.expect(gi == 8, "girth " + std::to_string(gi));
  o.expect(a.group_order == 1440, "order " + std::to_string(a.group_order));
  o.detail << "order=" << a.group_order << " girth=" << gi;
}

void census_row(Outcome& o, int n, int k, int l, const CensusRow& want) {
  CensusRow got = census(build_tc(GtcParams(n, k)), l, l).at(l);
  o.expect(got == want, "got " + row_text(got));
  o.detail << row_text(got);
}

void tc_8_1(Outcome& o) {
  CensusRow want{7, 16, 40, 32, 40, 32, 16, 16, 16, 32};
  census_row(o, 8, 1, 7, want);
}

void tc_10_1(Outcome& o) {
  CensusRow want{6, 10, 20, 20, 20, 10, 20, 0, 20, 10};
  census_row(o, 10, 1, 6, want);
}

void tc_12_2(Outcome& o) {
  CensusRow got = census(build_tc(GtcParams(12, 2)), 7, 7).at(7);
  o.expect(got.OE == 24 && got.S1E == 24 && got.S2E == 24, "spoke/outer counts");
  o.expect(got.ME == 0, "ME nonzero");
  o.expect(got.IE == 12, "IE=" + std::to_string(got.IE));
  o.detail << row_text(got);
}

void tc_16_5(Outcome& o) {
  LabeledGraph g = build_tc(GtcParams(16, 5));
  CensusRow got = census(g, 8, 8).at(8);
  CensusRow want{8, 32, 64, 96, 96, 32, 64, 32, 64, 64};
  o.expect(got == want, "census " + row_text(got));
  o.expect(matching_aggregate_rows(16, 5).size() == 1, "row not unique");
  DiscrepancyReport r = classify(g, 8);
  o.expect(r.unmatched.empty(),
           std::to_string(r.unmatched.size()) + " unmatched 8-cycles");
  o.detail << row_text(got) << " unmatched=" << r.unmatched.size();
}

void tc_14_2(Outcome& o) {
  CensusRow got = census(build_tc(GtcParams(14, 2)), 7, 7).at(7);
  o.expect(got.OE != got.IE, "OE(7)=IE(7)=" + std::to_string(got.OE));
  o.detail << row_text(got);
}

void petersen_edge(Outcome& o) {
  SweepResult r = sweep(Family::Petersen, 24, Property::Edge);
  std::vector<NK> want{{4, 1}, {5, 2}, {8, 3}, {10, 2}, {10, 3}, {12, 5}, {24, 5}};
  o.expect(r.hits == want, "hits " + hits_text(r.hits));
  o.expect(r.errors().empty(), "errors " + hits_text(r.errors()));
  o.detail << "hits=" << hits_text(r.hits);
}

void petersen_vertex(Outcome& o) {
  PetersenVertexReport r = petersen_vertex_check(24);
  for (const PetersenVertexEntry& e : r.entries) {
    const bool dodecahedron = e.n == 10 && e.k == 2;
    if (dodecahedron) {
      o.expect(e.vertex_transitive && !e.congruence, "P(10,2) verdict");
    } else if (e.vertex_transitive != e.congruence) {
      o.expect(false, "P(" + std::to_string(e.n) + "," + std::to_string(e.k) + ")");
    }
  }
  o.expect(r.exceptions == std::vector<NK>{{10, 2}},
           "exceptions " + hits_text(r.exceptions));
  o.expect(r.errors.empty(), "errors " + hits_text(r.errors));
  o.detail << "instances=" << r.entries.size()
           << " exceptions=" << hits_text(r.exceptions);
}

void properties(Outcome& o) {
  std::vector<NK> pool = valid_params(Family::TutteCoxeter, 30);
  std::mt19937 rng(20261016);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  int checked = 0;
  for (int trial = 0; trial < 50; ++trial) {
    auto [n, k] = pool[pick(rng)];
    const std::string at = "TC(" + std::to_string(n) + "," + std::to_string(k) + ")";
    LabeledGraph g = build_tc(GtcParams(n, k));
    CyclesByLength cycles = enumerate_cycles(g, 8);
    CensusTable t = census_from_cycles(g, cycles, 3, 8);
    for (const CensusRow& r : t.rows) {
      o.expect(r.OV + r.MV + r.IV == r.l * r.count, at + " vertex handshake");
      o.expect(r.OE + r.S1E + r.ME + r.S2E + r.IE == r.l * r.count,
               at + " edge handshake");
    }
    for (const auto& [l, cs] : cycles) {
      for (const Cycle& c : cs) {
        CycleProfile p = profile(g, c);
        if (p.s1e % 2 || p.s2e % 2) o.expect(false, at + " odd spoke count");
      }
    }
    InnerStructure s = inner_structure(GtcParams(n, k));
    o.expect(static_cast<int>(s.components.size()) == std::gcd(n, k),
             at + " inner components");
    for (int l = 6; l <= 8; ++l) {
      for (const PatternId& id : applicable(n, k, l)) {
        Instantiation inst = instantiate(pattern(id), GtcParams(n, k));
        o.expect(inst.defects.empty(), at + " " + id.str() + " defect");
        for (const Cycle& c : inst.cycles) {
          if (!is_simple_cycle(g, c.vertices)) o.expect(false, at + " " + id.str());
        }
      }
    }
    AutReport a = automorphisms(g);
    Adjacency adj = g.adjacency();
    for (const Permutation& p : a.generators) {
      o.expect(is_automorphism(adj, p.image()), at + " generator");
    }
    for (const auto& orb : a.vertex_orbits) {
      o.expect(a.group_order % orb.size() == 0, at + " vertex orbit size");
    }
    for (const auto& orb : a.edge_orbits) {
      o.expect(a.group_order % orb.size() == 0, at + " edge orbit size");
    }
    for (int l = 3; l <= 8; ++l) {
      if (a.vertex_transitive) o.expect(balanced_vertex(t, l), at + " vertex filter");
      if (a.edge_transitive) o.expect(balanced_edge(t, l), at + " edge filter");
    }
    ++checked;
  }
  o.detail << "instances=" << checked;
}

void oracle_equivalence(Outcome& o) {
  std::vector<LabeledGraph> corpus;
  for (auto [n, k] : {std::pair{3, 1}, {4, 1}, {5, 1}, {5, 2}, {6, 1}, {6, 2}}) {
    corpus.push_back(build_petersen(PetersenParams(n, k)));
  }
  corpus.push_back(build_tc(GtcParams(4, 1)));
  for (const LabeledGraph& g : corpus) {
    Adjacency adj = g.adjacency();
    std::vector<std::set<int>> sets;
    for (const auto& nb : adj) sets.emplace_back(nb.begin(), nb.end());
    std::uint64_t want = oracle::automorphism_count(sets);
    std::uint64_t got = automorphism_group(adj).order;
    o.expect(got == want, g.name() + " " + std::to_string(got) + " vs " +
                              std::to_string(want));
    o.detail << g.name() << "=" << got << " ";
  }
}

struct Criterion {
  int number;
  const char* title;
  double limit_seconds;
  std::function<void(Outcome&)> check;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "TC vertex-transitive sweep n<=40", 300,
       [](Outcome& o) { tc_transitivity_sweep(o, Property::Vertex); }},
      {2, "TC edge-transitive sweep n<=40", 300,
       [](Outcome& o) { tc_transitivity_sweep(o, Property::Edge); }},
      {3, "TC(10,3) transitivity, girth and group order", 30, tutte_coxeter_facts},
      {4, "TC(8,1) seven-cycle census", 0, tc_8_1},
      {5, "TC(10,1) six-cycle census", 0, tc_10_1},
      {6, "TC(12,2) seven-cycle edge census", 0, tc_12_2},
      {7, "TC(16,5) eight-cycle census and classification", 0, tc_16_5},
      {8, "TC(14,2) OE(7) != IE(7)", 0, tc_14_2},
      {9, "Petersen edge-transitive sweep n<=24", 0, petersen_edge},
      {10, "Petersen vertex-transitivity vs k^2=+-1 (mod n)", 0, petersen_vertex},
      {11, "property suites on 50 random TC(n,k), n<=30", 600, properties},
      {12, "automorphism counts vs exhaustive search", 0, oracle_equivalence},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      c.check(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                      .count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      o.expect(false, "exceeded time limit");
    }
    failed += !o.ok;
    std::printf("%s criterion %2d: %s (%.2fs) -- %s\n", o.ok ? "PASS" : "FAIL",
                c.number, c.title, secs, o.detail.str().c_str());
    if (!o.ok) std::printf("     reason: %s\n", o.failures.c_str());
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
