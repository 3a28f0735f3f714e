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

#include "gtc/census.hpp"

#include <sstream>

#include "gtc/error.hpp"
#include "json_util.hpp"

namespace gtc {

void CensusRow::add(const CycleProfile& p, std::int64_t multiplicity) {
  count += multiplicity;
  OV += multiplicity * p.ov;
  MV += multiplicity * p.mv;
  IV += multiplicity * p.iv;
  OE += multiplicity * p.oe;
  S1E += multiplicity * p.s1e;
  ME += multiplicity * p.me;
  S2E += multiplicity * p.s2e;
  IE += multiplicity * p.ie;
}

const CensusRow& CensusTable::at(int l) const {
  if (l < l_min || l > l_max) {
    throw ParamError("length " + std::to_string(l) + " outside census range [" +
                     std::to_string(l_min) + ", " + std::to_string(l_max) + "]");
  }
  return rows[l - l_min];
}

CensusTable census_from_cycles(const LabeledGraph& g,
                               const CyclesByLength& cycles, int l_min,
                               int l_max) {
  if (l_min < 3 || l_min > l_max) {
    throw ParamError("census range must satisfy 3 ≤ lmin ≤ lmax");
  }
  CensusTable t{g.family(), g.n(), g.k(), l_min, l_max, {}};
  for (int l = l_min; l <= l_max; ++l) {
    CensusRow row;
    row.l = l;
    if (auto it = cycles.find(l); it != cycles.end()) {
      for (const Cycle& c : it->second) row.add(profile(g, c));
    }
    t.rows.push_back(row);
  }
  return t;
}

CensusTable census(const LabeledGraph& g, int l_min, int l_max, int jobs) {
  if (l_min < 3 || l_min > l_max) {
    throw ParamError("census range must satisfy 3 ≤ lmin ≤ lmax");
  }
  return census_from_cycles(g, enumerate_cycles(g, l_max, jobs), l_min, l_max);
}

int girth(const LabeledGraph& g) {
  for (int l = 3; l <= g.num_vertices(); ++l) {
    const auto cycles = enumerate_cycles_serial(g, l);
    if (!cycles.at(l).empty()) return l;
  }
  // Unreachable for cubic graphs.
  throw std::logic_error(g.name() + " is acyclic");
}

bool balanced_vertex(const CensusTable& t, int l) {
  const CensusRow& r = t.at(l);
  if (t.family == Family::Petersen) return r.OV == r.IV;
  return r.OV == r.MV && r.MV == r.IV;
}

bool balanced_edge(const CensusTable& t, int l) {
  const CensusRow& r = t.at(l);
  if (t.family == Family::Petersen) return r.OE == r.S1E && r.S1E == r.IE;
  return r.OE == r.S1E && r.S1E == 2 * r.ME && r.S1E == r.S2E &&
         r.S2E == r.IE;
}

std::string census_csv(const CensusTable& t) {
  std::ostringstream out;
  out << "l,count,OV,MV,IV,OE,S1E,ME,S2E,IE\n";
  for (const CensusRow& r : t.rows) {
    out << r.l << ',' << r.count << ',' << r.OV << ',' << r.MV << ',' << r.IV
        << ',' << r.OE << ',' << r.S1E << ',' << r.ME << ',' << r.S2E << ','
        << r.IE << '\n';
  }
  return out.str();
}

std::string census_json(const CensusTable& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const CensusRow& r : t.rows) rows.push_back(detail::row_json(r));
  nlohmann::json doc = {{"family", to_string(t.family)},
                        {"n", t.n},
                        {"k", t.k},
                        {"rows", std::move(rows)}};
  return doc.dump(2) + "\n";
}

std::string census_markdown(const CensusTable& t) {
  std::ostringstream out;
  out << "| l | #cycles | OV | MV | IV | OE | S1E | ME | S2E | IE |\n"
      << "|---|---|---|---|---|---|---|---|---|---|\n";
  for (const CensusRow& r : t.rows) {
    out << "| " << r.l << " | " << r.count << " | " << r.OV << " | " << r.MV
        << " | " << r.IV << " | " << r.OE << " | " << r.S1E << " | " << r.ME
        << " | " << r.S2E << " | " << r.IE << " |\n";
  }
  return out.str();
}

}  // namespace gtc
