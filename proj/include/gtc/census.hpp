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

#include <cstdint>
#include <string>
#include <vector>

#include "gtc/cycles.hpp"
#include "gtc/graph.hpp"

namespace gtc {

// Aggregates over all l-cycles: count = |C_l|, and each class total is the
// sum of that class's per-cycle count.
struct CensusRow {
  int l = 0;
  std::int64_t count = 0;
  std::int64_t OV = 0;
  std::int64_t MV = 0;
  std::int64_t IV = 0;
  std::int64_t OE = 0;
  std::int64_t S1E = 0;
  std::int64_t ME = 0;
  std::int64_t S2E = 0;
  std::int64_t IE = 0;

  void add(const CycleProfile& p, std::int64_t multiplicity = 1);

  bool operator==(const CensusRow&) const = default;
};

struct CensusTable {
  Family family = Family::TutteCoxeter;
  int n = 0;
  int k = 0;
  int l_min = 3;
  int l_max = 3;
  std::vector<CensusRow> rows;  // one per l in [l_min, l_max]

  // Throws ParamError when l is outside [l_min, l_max].
  const CensusRow& at(int l) const;
};

CensusTable census(const LabeledGraph& g, int l_min, int l_max, int jobs = 0);

// Same aggregation over cycles already enumerated up to at least l_max.
CensusTable census_from_cycles(const LabeledGraph& g,
                               const CyclesByLength& cycles, int l_min,
                               int l_max);

// Shortest cycle length.
int girth(const LabeledGraph& g);

// OV = MV = IV (OV = IV for Petersen graphs). A vertex-transitive graph
// satisfies this at every l.
bool balanced_vertex(const CensusTable& t, int l);
// OE = S1E = 2 ME = S2E = IE (OE = S1E = IE for Petersen graphs). An
// edge-transitive graph satisfies this at every l.
bool balanced_edge(const CensusTable& t, int l);

std::string census_csv(const CensusTable& t);
std::string census_json(const CensusTable& t);
std::string census_markdown(const CensusTable& t);

}  // namespace gtc
