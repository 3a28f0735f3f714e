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

// Parameter sweeps and table/claim checks over whole ranges of (n, k).
//
// Instances are independent and are distributed over OpenMP threads; every
// report is assembled in (n, k) order, so output never depends on the thread
// count.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gtc/automorphism.hpp"
#include "gtc/census.hpp"
#include "gtc/graph.hpp"
#include "gtc/patterns.hpp"

namespace gtc {

using NK = std::pair<int, int>;

enum class Property : std::uint8_t { Vertex, Edge };

std::string_view to_string(Property p);
std::optional<Property> property_from_string(std::string_view s);

// All valid (n, k) of the family with n <= n_max, sorted.
std::vector<NK> valid_params(Family family, int n_max);

struct SweepOptions {
  int l_max = 8;
  int jobs = 0;  // 0: OpenMP default
  AutOptions aut = AutOptions::from_env();
  // Also run the full automorphism search on instances the census filter
  // rejects, so filter soundness can be checked directly.
  bool audit_filter = false;
};

struct InstanceResult {
  int n = 0;
  int k = 0;
  bool filter_passed = false;
  int first_imbalanced_length = 0;  // 0 when balanced at every length
  bool full_method = false;         // automorphism search ran
  std::optional<bool> transitive;   // set when full_method succeeded
  std::optional<std::uint64_t> group_order;
  std::string error;                // resource or other failure
};

struct SweepResult {
  Family family = Family::TutteCoxeter;
  int n_max = 0;
  Property property = Property::Vertex;
  int l_max = 8;
  std::vector<InstanceResult> instances;
  std::vector<NK> hits;

  // No instance is transitive by the full method yet rejected by the filter,
  // and every hit passed the filter.
  bool filter_sound() const;
  std::vector<NK> errors() const;
};

SweepResult sweep(Family family, int n_max, Property property,
                  const SweepOptions& options = {});

struct PetersenVertexEntry {
  int n = 0;
  int k = 0;
  bool congruence = false;  // k^2 = +-1 (mod n)
  bool vertex_transitive = false;
  std::uint64_t group_order = 0;
};

struct PetersenVertexReport {
  int n_max = 0;
  std::vector<PetersenVertexEntry> entries;
  // Instances where the congruence and the computed verdict disagree.
  std::vector<NK> exceptions;
  std::vector<NK> errors;

  // Exceptions are exactly {(10,2)} when n_max >= 10 and empty otherwise.
  bool consistent() const;
};

PetersenVertexReport petersen_vertex_check(int n_max,
                                           const SweepOptions& options = {});

enum class Verdict : std::uint8_t { Confirmed, Unconfirmed, NotExercised };

std::string_view to_string(Verdict v);

// Printed, derived and brute-force aggregates of one instance of an aggregate
// row that did not reconcile.
struct RowDelta {
  NK nk;
  CensusRow printed;
  CensusRow predicted;
  CensusRow observed;
};

// A table row (pattern family or aggregate row) or a stated claim, checked at
// every instance in range where it applies.
struct RowCheck {
  std::string id;
  std::string statement;
  Verdict verdict = Verdict::NotExercised;
  std::vector<NK> instances;
  // Human-readable evidence for each failing instance.
  std::vector<std::string> evidence;
  std::vector<RowDelta> deltas;  // aggregate rows only
};

// True where the tables claim to list every l-cycle of TC(n,k): 8-cycles for
// k != 2 except TC(10,3), 7-cycles for k = 2, 6-cycles for k = 1 with n != 6,
// and 7-cycles of TC(8,1).
bool claims_exhaustive(int n, int k, int l);

struct TablesReport {
  int n_max = 0;
  std::vector<RowCheck> pattern_rows;    // one per catalog entry
  std::vector<RowCheck> aggregate_rows;  // derived 8-cycle aggregates
  std::vector<RowCheck> claims;          // stated census and exhaustiveness claims
  // classify() results with a discrepancy, restricted to claims_exhaustive.
  std::vector<DiscrepancyReport> discrepancies;
};

TablesReport verify_tables(int n_max, const SweepOptions& options = {});

std::string sweep_json(const SweepResult& r);
std::string petersen_json(const PetersenVertexReport& r);
std::string tables_json(const TablesReport& r);

// {"sweep": {...}, "tables": {...}, "petersen": {...}}; absent parts omitted.
std::string verification_json(const std::vector<SweepResult>* sweeps,
                              const TablesReport* tables,
                              const PetersenVertexReport* petersen);
std::string verification_markdown(const std::vector<SweepResult>* sweeps,
                                  const TablesReport* tables,
                                  const PetersenVertexReport* petersen);

}  // namespace gtc
