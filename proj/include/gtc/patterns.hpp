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

// Symbolic cycle families of TC(n,k) and their reconciliation against
// brute-force enumeration.
//
// A pattern is a vertex template in a free index i (plus k and n/2), an
// applicability condition on (n,k), a declared multiplicity, and the per-cycle
// class profile. Three groups exist: the 8-cycle families for k != 2, the
// 7-cycle families for k = 2, and the short-cycle families used for k = 1 and
// the generic k = 2 case. The 8-cycle aggregate rows for k >= 3 are not
// independent data: they are derived by summing applicable 8-cycle families,
// and the printed aggregates are kept only to check that derivation.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gtc/census.hpp"
#include "gtc/cycles.hpp"
#include "gtc/graph.hpp"

namespace gtc {

enum class PatternTable : std::uint8_t { T1, T2Derived, T3, ProofFamily };

std::string_view to_string(PatternTable table);

struct PatternId {
  PatternTable table;
  std::string label;

  auto operator<=>(const PatternId&) const = default;

  // "T1:9+", "T3:2'", "PF:K1-six-cycle".
  std::string str() const;
  static std::optional<PatternId> parse(std::string_view text);
};

// a_n * n + a_k * k + constant  (== | != | >=)  0
struct LinearClause {
  enum class Rel : std::uint8_t { Eq, Ne, Ge };

  int a_n = 0;
  int a_k = 0;
  int constant = 0;
  Rel rel = Rel::Eq;

  bool holds(int n, int k) const;
};

// Disjunction of conjunctions of linear clauses, plus the printed text.
class Condition {
 public:
  Condition() = default;
  Condition(std::string text, std::vector<std::vector<LinearClause>> any_of);

  bool holds(int n, int k) const;
  const std::string& text() const { return text_; }

  // Logical AND with another condition; texts are joined with "; ".
  Condition operator&&(const Condition& other) const;

 private:
  std::string text_;
  std::vector<std::vector<LinearClause>> any_of_;
};

// sign * i + offset + k_mult * k + half_mult * (n/2), reduced mod n.
struct IndexExpr {
  int sign = 1;
  int offset = 0;
  int k_mult = 0;
  int half_mult = 0;

  int eval(int i, int n, int k) const;

  // Parses "i", "i+1", "-i-1+2k", "i+1+h" (h stands for n/2).
  static IndexExpr parse(std::string_view text);
};

struct TemplateVertex {
  Layer layer;
  IndexExpr index;
};

enum class DeclaredCount : std::uint8_t { N, HalfN, K, NOver8, NOver7, One };

std::int64_t evaluate(DeclaredCount count, int n, int k);
std::string_view to_string(DeclaredCount count);

struct PatternSpec {
  PatternId id;
  Condition condition;
  std::string template_text;  // e.g. "a:i a:i+1 b:i+1 c:i+1 c:i b:i"
  std::vector<TemplateVertex> vertices;
  DeclaredCount count;
  CycleProfile profile;

  int length() const { return static_cast<int>(vertices.size()); }
};

// Builds a spec from a whitespace-separated template such as
// "a:i a:i+1 b:i+1+h". Throws ParamError on malformed text.
PatternSpec make_pattern(PatternId id, Condition condition,
                         std::string_view template_text, DeclaredCount count,
                         CycleProfile profile);

// Every encoded family, in table order (T1, then T3, then the PF families).
const std::vector<PatternSpec>& pattern_catalog();

// Throws ParamError for an unknown id.
const PatternSpec& pattern(const PatternId& id);

// Ids whose condition holds at (n,k) and whose template has length l, in
// catalog order.
std::vector<PatternId> applicable(int n, int k, int l);

struct TemplateDefect {
  int i;
  std::vector<VertexRef> walk;
  std::string reason;
};

struct Instantiation {
  std::vector<Cycle> cycles;  // canonical, sorted, deduplicated
  std::vector<TemplateDefect> defects;
};

// Ranges i over [0, n) and validates every produced walk against TC(n,k).
// Defective walks are reported in `defects`, never dropped silently.
Instantiation instantiate(const PatternSpec& spec, const GtcParams& params);

// Throws ParamError if the pattern does not apply at (n,k) and
// ValidationError if the template yields a non-cycle.
std::vector<Cycle> instantiate(const PatternId& id, int n, int k);

// Sum of declared_count * profile over applicable(n, k, l); a one-row table.
CensusTable predicted_census(int n, int k, int l);

// One printed row of the 8-cycle aggregate table for k >= 3.
struct AggregateRow {
  std::string id;  // e.g. "n=3k+1; k≠3"
  Condition condition;
  std::vector<std::string> types;  // 8-cycle family labels
  // OV, MV, IV, OE, S1E, ME, S2E, IE as multiples of n.
  std::array<int, 8> per_n;

  CensusRow expected(int n) const;
};

const std::vector<AggregateRow>& aggregate_rows();

// Rows whose condition holds at (n,k).
std::vector<const AggregateRow*> matching_aggregate_rows(int n, int k);

struct PatternTally {
  PatternId id;
  std::int64_t declared = 0;
  std::int64_t instantiated = 0;
  // Brute-force cycles assigned to this pattern. A cycle produced by several
  // patterns is assigned to the first in catalog order.
  std::int64_t matched = 0;
  std::vector<TemplateDefect> defects;
  // Earlier patterns that produced some of the same cycles.
  std::vector<PatternId> overlaps;
};

struct DiscrepancyReport {
  int n = 0;
  int k = 0;
  int l = 0;
  std::int64_t observed_count = 0;
  std::vector<PatternTally> patterns;
  std::vector<Cycle> unmatched;
  CensusRow predicted;
  CensusRow observed;

  // predicted - observed, per quantity.
  CensusRow delta() const;
  std::int64_t matched_total() const;
  bool has_discrepancy() const;
};

// Matches every brute-force l-cycle of g (a TC graph) against the applicable
// patterns and compares predicted and observed census rows.
DiscrepancyReport classify(const LabeledGraph& g, int l);
DiscrepancyReport classify(const LabeledGraph& g, const CyclesByLength& cycles,
                           int l);

std::string report_json(const LabeledGraph& g, const DiscrepancyReport& r);
std::string report_markdown(const LabeledGraph& g, const DiscrepancyReport& r);

}  // namespace gtc
