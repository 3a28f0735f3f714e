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

#include "gtc/verification.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <omp.h>

#include "json.hpp"

#include "gtc/error.hpp"
#include "json_util.hpp"

namespace gtc {

namespace {

using nlohmann::json;

int thread_count(int jobs) { return jobs > 0 ? jobs : omp_get_max_threads(); }

std::string nk_name(const char* family, int n, int k) {
  return std::string(family) + "(" + std::to_string(n) + "," + std::to_string(k) +
         ")";
}

std::string tc_name(int n, int k) { return nk_name("TC", n, k); }

json nk_list(const std::vector<NK>& v) {
  json out = json::array();
  for (const auto& [n, k] : v) out.push_back({n, k});
  return out;
}

std::string row_text(const CensusRow& r) {
  std::ostringstream out;
  out << "OV=" << r.OV << " MV=" << r.MV << " IV=" << r.IV << " OE=" << r.OE
      << " S1E=" << r.S1E << " ME=" << r.ME << " S2E=" << r.S2E
      << " IE=" << r.IE;
  return out.str();
}

bool same_quantities(const CensusRow& a, const CensusRow& b) {
  return a.OV == b.OV && a.MV == b.MV && a.IV == b.IV && a.OE == b.OE &&
         a.S1E == b.S1E && a.ME == b.ME && a.S2E == b.S2E && a.IE == b.IE;
}

json quantity_delta(const CensusRow& a, const CensusRow& b) {
  return {{"OV", a.OV - b.OV},    {"MV", a.MV - b.MV},   {"IV", a.IV - b.IV},
          {"OE", a.OE - b.OE},    {"S1E", a.S1E - b.S1E}, {"ME", a.ME - b.ME},
          {"S2E", a.S2E - b.S2E}, {"IE", a.IE - b.IE}};
}

void settle(RowCheck& check) {
  if (check.instances.empty()) {
    check.verdict = Verdict::NotExercised;
  } else {
    check.verdict =
        check.evidence.empty() ? Verdict::Confirmed : Verdict::Unconfirmed;
  }
}

struct TablesInstance {
  int n = 0;
  int k = 0;
  CensusTable census;
  std::vector<DiscrepancyReport> by_length;  // l = 6, 7, 8

  const DiscrepancyReport& at(int l) const { return by_length[l - 6]; }
};

const PatternTally* find_tally(const DiscrepancyReport& r, const PatternId& id) {
  for (const PatternTally& t : r.patterns) {
    if (t.id == id) return &t;
  }
  return nullptr;
}

std::vector<RowCheck> check_pattern_rows(const std::vector<TablesInstance>& all) {
  std::vector<RowCheck> out;
  for (const PatternSpec& spec : pattern_catalog()) {
    RowCheck check;
    check.id = spec.id.str();
    check.statement = spec.condition.text() + ": " +
                      std::string(to_string(spec.count)) + " x {" +
                      spec.template_text + "}";
    for (const TablesInstance& inst : all) {
      if (!spec.condition.holds(inst.n, inst.k)) continue;
      check.instances.emplace_back(inst.n, inst.k);
      const PatternTally* tally = find_tally(inst.at(spec.length()), spec.id);
      if (tally == nullptr) continue;
      std::string issue;
      if (!tally->defects.empty()) {
        issue += std::to_string(tally->defects.size()) +
                 " template walks are not cycles (first at i=" +
                 std::to_string(tally->defects.front().i) + ": " +
                 tally->defects.front().reason + ")";
      }
      if (tally->declared != tally->instantiated) {
        if (!issue.empty()) issue += "; ";
        issue += "declared " + std::to_string(tally->declared) + " distinct " +
                 std::to_string(tally->instantiated);
      }
      for (const PatternId& other : tally->overlaps) {
        if (!issue.empty()) issue += "; ";
        issue += "same cycles as " + other.str();
      }
      if (!issue.empty()) check.evidence.push_back(tc_name(inst.n, inst.k) + ": " + issue);
    }
    settle(check);
    out.push_back(std::move(check));
  }
  return out;
}

// Problems with `row` at one instance; empty when the row holds there.
std::string aggregate_issues(const AggregateRow& row, const TablesInstance& inst) {
  const DiscrepancyReport& r = inst.at(8);
  std::set<std::string> derived;
  for (const PatternId& id : applicable(inst.n, inst.k, 8)) {
    if (id.table == PatternTable::T1) derived.insert(id.label);
  }
  const std::set<std::string> printed_types(row.types.begin(), row.types.end());
  const CensusRow printed = row.expected(inst.n);
  std::string issue;
  auto note = [&](const std::string& s) {
    issue += (issue.empty() ? "" : "; ") + s;
  };
  if (derived != printed_types) note("applicable types differ from listed");
  if (!same_quantities(r.predicted, printed)) {
    note("derived " + row_text(r.predicted) + " vs printed " + row_text(printed));
  }
  if (!same_quantities(r.observed, printed)) {
    note("observed " + row_text(r.observed) + " vs printed " + row_text(printed));
  }
  if (!r.unmatched.empty()) {
    note(std::to_string(r.unmatched.size()) + " unmatched 8-cycles");
  }
  return issue;
}

std::vector<RowCheck> check_aggregate_rows(const std::vector<TablesInstance>& all) {
  std::vector<RowCheck> out;
  for (const AggregateRow& row : aggregate_rows()) {
    RowCheck check;
    check.id = "T2:" + row.id;
    std::string types;
    for (const auto& t : row.types) types += (types.empty() ? "" : ",") + t;
    check.statement = row.condition.text() + ": types {" + types + "}";
    for (const TablesInstance& inst : all) {
      if (!row.condition.holds(inst.n, inst.k)) continue;
      const std::string issue = aggregate_issues(row, inst);
      if (!issue.empty()) {
        // Parameters such as (10,4) satisfy a general row and a specific
        // one; the instance belongs to whichever row holds there.
        bool other_holds = false;
        for (const AggregateRow* other : matching_aggregate_rows(inst.n, inst.k)) {
          if (other != &row && aggregate_issues(*other, inst).empty()) {
            other_holds = true;
          }
        }
        if (other_holds) continue;
      }
      check.instances.emplace_back(inst.n, inst.k);
      if (!issue.empty()) {
        const DiscrepancyReport& r = inst.at(8);
        check.evidence.push_back(tc_name(inst.n, inst.k) + ": " + issue);
        check.deltas.push_back(
            {{inst.n, inst.k}, row.expected(inst.n), r.predicted, r.observed});
      }
    }
    settle(check);
    out.push_back(std::move(check));
  }
  return out;
}

std::vector<RowCheck> check_claims(const std::vector<TablesInstance>& all) {
  std::vector<RowCheck> out;
  auto claim = [&](std::string id, std::string statement, auto applies,
                   auto verify) {
    RowCheck check;
    check.id = std::move(id);
    check.statement = std::move(statement);
    for (const TablesInstance& inst : all) {
      if (!applies(inst.n, inst.k)) continue;
      check.instances.emplace_back(inst.n, inst.k);
      std::string issue = verify(inst);
      if (!issue.empty()) {
        check.evidence.push_back(tc_name(inst.n, inst.k) + ": " + issue);
      }
    }
    settle(check);
    out.push_back(std::move(check));
  };

  claim("k1-six-cycles-only",
        "k=1, n≠6: the 6-cycles are exactly the n cycles a_i a_i+1 b_i+1 c_i+1 c_i b_i",
        [](int n, int k) { return k == 1 && n != 6; },
        [](const TablesInstance& t) -> std::string {
          const DiscrepancyReport& r = t.at(6);
          if (r.has_discrepancy() || r.observed_count != t.n) {
            return std::to_string(r.observed_count) + " six-cycles, " +
                   std::to_string(r.unmatched.size()) + " unmatched";
          }
          return {};
        });
  claim("k1-vertex-balance-l8-iff-n8",
        "k=1: OV(8)=MV(8)=IV(8) holds only for n=8",
        [](int, int k) { return k == 1; },
        [](const TablesInstance& t) -> std::string {
          const bool balanced = balanced_vertex(t.census, 8);
          if (balanced != (t.n == 8)) {
            return std::string("OV(8)=MV(8)=IV(8) is ") +
                   (balanced ? "true" : "false") + ": " + row_text(t.census.at(8));
          }
          return {};
        });
  claim("tc81-seven-cycles",
        "TC(8,1): two families of 7-cycles, OV(7)=IV(7)=5n and MV(7)=4n",
        [](int n, int k) { return n == 8 && k == 1; },
        [](const TablesInstance& t) -> std::string {
          const CensusRow& r = t.census.at(7);
          const DiscrepancyReport& d = t.at(7);
          if (r.OV != 5 * t.n || r.IV != 5 * t.n || r.MV != 4 * t.n ||
              !d.unmatched.empty()) {
            return row_text(r) + ", " + std::to_string(d.unmatched.size()) +
                   " cycles outside the two families";
          }
          return {};
        });
  claim("tc61-eight-cycle-types",
        "TC(6,1): the 8-cycles are of types 1, 9+, 9-, 10+, 10-, 11, 12",
        [](int n, int k) { return n == 6 && k == 1; },
        [](const TablesInstance& t) -> std::string {
          const DiscrepancyReport& r = t.at(8);
          const std::set<std::string> expected = {"1",   "9+",  "9-", "10+",
                                                  "10-", "11", "12"};
          std::set<std::string> seen;
          for (const PatternTally& tally : r.patterns) {
            if (tally.matched > 0) seen.insert(tally.id.label);
          }
          std::string issue;
          if (seen != expected) {
            std::string s;
            for (const auto& x : seen) s += (s.empty() ? "" : ",") + x;
            issue = "matched types {" + s + "}";
          }
          if (!r.unmatched.empty()) {
            issue += (issue.empty() ? "" : "; ") +
                     std::to_string(r.unmatched.size()) + " unmatched 8-cycles";
          }
          return issue;
        });
  claim("tc61-edge-census-l8",
        "TC(6,1): OE(8)=IE(8)=9n, ME(8)=6n, S1E(8)=S2E(8)=4n",
        [](int n, int k) { return n == 6 && k == 1; },
        [](const TablesInstance& t) -> std::string {
          const CensusRow& r = t.census.at(8);
          const int n = t.n;
          if (r.OE != 9 * n || r.IE != 9 * n || r.ME != 6 * n ||
              r.S1E != 4 * n || r.S2E != 4 * n) {
            return "observed " + row_text(r);
          }
          return {};
        });
  claim("k1-edge-imbalance",
        "k=1: the edge census is unbalanced at l=6 (n≠6) or l=8 (n=6)",
        [](int, int k) { return k == 1; },
        [](const TablesInstance& t) -> std::string {
          const int l = t.n == 6 ? 8 : 6;
          if (balanced_edge(t.census, l)) {
            return "edge census balanced at l=" + std::to_string(l);
          }
          return {};
        });
  claim("k2-seven-generic",
        "k=2, n∉{6,8,14,16}: only the n cycles a_i a_i+1 a_i+2 b_i+2 c_i+2 c_i b_i; "
        "OE(7)=S1E(7)=S2E(7)=2n, ME(7)=0, IE(7)=n",
        [](int n, int k) {
          return k == 2 && n != 6 && n != 8 && n != 14 && n != 16;
        },
        [](const TablesInstance& t) -> std::string {
          const CensusRow& r = t.census.at(7);
          const DiscrepancyReport& d = t.at(7);
          const int n = t.n;
          if (r.count != n || r.OE != 2 * n || r.S1E != 2 * n ||
              r.S2E != 2 * n || r.ME != 0 || r.IE != n || !d.unmatched.empty()) {
            return std::to_string(r.count) + " seven-cycles, " + row_text(r);
          }
          return {};
        });
  // The same statement also appears with spoke counts at length 6; that
  // literal reading is checked separately rather than assumed to be a slip.
  claim("k2-spokes-at-length-6",
        "k=2, n∉{6,8,14,16}: S1E(6)=S2E(6)=2n",
        [](int n, int k) {
          return k == 2 && n != 6 && n != 8 && n != 14 && n != 16;
        },
        [](const TablesInstance& t) -> std::string {
          const CensusRow& r = t.census.at(6);
          if (r.S1E != 2 * t.n || r.S2E != 2 * t.n) {
            return std::to_string(r.count) + " six-cycles, " + row_text(r);
          }
          return {};
        });
  claim("k2-special-oe7-ne-ie7", "k=2, n∈{6,8,14,16}: OE(7)≠IE(7)",
        [](int n, int k) {
          return k == 2 && (n == 6 || n == 8 || n == 14 || n == 16);
        },
        [](const TablesInstance& t) -> std::string {
          const CensusRow& r = t.census.at(7);
          if (r.OE == r.IE) {
            return "OE(7)=IE(7)=" + std::to_string(r.OE);
          }
          return {};
        });
  claim("k2-vertex-imbalance-l7", "k=2: OV(7)=MV(7)=IV(7) never holds",
        [](int, int k) { return k == 2; },
        [](const TablesInstance& t) -> std::string {
          if (balanced_vertex(t.census, 7)) return "balanced: " + row_text(t.census.at(7));
          return {};
        });
  claim("kge3-vertex-imbalance-l8",
        "k≥3, (n,k)≠(10,3): OV(8)=MV(8)=IV(8) never holds",
        [](int n, int k) { return k >= 3 && !(n == 10 && k == 3); },
        [](const TablesInstance& t) -> std::string {
          if (balanced_vertex(t.census, 8)) return "balanced: " + row_text(t.census.at(8));
          return {};
        });
  claim("kge3-edge-imbalance-l8",
        "k≥3, (n,k)≠(10,3): OE(8)=S1E(8)=2ME(8)=S2E(8)=IE(8) never holds",
        [](int n, int k) { return k >= 3 && !(n == 10 && k == 3); },
        [](const TablesInstance& t) -> std::string {
          if (balanced_edge(t.census, 8)) return "balanced: " + row_text(t.census.at(8));
          return {};
        });
  return out;
}

json row_check_json(const RowCheck& c) {
  json deltas = json::array();
  for (const RowDelta& d : c.deltas) {
    deltas.push_back({{"n", d.nk.first},
                      {"k", d.nk.second},
                      {"observed_minus_printed", quantity_delta(d.observed, d.printed)},
                      {"derived_minus_printed", quantity_delta(d.predicted, d.printed)}});
  }
  return {{"statement", c.statement},
          {"status", to_string(c.verdict)},
          {"instances", nk_list(c.instances)},
          {"evidence", c.evidence},
          {"deltas", std::move(deltas)}};
}

json sweep_object(const SweepResult& r) {
  json per_instance = json::array();
  std::vector<NK> survivors;
  for (const InstanceResult& i : r.instances) {
    if (i.filter_passed) survivors.emplace_back(i.n, i.k);
    json entry = {{"n", i.n},
                  {"k", i.k},
                  {"filter_passed", i.filter_passed},
                  {"first_imbalanced_length", i.first_imbalanced_length},
                  {"method", i.full_method ? "full-automorphism"
                                           : "census-filter-only"}};
    if (i.transitive) entry["transitive"] = *i.transitive;
    if (i.group_order) entry["group_order"] = *i.group_order;
    if (!i.error.empty()) entry["error"] = i.error;
    per_instance.push_back(std::move(entry));
  }
  return {{"family", to_string(r.family)},
          {"n_max", r.n_max},
          {"property", to_string(r.property)},
          {"l_max", r.l_max},
          {"hits", nk_list(r.hits)},
          {"instance_count", r.instances.size()},
          {"filter_survivors", nk_list(survivors)},
          {"filter_sound", r.filter_sound()},
          {"errors", nk_list(r.errors())},
          {"instances", std::move(per_instance)}};
}

json petersen_object(const PetersenVertexReport& r) {
  json entries = json::array();
  for (const PetersenVertexEntry& e : r.entries) {
    entries.push_back({{"n", e.n},
                       {"k", e.k},
                       {"congruence", e.congruence},
                       {"vertex_transitive", e.vertex_transitive},
                       {"group_order", e.group_order}});
  }
  return {{"n_max", r.n_max},
          {"exceptions", nk_list(r.exceptions)},
          {"errors", nk_list(r.errors)},
          {"consistent", r.consistent()},
          {"entries", std::move(entries)}};
}

json tables_object(const TablesReport& r) {
  json rows = json::object();
  for (const RowCheck& c : r.pattern_rows) rows[c.id] = row_check_json(c);
  for (const RowCheck& c : r.aggregate_rows) rows[c.id] = row_check_json(c);
  json claims = json::object();
  for (const RowCheck& c : r.claims) claims[c.id] = row_check_json(c);
  json classification = json::array();
  for (const DiscrepancyReport& d : r.discrepancies) {
    const LabeledGraph g = build_tc(GtcParams(d.n, d.k));
    classification.push_back(json::parse(report_json(g, d)));
  }
  return {{"n_max", r.n_max},
          {"rows", std::move(rows)},
          {"claims", std::move(claims)},
          {"classification", std::move(classification)}};
}

void markdown_checks(std::ostringstream& out, const std::vector<RowCheck>& checks) {
  out << "| id | status | instances | evidence |\n|---|---|---|---|\n";
  for (const RowCheck& c : checks) {
    std::string evidence;
    for (const auto& e : c.evidence) evidence += (evidence.empty() ? "" : "<br>") + e;
    out << "| " << c.id << " | " << to_string(c.verdict) << " | "
        << c.instances.size() << " | " << evidence << " |\n";
  }
  out << '\n';
}

}  // namespace

std::string_view to_string(Property p) {
  return p == Property::Vertex ? "vertex" : "edge";
}

std::optional<Property> property_from_string(std::string_view s) {
  if (s == "vertex") return Property::Vertex;
  if (s == "edge") return Property::Edge;
  return std::nullopt;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Confirmed: return "confirmed";
    case Verdict::Unconfirmed: return "unconfirmed";
    case Verdict::NotExercised: return "not-exercised";
  }
  return "?";
}

std::vector<NK> valid_params(Family family, int n_max) {
  std::vector<NK> out;
  const int n_min = family == Family::TutteCoxeter ? 4 : 3;
  for (int n = n_min; n <= n_max; ++n) {
    if (family == Family::TutteCoxeter && n % 2 != 0) continue;
    for (int k = 1; 2 * k < n; ++k) out.emplace_back(n, k);
  }
  return out;
}

bool SweepResult::filter_sound() const {
  return std::all_of(instances.begin(), instances.end(),
                     [](const InstanceResult& i) {
                       return i.filter_passed || !i.transitive.value_or(false);
                     });
}

std::vector<NK> SweepResult::errors() const {
  std::vector<NK> out;
  for (const InstanceResult& i : instances) {
    if (!i.error.empty()) out.emplace_back(i.n, i.k);
  }
  return out;
}

SweepResult sweep(Family family, int n_max, Property property,
                  const SweepOptions& options) {
  const int n_min = family == Family::TutteCoxeter ? 4 : 3;
  if (n_max < n_min) {
    throw ParamError("nmax must be at least " + std::to_string(n_min));
  }
  if (options.l_max < 3) throw ParamError("l_max must be at least 3");
  const std::vector<NK> params = valid_params(family, n_max);
  SweepResult result{family, n_max, property, options.l_max, {}, {}};
  result.instances.resize(params.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count(options.jobs))
  for (std::size_t idx = 0; idx < params.size(); ++idx) {
    const auto [n, k] = params[idx];
    InstanceResult& out = result.instances[idx];
    out.n = n;
    out.k = k;
    try {
      const LabeledGraph g = build_graph(family, n, k);
      const CensusTable t = census_from_cycles(
          g, enumerate_cycles_serial(g, options.l_max), 3, options.l_max);
      for (int l = 3; l <= options.l_max && out.first_imbalanced_length == 0; ++l) {
        const bool ok = property == Property::Vertex ? balanced_vertex(t, l)
                                                     : balanced_edge(t, l);
        if (!ok) out.first_imbalanced_length = l;
      }
      out.filter_passed = out.first_imbalanced_length == 0;
      if (out.filter_passed || options.audit_filter) {
        out.full_method = true;
        const AutReport aut = automorphisms(g, options.aut);
        out.transitive = property == Property::Vertex ? aut.vertex_transitive
                                                      : aut.edge_transitive;
        out.group_order = aut.group_order;
      }
    } catch (const std::exception& e) {
      out.error = e.what();
    }
  }
  for (const InstanceResult& i : result.instances) {
    if (i.transitive.value_or(false)) result.hits.emplace_back(i.n, i.k);
  }
  return result;
}

bool PetersenVertexReport::consistent() const {
  const std::vector<NK> expected =
      n_max >= 10 ? std::vector<NK>{{10, 2}} : std::vector<NK>{};
  return errors.empty() && exceptions == expected;
}

PetersenVertexReport petersen_vertex_check(int n_max, const SweepOptions& options) {
  if (n_max < 3) throw ParamError("nmax must be at least 3");
  const std::vector<NK> params = valid_params(Family::Petersen, n_max);
  PetersenVertexReport report;
  report.n_max = n_max;
  report.entries.resize(params.size());
  std::vector<std::string> failures(params.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count(options.jobs))
  for (std::size_t idx = 0; idx < params.size(); ++idx) {
    const auto [n, k] = params[idx];
    PetersenVertexEntry& e = report.entries[idx];
    e.n = n;
    e.k = k;
    const int square = (k * k) % n;
    e.congruence = square == 1 || square == n - 1;
    try {
      const AutReport aut =
          automorphisms(build_petersen(PetersenParams(n, k)), options.aut);
      e.vertex_transitive = aut.vertex_transitive;
      e.group_order = aut.group_order;
    } catch (const std::exception& ex) {
      failures[idx] = ex.what();
    }
  }
  for (std::size_t idx = 0; idx < params.size(); ++idx) {
    const PetersenVertexEntry& e = report.entries[idx];
    if (!failures[idx].empty()) {
      report.errors.emplace_back(e.n, e.k);
    } else if (e.congruence != e.vertex_transitive) {
      report.exceptions.emplace_back(e.n, e.k);
    }
  }
  return report;
}

bool claims_exhaustive(int n, int k, int l) {
  switch (l) {
    case 6: return k == 1 && n != 6;
    case 7: return k == 2 || (k == 1 && n == 8);
    case 8: return k != 2 && !(n == 10 && k == 3);
    default: return false;
  }
}

TablesReport verify_tables(int n_max, const SweepOptions& options) {
  if (n_max < 6) throw ParamError("nmax must be at least 6");
  const std::vector<NK> params = valid_params(Family::TutteCoxeter, n_max);
  std::vector<TablesInstance> all(params.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count(options.jobs))
  for (std::size_t idx = 0; idx < params.size(); ++idx) {
    const auto [n, k] = params[idx];
    const LabeledGraph g = build_tc(GtcParams(n, k));
    const CyclesByLength cycles = enumerate_cycles_serial(g, 8);
    TablesInstance& inst = all[idx];
    inst.n = n;
    inst.k = k;
    inst.census = census_from_cycles(g, cycles, 3, 8);
    for (int l = 6; l <= 8; ++l) inst.by_length.push_back(classify(g, cycles, l));
  }

  TablesReport report;
  report.n_max = n_max;
  report.pattern_rows = check_pattern_rows(all);
  report.aggregate_rows = check_aggregate_rows(all);
  report.claims = check_claims(all);
  for (const TablesInstance& inst : all) {
    for (int l = 6; l <= 8; ++l) {
      if (claims_exhaustive(inst.n, inst.k, l) && inst.at(l).has_discrepancy()) {
        report.discrepancies.push_back(inst.at(l));
      }
    }
  }
  return report;
}

std::string sweep_json(const SweepResult& r) { return sweep_object(r).dump(2) + "\n"; }

std::string petersen_json(const PetersenVertexReport& r) {
  return petersen_object(r).dump(2) + "\n";
}

std::string tables_json(const TablesReport& r) {
  return tables_object(r).dump(2) + "\n";
}

std::string verification_json(const std::vector<SweepResult>* sweeps,
                              const TablesReport* tables,
                              const PetersenVertexReport* petersen) {
  json doc = json::object();
  if (sweeps != nullptr) {
    json s = json::object();
    for (const SweepResult& r : *sweeps) {
      s[std::string(to_string(r.family)) + "/" + std::string(to_string(r.property))] =
          sweep_object(r);
    }
    doc["sweep"] = std::move(s);
  }
  if (tables != nullptr) doc["tables"] = tables_object(*tables);
  if (petersen != nullptr) doc["petersen"] = petersen_object(*petersen);
  return doc.dump(2) + "\n";
}

std::string verification_markdown(const std::vector<SweepResult>* sweeps,
                                  const TablesReport* tables,
                                  const PetersenVertexReport* petersen) {
  std::ostringstream out;
  if (sweeps != nullptr) {
    out << "# Transitivity sweeps\n\n"
        << "| family | property | n ≤ | instances | filter survivors | hits | filter sound |\n"
        << "|---|---|---|---|---|---|---|\n";
    for (const SweepResult& r : *sweeps) {
      std::size_t survivors = 0;
      for (const auto& i : r.instances) survivors += i.filter_passed ? 1 : 0;
      std::string hits;
      for (const auto& [n, k] : r.hits) {
        hits += (hits.empty() ? "" : " ") + std::string("(") + std::to_string(n) +
                "," + std::to_string(k) + ")";
      }
      out << "| " << to_string(r.family) << " | " << to_string(r.property) << " | "
          << r.n_max << " | " << r.instances.size() << " | " << survivors << " | "
          << hits << " | " << (r.filter_sound() ? "yes" : "no") << " |\n";
    }
    out << '\n';
  }
  if (tables != nullptr) {
    out << "# Cycle tables (n ≤ " << tables->n_max << ")\n\n## Families\n\n";
    markdown_checks(out, tables->pattern_rows);
    out << "## 8-cycle aggregates, k ≥ 3\n\n";
    markdown_checks(out, tables->aggregate_rows);
    out << "## Claims\n\n";
    markdown_checks(out, tables->claims);
    out << "## Classification discrepancies\n\n";
    if (tables->discrepancies.empty()) out << "None.\n\n";
    for (const DiscrepancyReport& d : tables->discrepancies) {
      out << "- " << tc_name(d.n, d.k) << ", l=" << d.l << ": "
          << d.unmatched.size() << " unmatched; delta " << row_text(d.delta())
          << '\n';
    }
    out << '\n';
  }
  if (petersen != nullptr) {
    out << "# Petersen vertex-transitivity vs k² ≡ ±1 (mod n), n ≤ "
        << petersen->n_max << "\n\n";
    std::string ex;
    for (const auto& [n, k] : petersen->exceptions) {
      ex += (ex.empty() ? "" : " ") + nk_name("P", n, k);
    }
    out << "Exceptions: " << (ex.empty() ? "none" : ex) << "; consistent: "
        << (petersen->consistent() ? "yes" : "no") << "\n";
  }
  return out.str();
}

}  // namespace gtc
