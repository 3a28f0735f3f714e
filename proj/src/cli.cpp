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

#include "gtc/cli.hpp"

#include "CLI11.hpp"

#include "gtc/automorphism.hpp"
#include "gtc/census.hpp"
#include "gtc/error.hpp"
#include "gtc/graph.hpp"
#include "gtc/io.hpp"
#include "gtc/patterns.hpp"
#include "gtc/verification.hpp"

namespace gtc::cli {

namespace {

struct GraphArgs {
  std::string family = "tc";
  int n = 0;
  int k = 0;
};

void add_graph_options(CLI::App* cmd, GraphArgs& args, bool with_family = true) {
  if (with_family) {
    cmd->add_option("--family", args.family, "Graph family")
        ->check(CLI::IsMember({"tc", "petersen"}))
        ->capture_default_str();
  }
  cmd->add_option("--n", args.n, "Number of indices per layer")->required();
  cmd->add_option("--k", args.k, "Inner-edge step")->required();
}

LabeledGraph build(const GraphArgs& args) {
  return build_graph(*family_from_string(args.family), args.n, args.k);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Tutte-Coxeter and Petersen graph toolkit", "gtc"};
  app.require_subcommand(1);
  int jobs = 0;

  GraphArgs build_args;
  std::string build_format = "graph6";
  auto* build_cmd = app.add_subcommand("build", "Serialize TC(n,k) or P(n,k)");
  add_graph_options(build_cmd, build_args);
  build_cmd->add_option("--format", build_format, "Output format")
      ->check(CLI::IsMember({"graph6", "dot", "edges", "edge-list", "json"}))
      ->capture_default_str();

  GraphArgs census_args;
  int lmin = 3;
  int lmax = 8;
  std::string census_format = "csv";
  auto* census_cmd = app.add_subcommand("census", "Cycle census by class");
  add_graph_options(census_cmd, census_args);
  census_cmd->add_option("--lmin", lmin, "Shortest cycle length")->capture_default_str();
  census_cmd->add_option("--lmax", lmax, "Longest cycle length")->capture_default_str();
  census_cmd->add_option("--format", census_format, "Output format")
      ->check(CLI::IsMember({"csv", "json", "md"}))
      ->capture_default_str();
  census_cmd->add_option("--jobs", jobs, "Worker threads (0: all)");

  GraphArgs classify_args;
  int classify_l = 8;
  bool strict = false;
  std::string classify_format = "json";
  auto* classify_cmd =
      app.add_subcommand("classify", "Match l-cycles of TC(n,k) against the cycle tables");
  add_graph_options(classify_cmd, classify_args, false);
  classify_cmd->add_option("--l", classify_l, "Cycle length")->capture_default_str();
  classify_cmd->add_flag("--strict", strict, "Exit 3 on any discrepancy");
  classify_cmd->add_option("--format", classify_format, "Output format")
      ->check(CLI::IsMember({"json", "md"}))
      ->capture_default_str();
  classify_cmd->add_option("--jobs", jobs, "Worker threads (0: all)");

  GraphArgs orbits_args;
  auto* orbits_cmd = app.add_subcommand("orbits", "Automorphism group order and orbits");
  add_graph_options(orbits_cmd, orbits_args);

  bool verify_tables_flag = false;
  bool verify_petersen_flag = false;
  bool verify_sweeps_flag = false;
  bool verify_strict = false;
  int verify_nmax = 40;
  std::string verify_format = "json";
  auto* verify_cmd = app.add_subcommand("verify", "Check tables, claims and known facts");
  verify_cmd->add_flag("--tables", verify_tables_flag, "Cycle tables and stated claims");
  verify_cmd->add_flag("--petersen", verify_petersen_flag,
                       "Petersen vertex-transitivity vs k^2 = +-1 (mod n)");
  verify_cmd->add_flag("--sweeps", verify_sweeps_flag,
                       "TC vertex and edge transitivity sweeps");
  verify_cmd->add_option("--nmax", verify_nmax, "Largest n")->capture_default_str();
  verify_cmd->add_flag("--strict", verify_strict,
                       "Exit 3 if anything is unconfirmed or inconsistent");
  verify_cmd->add_option("--format", verify_format, "Output format")
      ->check(CLI::IsMember({"json", "md"}))
      ->capture_default_str();
  verify_cmd->add_option("--jobs", jobs, "Worker threads (0: all)");

  std::string sweep_family = "tc";
  std::string sweep_property = "vertex";
  int sweep_nmax = 40;
  int sweep_lmax = 8;
  bool sweep_audit = false;
  auto* sweep_cmd = app.add_subcommand("sweep", "Find all transitive instances up to nmax");
  sweep_cmd->add_option("--family", sweep_family, "Graph family")
      ->check(CLI::IsMember({"tc", "petersen"}))
      ->capture_default_str();
  sweep_cmd->add_option("--nmax", sweep_nmax, "Largest n")->capture_default_str();
  sweep_cmd->add_option("--property", sweep_property, "Transitivity kind")
      ->check(CLI::IsMember({"vertex", "edge"}))
      ->capture_default_str();
  sweep_cmd->add_option("--lmax", sweep_lmax, "Census filter bound")->capture_default_str();
  sweep_cmd->add_flag("--audit", sweep_audit,
                      "Also search instances rejected by the census filter");
  sweep_cmd->add_option("--jobs", jobs, "Worker threads (0: all)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const CLI::App* failing = &app;
    for (const CLI::App* sub : app.get_subcommands()) failing = sub;
    err << failing->help();
    return kExitInvalid;
  }
  if (jobs < 0) {
    err << "error: --jobs must be nonnegative\n";
    return kExitInvalid;
  }

  try {
    if (build_cmd->parsed()) {
      const LabeledGraph g = build(build_args);
      out << export_graph(g, build_format);
      if (build_format == "graph6") out << '\n';
      return kExitOk;
    }
    if (census_cmd->parsed()) {
      const LabeledGraph g = build(census_args);
      const CensusTable t = census(g, lmin, lmax, jobs);
      if (census_format == "csv") out << census_csv(t);
      if (census_format == "json") out << census_json(t);
      if (census_format == "md") out << census_markdown(t);
      return kExitOk;
    }
    if (classify_cmd->parsed()) {
      const LabeledGraph g = build_tc(GtcParams(classify_args.n, classify_args.k));
      if (classify_l < 3) throw ParamError("--l must be at least 3");
      const DiscrepancyReport r = classify(g, enumerate_cycles(g, classify_l, jobs), classify_l);
      out << (classify_format == "md" ? report_markdown(g, r) : report_json(g, r));
      return strict && r.has_discrepancy() ? kExitDiscrepancy : kExitOk;
    }
    if (orbits_cmd->parsed()) {
      const LabeledGraph g = build(orbits_args);
      out << aut_report_json(g, automorphisms(g, AutOptions::from_env()));
      return kExitOk;
    }
    if (verify_cmd->parsed()) {
      if (!verify_tables_flag && !verify_petersen_flag && !verify_sweeps_flag) {
        throw ParamError("verify needs at least one of --tables, --petersen, --sweeps");
      }
      SweepOptions options;
      options.jobs = jobs;
      std::optional<std::vector<SweepResult>> sweeps;
      std::optional<TablesReport> tables;
      std::optional<PetersenVertexReport> petersen;
      if (verify_sweeps_flag) {
        sweeps.emplace();
        for (Property p : {Property::Vertex, Property::Edge}) {
          sweeps->push_back(sweep(Family::TutteCoxeter, verify_nmax, p, options));
        }
      }
      if (verify_tables_flag) tables = verify_tables(verify_nmax, options);
      if (verify_petersen_flag) petersen = petersen_vertex_check(verify_nmax, options);
      const auto* s = sweeps ? &*sweeps : nullptr;
      const auto* t = tables ? &*tables : nullptr;
      const auto* p = petersen ? &*petersen : nullptr;
      out << (verify_format == "md" ? verification_markdown(s, t, p)
                                    : verification_json(s, t, p));
      bool failed = false;
      if (t != nullptr) {
        for (const auto* group : {&t->pattern_rows, &t->aggregate_rows, &t->claims}) {
          for (const RowCheck& c : *group) failed |= c.verdict == Verdict::Unconfirmed;
        }
      }
      if (p != nullptr) failed |= !p->consistent();
      if (s != nullptr) {
        for (const SweepResult& r : *s) failed |= !r.filter_sound();
      }
      return verify_strict && failed ? kExitDiscrepancy : kExitOk;
    }
    if (sweep_cmd->parsed()) {
      SweepOptions options;
      options.jobs = jobs;
      options.l_max = sweep_lmax;
      options.audit_filter = sweep_audit;
      const SweepResult r = sweep(*family_from_string(sweep_family), sweep_nmax,
                                  *property_from_string(sweep_property), options);
      out << sweep_json(r);
      return r.errors().empty() ? kExitOk : kExitResource;
    }
  } catch (const ParamError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitResource;
  }
  return kExitInvalid;
}

}  // namespace gtc::cli
