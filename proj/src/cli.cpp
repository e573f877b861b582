// Copyright 2026 The Whiteboard Authors. All Rights Reserved.
//
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


#include "whiteboard/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "whiteboard/adversary.hpp"
#include "whiteboard/graph.hpp"
#include "whiteboard/json_io.hpp"
#include "whiteboard/protocols.hpp"
#include "whiteboard/verify.hpp"

namespace whiteboard::cli {

namespace {

struct ProtocolArgs {
  std::string graph_path;
  std::string protocol;
  std::optional<int> x;
  std::optional<int> root;
  std::string model;
  int budget = BudgetConfig{}.c_msg;
};

void add_protocol_options(CLI::App& cmd, ProtocolArgs& args) {
  cmd.add_option("--graph", args.graph_path, "graph file")->required();
  cmd.add_option("--protocol", args.protocol,
                 "mis | two-cliques | square-c | spanning-tree | bfs | bfs-bipartite | num-edges")
      ->required();
  cmd.add_option("--x", args.x, "distinguished node for mis");
  cmd.add_option("--root", args.root, "root for spanning-tree and bfs");
  cmd.add_option("--model", args.model, "simasync | simsync | freeasync | freesync")->required();
  cmd.add_option("--budget", args.budget, "c_msg: payload budget is c_msg * ceil(log2(n+1))")
      ->check(CLI::PositiveNumber);
}

struct Prepared {
  LabeledGraph graph;
  Protocol protocol;
  Model model;
  ProblemInstance problem;
};

ProblemInstance problem_for(const std::string& protocol, const ProtocolArgs& args) {
  if (protocol == "mis") return {Problem::kMis, args.x};
  if (protocol == "two-cliques") return {Problem::kTwoCliques, std::nullopt};
  if (protocol == "square-c") return {Problem::kSquare, std::nullopt};
  if (protocol == "spanning-tree") return {Problem::kSpanningTree, args.root};
  if (protocol == "num-edges") return {Problem::kNumEdges, std::nullopt};
  return {Problem::kBfs, args.root};
}

Prepared prepare(const ProtocolArgs& args) {
  const auto model = model_from_string(args.model);
  if (!model) throw ParseError("unknown model '" + args.model + "'");
  auto protocol = protocols::by_name(args.protocol, args.x, args.root);
  if (!protocol) throw ParseError("unknown protocol '" + args.protocol + "'");
  LabeledGraph graph = read_graph_file(args.graph_path);
  ProblemInstance problem = problem_for(args.protocol, args);
  problem.validate(graph.order());
  // Protocols run unchanged in any stronger model through the lift chain.
  return {std::move(graph), lift_to(*protocol, *model), *model, problem};
}

// Oracle verdict, or nullopt when the graph is outside the problem's input class.
std::optional<Verdict> judge(const Prepared& prepared, const Output& out, std::ostream& err) {
  try {
    return verify::check_output(prepared.problem, prepared.graph, out);
  } catch (const NotInInputClass& e) {
    err << "note: no oracle verdict: " << e.what() << "\n";
    return std::nullopt;
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw ParseError("cannot write " + path);
  file << text;
}

// ---------------------------------------------------------------------------

struct GenArgs {
  std::string kind;
  std::string base;
  std::optional<int> i;
  std::optional<int> j;
  std::optional<int> n;
  std::string out_path;
};

int do_gen(const GenArgs& args, std::ostream& out) {
  auto need = [](const std::optional<int>& v, const char* flag) {
    if (!v) throw InvalidSpec(std::string("missing ") + flag);
    return *v;
  };
  GadgetSpec spec;
  if (!args.base.empty()) spec.base = read_graph_file(args.base);
  if (args.kind == "mis-gadget") {
    spec.kind = MisGadget{need(args.i, "--i"), need(args.j, "--j")};
  } else if (args.kind == "class-c") {
    spec.kind = ClassC{need(args.i, "--i"), need(args.j, "--j")};
  } else if (args.kind == "bfs-gadget") {
    spec.kind = BfsGadget{need(args.i, "--i")};
  } else if (args.kind == "two-cliques") {
    spec.kind = TwoCliquesGraph{need(args.n, "--n")};
  } else if (args.kind == "cycle") {
    spec.kind = CycleGraph{need(args.n, "--n")};
  } else if (args.kind == "path") {
    spec.kind = PathGraph{need(args.n, "--n")};
  } else {
    throw ParseError("unknown gadget kind '" + args.kind + "'");
  }
  const LabeledGraph g = generate(spec);
  write_graph_file(args.out_path, g);
  out << "wrote " << args.out_path << " (n=" << g.order() << ", m=" << g.edge_count() << ")\n";
  return kOk;
}

int do_run(const ProtocolArgs& args, const std::string& scheduler, const std::string& trace_path,
           std::ostream& out, std::ostream& err) {
  const Prepared prepared = prepare(args);
  const Scheduler sched = parse_scheduler(scheduler);
  std::ostringstream trace;
  try {
    const RunResult result =
        run(prepared.graph, prepared.protocol, prepared.model, sched, BudgetConfig{args.budget});
    write_trace(trace, result);
    if (!trace_path.empty()) write_text(trace_path, trace.str());
    out << describe(result.output) << "\n";
    const auto verdict = judge(prepared, result.output, err);
    if (verdict && !*verdict) {
      err << "incorrect: " << verdict->reason << "\n";
      return kPropertyViolated;
    }
    return kOk;
  } catch (const DeadlockError& e) {
    write_trace(trace, e);
    if (!trace_path.empty()) write_text(trace_path, trace.str());
    err << e.what() << "\n";
    return kDeadlock;
  } catch (const BudgetError& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kPropertyViolated;
  }
}

struct SweepArgs {
  std::size_t max_states = SweepLimits{}.max_states;
  double max_time_s = 60.0;
  int jobs = 1;
  bool no_memo = false;
  std::string report_path;
};

int do_sweep(const ProtocolArgs& args, const SweepArgs& sweep_args, std::ostream& out,
             std::ostream& err) {
  const Prepared prepared = prepare(args);
  SweepOptions options;
  options.limits.max_states = sweep_args.max_states;
  options.limits.max_time =
      std::chrono::milliseconds(static_cast<long long>(sweep_args.max_time_s * 1000.0));
  options.memoize = !sweep_args.no_memo;
  options.jobs = sweep_args.jobs;
  options.budget = BudgetConfig{args.budget};
  bool oracle_available = true;
  const OutputCheck check = [&](const Output& o) {
    const auto verdict = judge(prepared, o, err);
    if (!verdict) oracle_available = false;
    return verdict.value_or(Verdict::Correct());
  };
  const SweepReport report = sweep(prepared.graph, prepared.protocol, prepared.model, check, options);
  if (!sweep_args.report_path.empty()) {
    write_text(sweep_args.report_path, to_json(report).dump(2) + "\n");
  }
  out << "schedules_explored=" << report.schedules_explored
      << " completed=" << report.completed_runs << " distinct_states=" << report.distinct_states
      << " failures=" << report.failures.size() << " deadlocks=" << report.deadlocks.size()
      << " budget_violations=" << report.budget_violations.size()
      << " exhaustive=" << (report.exhaustive ? "true" : "false") << "\n";
  for (const auto& o : report.outcomes) out << "outcome " << describe(o) << "\n";
  if (!oracle_available) err << "note: outputs were not checked against an oracle\n";
  if (!report.exhaustive) err << "note: sweep stopped early (" << report.limit << ")\n";
  if (!report.failures.empty() || !report.budget_violations.empty()) return kPropertyViolated;
  if (!report.deadlocks.empty()) return kDeadlock;
  return kOk;
}

int do_audit(const std::string& family_name, int n, int budget, std::ostream& out) {
  const auto family = verify::family_from_string(family_name);
  if (!family) throw ParseError("unknown family '" + family_name + "'");
  out << to_json(verify::lemma1_audit(*family, n, BudgetConfig{budget})).dump() << "\n";
  return kOk;
}

std::string render_set(const std::set<NodeId>& s) { return describe(VertexSet{s}); }

int do_oracle(const std::string& graph_path, const std::string& problem_name,
              std::optional<int> x, std::optional<int> root, std::ostream& out) {
  const auto problem = problem_from_string(problem_name);
  if (!problem) throw ParseError("unknown problem '" + problem_name + "'");
  const LabeledGraph g = read_graph_file(graph_path);
  const ProblemInstance instance{*problem, *problem == Problem::kMis ? x : root};
  instance.validate(g.order());
  switch (*problem) {
    case Problem::kSquare: out << (has_square(g) ? "true" : "false") << "\n"; break;
    case Problem::kTwoCliques: out << (is_two_cliques(g) ? "true" : "false") << "\n"; break;
    case Problem::kConnectivity:
    case Problem::kSpanningTree: out << (is_connected(g) ? "true" : "false") << "\n"; break;
    case Problem::kNumEdges: out << g.edge_count() << "\n"; break;
    case Problem::kBuild: out << describe(verify::adjacency_of(g)) << "\n"; break;
    case Problem::kBfs: {
      out << "{";
      bool first = true;
      for (const auto& [v, layer] : bfs_layers(g, *instance.distinguished)) {
        out << (first ? "" : ",") << v << ":";
        if (layer) {
          out << *layer;
        } else {
          out << "unreachable";
        }
        first = false;
      }
      out << "}\n";
      break;
    }
    case Problem::kMis: {
      if (g.order() > 20) throw CapExceeded("mis oracle enumerates subsets; n <= 20");
      // Every maximal independent set containing x, in subset-mask order.
      const NodeId pick = *instance.distinguished;
      for (std::uint32_t mask = 0; mask < (1U << g.order()); ++mask) {
        if (!((mask >> (pick - 1)) & 1U)) continue;
        std::set<NodeId> s;
        for (NodeId v = 1; v <= g.order(); ++v) {
          if ((mask >> (v - 1)) & 1U) s.insert(v);
        }
        if (mis_valid(g, pick, s)) out << render_set(s) << "\n";
      }
      break;
    }
  }
  return kOk;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shared-whiteboard model simulator", "whiteboard"};
  app.require_subcommand(1);

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "generate a gadget graph file");
  gen->add_option("--kind", gen_args.kind,
                  "mis-gadget | class-c | bfs-gadget | two-cliques | cycle | path")
      ->required();
  gen->add_option("--base", gen_args.base, "base graph file");
  gen->add_option("--i", gen_args.i);
  gen->add_option("--j", gen_args.j);
  gen->add_option("--n", gen_args.n);
  gen->add_option("--out", gen_args.out_path, "output graph file")->required();

  ProtocolArgs run_args;
  std::string scheduler;
  std::string trace_path;
  auto* run_cmd = app.add_subcommand("run", "execute one schedule");
  add_protocol_options(*run_cmd, run_args);
  run_cmd->add_option("--scheduler", scheduler, "fixed:ORDER | min-id | max-id | random:SEED")
      ->required();
  run_cmd->add_option("--trace", trace_path, "trace output (JSON lines)");

  ProtocolArgs sweep_protocol;
  SweepArgs sweep_args;
  auto* sweep_cmd = app.add_subcommand("sweep", "check every adversary schedule");
  add_protocol_options(*sweep_cmd, sweep_protocol);
  sweep_cmd->add_option("--max-states", sweep_args.max_states);
  sweep_cmd->add_option("--max-time", sweep_args.max_time_s, "seconds");
  sweep_cmd->add_option("--jobs", sweep_args.jobs)->check(CLI::PositiveNumber);
  sweep_cmd->add_flag("--no-memo", sweep_args.no_memo, "disable state memoization");
  sweep_cmd->add_option("--report", sweep_args.report_path, "write SweepReport JSON");

  std::string family;
  int audit_n = 0;
  int audit_budget = BudgetConfig{}.c_msg;
  auto* audit = app.add_subcommand("audit", "count a graph family against the board capacity");
  audit->add_option("--family", family, "all | square-free | class-c | two-cliques")->required();
  audit->add_option("--n", audit_n)->required();
  audit->add_option("--budget", audit_budget)->check(CLI::PositiveNumber);

  std::string oracle_graph;
  std::string oracle_problem;
  std::optional<int> oracle_x;
  std::optional<int> oracle_root;
  auto* oracle = app.add_subcommand("oracle", "print ground truth for a graph");
  oracle->add_option("--graph", oracle_graph)->required();
  oracle->add_option("--problem", oracle_problem,
                     "mis | two-cliques | square | spanning-tree | bfs | connectivity | "
                     "num-edges | build")
      ->required();
  oracle->add_option("--x", oracle_x);
  oracle->add_option("--root", oracle_root);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (gen->parsed()) return do_gen(gen_args, out);
    if (run_cmd->parsed()) return do_run(run_args, scheduler, trace_path, out, err);
    if (sweep_cmd->parsed()) return do_sweep(sweep_protocol, sweep_args, out, err);
    if (audit->parsed()) return do_audit(family, audit_n, audit_budget, out);
    if (oracle->parsed()) return do_oracle(oracle_graph, oracle_problem, oracle_x, oracle_root, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace whiteboard::cli
