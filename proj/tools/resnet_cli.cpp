// resnet: command-line front end for resistance queries, reductions,
// closed forms, diameter search and tower scans.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "resnet/analysis.hpp"
#include "resnet/builders.hpp"
#include "resnet/closed_forms.hpp"
#include "resnet/errors.hpp"
#include "resnet/exact_solver.hpp"
#include "resnet/io.hpp"
#include "resnet/reduction.hpp"
#include "resnet/report_io.hpp"
#include "resnet/spectra.hpp"

namespace {

using namespace resnet;

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kDisconnected = 3,
  kSingular = 4,
  kNoRewrite = 5,
  kBudget = 6,
};

struct Source {
  std::string graph;
  std::vector<std::string> builder;
};

void add_source_options(CLI::App* cmd, Source& src) {
  auto* g = cmd->add_option("--graph", src.graph, "Edge-list file (\"u v r [gadget]\" per line)");
  auto* b = cmd->add_option("--builder", src.builder,
                            "Named family: path N | cycle N | clique2 | hypercube K | ladder N |\n"
                            "block_tower N | fan N M | kmn M N | empty N")
                ->expected(1, 3);
  g->excludes(b);
  b->excludes(g);
}

std::size_t parse_size(const std::string& text, const char* what) {
  std::size_t pos = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != text.size() || text.empty() || text[0] == '-') {
    throw CLI::ValidationError(what, "expected a non-negative integer, got '" + text + "'");
  }
  return static_cast<std::size_t>(value);
}

ResistorNetwork build_named(const std::vector<std::string>& spec) {
  const std::string& name = spec.front();
  auto arity = [&](std::size_t n) {
    if (spec.size() != n + 1) {
      throw CLI::ValidationError("--builder", name + " takes " + std::to_string(n) + " argument(s)");
    }
  };
  auto arg = [&](std::size_t i) { return parse_size(spec.at(i), "--builder"); };
  if (name == "path") return arity(1), path(arg(1));
  if (name == "cycle") return arity(1), cycle(arg(1));
  if (name == "clique2") return arity(0), clique2();
  if (name == "hypercube") return arity(1), hypercube(arg(1));
  if (name == "ladder") return arity(1), ladder(arg(1));
  if (name == "block_tower") return arity(1), block_tower(arg(1));
  if (name == "fan") return arity(2), fan(arg(1), arg(2));
  if (name == "kmn") return arity(2), complete_bipartite(arg(1), arg(2));
  if (name == "empty") return arity(1), empty_graph(arg(1));
  throw CLI::ValidationError("--builder", "unknown builder '" + name + "'");
}

ResistorNetwork load(const Source& src) {
  if (!src.graph.empty()) return read_network_file(src.graph);
  if (!src.builder.empty()) return build_named(src.builder);
  throw CLI::ValidationError("source", "one of --graph or --builder is required");
}

// A vertex reference is a label, or failing that a numeric id.
VertexId resolve_vertex(const ResistorNetwork& net, const std::string& ref, const char* what) {
  if (auto id = net.find(ref)) return *id;
  std::size_t id = parse_size(ref, what);
  if (id >= net.vertex_count()) {
    throw CLI::ValidationError(what, "no vertex with label or id '" + ref + "'");
  }
  return id;
}

EvalMode parse_mode(const std::string& mode) { return mode == "spectral" ? EvalMode::spectral : EvalMode::exact; }

void check_budget(const ResistorNetwork& net, EvalMode mode) {
  const std::size_t budget = vertex_budget_from_env();
  if (mode == EvalMode::exact && net.vertex_count() > budget) {
    throw BudgetExceeded("network has " + std::to_string(net.vertex_count()) +
                         " vertices, above the exact-mode budget of " + std::to_string(budget) +
                         "; rerun with --mode spectral or raise RESNET_VERTEX_BUDGET");
  }
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + out_path + "' for writing");
  out << text;
}

// --- resistance -----------------------------------------------------------

struct ResistanceArgs {
  Source src;
  std::string u, v;
  std::string mode = "exact";
};

int run_resistance(const ResistanceArgs& a) {
  const ResistorNetwork net = load(a.src);
  const VertexId u = resolve_vertex(net, a.u, "--u");
  const VertexId v = resolve_vertex(net, a.v, "--v");
  if (u == v) throw CLI::ValidationError("--u/--v", "the two vertices must differ");
  const EvalMode mode = parse_mode(a.mode);
  check_budget(net, mode);
  if (mode == EvalMode::exact) {
    std::cout << to_string(resistance_exact(net, u, v)) << '\n';
  } else {
    if (net.has_gadget_edges()) throw MalformedNetwork("spectral mode needs positive resistances");
    const Spectrum s = generic_spectrum(build_laplacian(net));
    std::cout << format_spectral(resistance_spectral(s, u, v)) << '\n';
  }
  return kOk;
}

// --- reduce ---------------------------------------------------------------

struct ReduceArgs {
  Source src;
  std::string terminals;
  bool certify = false;
  bool fan = false;
  std::string out;
  std::string format = "json";
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      if (!cur.empty()) parts.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) parts.push_back(cur);
  return parts;
}

int run_reduce(const ReduceArgs& a) {
  const ResistorNetwork net = load(a.src);
  std::vector<std::string> labels;
  for (const auto& ref : split_list(a.terminals)) labels.push_back(net.label(resolve_vertex(net, ref, "--terminals")));
  if (labels.empty()) throw CLI::ValidationError("--terminals", "at least one terminal is required");
  const Terminals terminals(labels);

  ReduceOptions options;
  options.certify = a.certify;
  options.fan_pipeline = a.fan;
  const ReduceResult result = reduce(net, terminals, options);
  write_output(a.format == "text" ? trace_to_text(result.trace) : trace_to_json(result.trace), a.out);
  std::cerr << result.trace.steps.size() << " step(s); " << result.trace.final_network.vertex_count()
            << " vertices remain\n";
  if (!result.fully_reduced && !a.fan) {
    std::cerr << "resnet: no rewrite applies and non-terminal vertices remain\n";
    return kNoRewrite;
  }
  return kOk;
}

// --- scan -----------------------------------------------------------------

struct ScanArgs {
  std::size_t k = 2;
  std::size_t max_n = 20;
  std::string pair;
  std::string format = "csv";
  std::string mode = "exact";
  std::size_t jobs = 1;
  std::string out;
};

int run_scan(const ScanArgs& a) {
  ScanOptions options;
  options.k = a.k;
  options.n_max = a.max_n;
  options.mode = parse_mode(a.mode);
  options.jobs = a.jobs;
  options.vertex_budget = vertex_budget_from_env();
  if (!a.pair.empty()) {
    const auto parts = split_list(a.pair);
    if (parts.size() != 2) throw CLI::ValidationError("--pair", "expected i,j");
    options.pair = std::pair{parse_size(parts[0], "--pair"), parse_size(parts[1], "--pair")};
  }
  const ScanReport report = conjecture_scan(options);
  write_output(a.format == "json" ? scan_to_json(report) : scan_to_csv(report), a.out);

  const ScanRow& last = report.rows.back();
  std::cerr << "rows=" << report.rows.size() << " base=" << report.base << " pair=(b" << report.pair_i << ",b"
            << report.pair_j << ") limit=" << to_string(report.limit);
  if (last.diff) {
    std::cerr << " last_diff=" << format_double(*last.diff) << " deviation=" << format_double(*last.abs_dev);
  } else {
    std::cerr << " baseline R_2=" << (last.r_exact ? to_string(*last.r_exact) : format_double(last.r));
  }
  std::cerr << '\n';
  return kOk;
}

// --- diameter -------------------------------------------------------------

struct DiameterArgs {
  Source src;
  std::string format = "plain";
  std::string mode = "exact";
};

int run_diameter(const DiameterArgs& a) {
  const ResistorNetwork net = load(a.src);
  const EvalMode mode = parse_mode(a.mode);
  check_budget(net, mode);
  const DiameterReport report = resistance_diameter(net, mode);
  if (a.format == "csv") {
    std::cout << diameter_to_csv(report);
  } else if (a.format == "json") {
    std::cout << diameter_to_json(report);
  } else {
    std::cout << "D_r = " << (report.exact_value ? to_string(*report.exact_value) : format_spectral(report.value))
              << '\n';
    std::cout << report.pairs.size() << " pair(s):\n";
    for (const auto& [u, v] : report.pairs) {
      std::cout << "  " << u << ' ' << v << "  " << report.labels[u] << ' ' << report.labels[v] << '\n';
    }
  }
  return kOk;
}

// --- closed-form ----------------------------------------------------------

struct ClosedFormArgs {
  std::vector<std::string> args;
};

int run_closed_form(const ClosedFormArgs& a) {
  const auto& s = a.args;
  const std::string& name = s.front();
  auto arity = [&](std::size_t n) {
    if (s.size() != n + 1) {
      throw CLI::ValidationError("closed-form", name + " takes " + std::to_string(n) + " argument(s)");
    }
  };
  auto arg = [&](std::size_t i) { return parse_size(s.at(i), "closed-form"); };
  auto side = [&](std::size_t i) {
    if (s.at(i) == "m") return Side::m_side;
    if (s.at(i) == "n") return Side::n_side;
    throw CLI::ValidationError("closed-form", "side must be 'm' or 'n'");
  };

  if (name == "hypercube-diameter") {
    arity(1);
    std::cout << to_string(hypercube_diameter(arg(1))) << '\n';
  } else if (name == "kmn") {
    arity(4);
    std::cout << to_string(kmn_resistance(arg(1), arg(2), side(3), side(4))) << '\n';
  } else if (name == "ladder-endpoint") {
    arity(1);
    std::cout << format_spectral(ladder_endpoint_resistance(arg(1))) << '\n';
  } else if (name == "ladder-gap") {
    arity(1);
    std::cout << format_spectral(ladder_gap(arg(1))) << '\n';
  } else if (name == "fan") {
    arity(2);
    const FanChain chain = fan_chain_reduce(arg(1), arg(2));
    std::cout << "R[a1,a" << chain.n + 1 << "] = " << to_string(chain.endpoint_resistance()) << '\n'
              << "R[a1,b] = " << to_string(chain.apex_resistance()) << '\n';
  } else if (name == "decomposition") {
    arity(1);
    const DecompositionReport r = block_tower_decomposition(arg(1));
    std::cout << "lhs = " << to_string(r.lhs_exact) << '\n'
              << "rhs = " << to_string(r.rhs_exact) << '\n'
              << "residual = " << to_string(r.residual_exact) << '\n'
              << "rhs_closed_form = " << format_spectral(r.rhs_closed_form) << '\n'
              << "residual_closed_form = " << format_spectral(r.residual_closed_form) << '\n';
  } else {
    throw CLI::ValidationError("closed-form", "unknown form '" + name + "'");
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Effective resistance toolkit"};
  app.require_subcommand(1);
  app.footer(
      "Exit codes: 0 ok, 1 usage error, 2 network parse error, 3 disconnected network,\n"
      "4 singular system, 5 no rewrite applies, 6 vertex budget exceeded.\n"
      "RESNET_VERTEX_BUDGET overrides the vertex budget (default 4096). The budget caps\n"
      "exact-mode networks and every scan.");

  const std::vector<std::string> modes{"exact", "spectral"};

  ResistanceArgs res;
  auto* cmd_res = app.add_subcommand("resistance", "Effective resistance between two vertices");
  add_source_options(cmd_res, res.src);
  cmd_res->add_option("--u", res.u, "Vertex label or id")->required();
  cmd_res->add_option("--v", res.v, "Vertex label or id")->required();
  cmd_res->add_option("--mode", res.mode, "exact prints p/q; spectral prints 15 significant digits")
      ->check(CLI::IsMember(modes));

  ReduceArgs red;
  auto* cmd_red = app.add_subcommand("reduce", "Greedy series/parallel/elimination reduction with a trace");
  add_source_options(cmd_red, red.src);
  cmd_red->add_option("--terminals", red.terminals, "Comma-separated terminal labels or ids")->required();
  cmd_red->add_flag("--certify", red.certify, "Record terminal resistances after every step");
  cmd_red->add_flag("--fan", red.fan, "Also apply delta-Y on triangles (fan chain pipeline)");
  cmd_red->add_option("--out", red.out, "Write the trace here instead of stdout");
  cmd_red->add_option("--format", red.format, "Trace format")->check(CLI::IsMember({"json", "text"}));

  ScanArgs scan;
  auto* cmd_scan = app.add_subcommand(
      "scan",
      "Scan R_n between (a1,b_i) and (an,b_j) on P_n x base for n = 2..max-n.\n"
      "The base is C4 for k = 2 and Q_k otherwise. Output has max-n - 1 rows:\n"
      "the n = 2 baseline row (diff empty), then one row per n with\n"
      "diff = R_n - R_(n-1) and its deviation from 1/2^k.");
  cmd_scan->add_option("--k", scan.k, "Base dimension (base has 2^k vertices)")->check(CLI::Range(1, 20));
  cmd_scan->add_option("--max-n", scan.max_n, "Largest tower height")->check(CLI::Range(2, 1 << 20));
  cmd_scan->add_option("--pair", scan.pair, "1-based base indices i,j (default: b1 and its antipode)");
  cmd_scan->add_option("--format", scan.format, "Report format")->check(CLI::IsMember({"csv", "json"}));
  cmd_scan->add_option("--mode", scan.mode, "Evaluation mode")->check(CLI::IsMember(modes));
  cmd_scan->add_option("--jobs", scan.jobs, "Parallel workers")->check(CLI::Range(1, 256));
  cmd_scan->add_option("--out", scan.out, "Write the report here instead of stdout");

  DiameterArgs dia;
  auto* cmd_dia = app.add_subcommand("diameter", "Resistance diameter and every pair attaining it");
  add_source_options(cmd_dia, dia.src);
  cmd_dia->add_option("--format", dia.format, "Output format")->check(CLI::IsMember({"plain", "csv", "json"}));
  cmd_dia->add_option("--mode", dia.mode, "Evaluation mode")->check(CLI::IsMember(modes));

  ClosedFormArgs cf;
  auto* cmd_cf = app.add_subcommand(
      "closed-form",
      "Evaluate a closed form:\n"
      "  hypercube-diameter K | kmn M N SIDE SIDE (SIDE is m or n) | ladder-endpoint N |\n"
      "  ladder-gap N | fan N M | decomposition N");
  cmd_cf->add_option("form", cf.args, "Form name and its arguments")->required()->expected(1, 5);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (cmd_res->parsed()) return run_resistance(res);
    if (cmd_red->parsed()) return run_reduce(red);
    if (cmd_scan->parsed()) return run_scan(scan);
    if (cmd_dia->parsed()) return run_diameter(dia);
    if (cmd_cf->parsed()) return run_closed_form(cf);
  } catch (const CLI::Error& e) {
    std::cerr << "resnet: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "resnet: " << e.what() << '\n';
    return kParse;
  } catch (const DisconnectedNetwork& e) {
    std::cerr << "resnet: " << e.what() << '\n';
    return kDisconnected;
  } catch (const SingularSystem& e) {
    std::cerr << "resnet: " << e.what() << '\n';
    return kSingular;
  } catch (const BudgetExceeded& e) {
    std::cerr << "resnet: " << e.what() << '\n';
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "resnet: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
