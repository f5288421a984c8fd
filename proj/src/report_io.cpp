#include "resnet/report_io.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace resnet {

using nlohmann::ordered_json;

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string format_spectral(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", value);
  return buf;
}

namespace {

std::string_view mode_name(EvalMode mode) { return mode == EvalMode::exact ? "exact" : "spectral"; }

ordered_json network_json(const ResistorNetwork& net) {
  ordered_json out;
  out["vertices"] = net.labels();
  ordered_json edges = ordered_json::array();
  for (const auto& e : net.edges()) {
    ordered_json je;
    je["u"] = net.label(e.u);
    je["v"] = net.label(e.v);
    je["r"] = to_string(e.r);
    je["gadget"] = e.gadget;
    edges.push_back(std::move(je));
  }
  out["edges"] = std::move(edges);
  return out;
}

ordered_json edge_records_json(const std::vector<EdgeRecord>& records) {
  ordered_json out = ordered_json::array();
  for (const auto& rec : records) {
    ordered_json je;
    je["u"] = rec.u;
    je["v"] = rec.v;
    je["r"] = to_string(rec.r);
    je["gadget"] = rec.gadget;
    out.push_back(std::move(je));
  }
  return out;
}

ordered_json certificate_json(const CertificateTable& table) {
  ordered_json out = ordered_json::array();
  for (const auto& entry : table) {
    ordered_json je;
    je["a"] = entry.a;
    je["b"] = entry.b;
    je["R"] = to_string(entry.r);
    out.push_back(std::move(je));
  }
  return out;
}

std::string edge_text(const EdgeRecord& rec) {
  std::string s = rec.u + "-" + rec.v + ":" + to_string(rec.r);
  if (rec.gadget) s += "(gadget)";
  return s;
}

}  // namespace

std::string scan_to_csv(const ScanReport& report) {
  std::ostringstream out;
  out << "n,R_n,diff,abs_dev_from_limit\n";
  for (const auto& row : report.rows) {
    out << row.n << ',' << format_double(row.r) << ',';
    if (row.diff) out << format_double(*row.diff);
    out << ',';
    if (row.abs_dev) out << format_double(*row.abs_dev);
    out << '\n';
  }
  return out.str();
}

std::string scan_to_json(const ScanReport& report) {
  ordered_json out;
  out["k"] = report.k;
  out["base"] = report.base;
  out["pair"] = {report.pair_i, report.pair_j};
  out["n_min"] = report.n_min;
  out["n_max"] = report.n_max;
  out["limit"] = to_string(report.limit);
  out["mode"] = mode_name(report.mode);
  ordered_json rows = ordered_json::array();
  for (const auto& row : report.rows) {
    ordered_json jr;
    jr["n"] = row.n;
    jr["R_n"] = row.r;
    jr["diff"] = row.diff ? ordered_json(*row.diff) : ordered_json(nullptr);
    jr["abs_dev_from_limit"] = row.abs_dev ? ordered_json(*row.abs_dev) : ordered_json(nullptr);
    if (row.r_exact) jr["R_n_exact"] = to_string(*row.r_exact);
    if (row.r_exact) jr["diff_exact"] = row.diff_exact ? ordered_json(to_string(*row.diff_exact)) : ordered_json(nullptr);
    rows.push_back(std::move(jr));
  }
  out["rows"] = std::move(rows);
  return out.dump(2) + "\n";
}

std::string diameter_to_csv(const DiameterReport& report) {
  std::ostringstream out;
  out << "u,v,u_label,v_label,R\n";
  const std::string value = report.exact_value ? to_string(*report.exact_value) : format_double(report.value);
  for (const auto& [u, v] : report.pairs) {
    out << u << ',' << v << ',' << report.labels[u] << ',' << report.labels[v] << ',' << value << '\n';
  }
  return out.str();
}

std::string diameter_to_json(const DiameterReport& report) {
  ordered_json out;
  out["D_r"] = report.value;
  if (report.exact_value) out["D_r_exact"] = to_string(*report.exact_value);
  ordered_json pairs = ordered_json::array();
  for (const auto& [u, v] : report.pairs) {
    ordered_json jp;
    jp["u"] = u;
    jp["v"] = v;
    jp["u_label"] = report.labels[u];
    jp["v_label"] = report.labels[v];
    pairs.push_back(std::move(jp));
  }
  out["pairs"] = std::move(pairs);
  return out.dump(2) + "\n";
}

std::string diameter_delta_to_csv(const DiameterDeltaReport& report) {
  std::ostringstream out;
  out << "n,D_r,pair_count,corner_pairs,delta,endpoint_delta\n";
  for (const auto& row : report.rows) {
    out << row.n << ',' << to_string(row.diameter) << ',' << row.pair_count << ','
        << (row.corner_pairs ? "true" : "false") << ',';
    if (row.delta) out << to_string(*row.delta);
    out << ',';
    if (row.endpoint_delta) out << to_string(*row.endpoint_delta);
    out << '\n';
  }
  return out.str();
}

std::string trace_to_text(const ReductionTrace& trace) {
  std::ostringstream out;
  out << "terminals:";
  for (const auto& t : trace.terminals.labels()) out << ' ' << t;
  out << '\n';
  out << "initial: " << trace.initial.vertex_count() << " vertices, " << trace.initial.edge_count() << " edges\n";
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& step = trace.steps[i];
    out << i + 1 << ' ' << to_string(step.kind);
    if (!step.removed_vertices.empty()) {
      out << " -v";
      for (const auto& v : step.removed_vertices) out << ' ' << v;
    }
    if (!step.added_vertices.empty()) {
      out << " +v";
      for (const auto& v : step.added_vertices) out << ' ' << v;
    }
    out << " -e";
    for (const auto& e : step.removed_edges) out << ' ' << edge_text(e);
    if (!step.added_edges.empty()) {
      out << " +e";
      for (const auto& e : step.added_edges) out << ' ' << edge_text(e);
    }
    out << '\n';
    if (trace.certificates) {
      out << "  R";
      for (const auto& entry : (*trace.certificates)[i + 1]) {
        out << ' ' << entry.a << '-' << entry.b << '=' << to_string(entry.r);
      }
      out << '\n';
    }
  }
  out << "final: " << trace.final_network.vertex_count() << " vertices, " << trace.final_network.edge_count()
      << " edges\n";
  for (const auto& e : trace.final_network.edges()) {
    out << "  " << edge_text(EdgeRecord{trace.final_network.label(e.u), trace.final_network.label(e.v), e.r, e.gadget})
        << '\n';
  }
  return out.str();
}

std::string trace_to_json(const ReductionTrace& trace) {
  ordered_json out;
  out["terminals"] = trace.terminals.labels();
  out["initial"] = network_json(trace.initial);
  ordered_json steps = ordered_json::array();
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& step = trace.steps[i];
    ordered_json js;
    js["kind"] = to_string(step.kind);
    js["removed_vertices"] = step.removed_vertices;
    js["added_vertices"] = step.added_vertices;
    js["removed_edges"] = edge_records_json(step.removed_edges);
    js["added_edges"] = edge_records_json(step.added_edges);
    if (trace.certificates) js["certificate"] = certificate_json((*trace.certificates)[i + 1]);
    steps.push_back(std::move(js));
  }
  out["steps"] = std::move(steps);
  out["final"] = network_json(trace.final_network);
  if (trace.certificates) out["initial_certificate"] = certificate_json(trace.certificates->front());
  return out.dump(2) + "\n";
}

}  // namespace resnet
