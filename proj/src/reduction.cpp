#include "resnet/reduction.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stack>
#include <utility>

#include "resnet/builders.hpp"
#include "resnet/errors.hpp"
#include "resnet/exact_solver.hpp"

namespace resnet {

Terminals::Terminals(std::vector<std::string> labels) : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
  if (labels_.empty()) throw ReductionError("terminal set must be nonempty");
}

Terminals Terminals::from_ids(const ResistorNetwork& net, std::span<const VertexId> ids) {
  std::vector<std::string> labels;
  for (VertexId v : ids) labels.push_back(net.label(v));
  return Terminals(std::move(labels));
}

Terminals Terminals::all(const ResistorNetwork& net) { return Terminals(net.labels()); }

bool Terminals::contains(std::string_view label) const {
  return std::binary_search(labels_.begin(), labels_.end(), label);
}

void Terminals::check_subset_of(const ResistorNetwork& net) const {
  for (const auto& l : labels_) {
    if (!net.find(l)) throw ReductionError("terminal '" + l + "' is not a vertex of the network");
  }
}

std::string_view to_string(StepKind kind) {
  switch (kind) {
    case StepKind::series: return "series";
    case StepKind::parallel: return "parallel";
    case StepKind::delta_y: return "delta_y";
    case StepKind::eliminate_block: return "eliminate_block";
    case StepKind::substitute_bipartite: return "substitute_bipartite";
  }
  return "unknown";
}

ResistorNetwork apply_step(const ResistorNetwork& pre, const ReductionStep& step) {
  auto id_of = [&](const std::string& label) {
    auto v = pre.find(label);
    if (!v) throw ReductionError("step refers to unknown vertex '" + label + "'");
    return *v;
  };

  std::vector<bool> edge_removed(pre.edge_count(), false);
  for (const auto& rec : step.removed_edges) {
    const VertexId u = id_of(rec.u);
    const VertexId v = id_of(rec.v);
    bool matched = false;
    for (std::size_t i = 0; i < pre.edge_count() && !matched; ++i) {
      const Edge& e = pre.edges()[i];
      if (edge_removed[i] || e.r != rec.r || e.gadget != rec.gadget) continue;
      if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) {
        edge_removed[i] = true;
        matched = true;
      }
    }
    if (!matched) {
      throw ReductionError("step removes a missing edge " + rec.u + "-" + rec.v + " r=" + to_string(rec.r));
    }
  }

  std::vector<bool> vertex_removed(pre.vertex_count(), false);
  for (const auto& label : step.removed_vertices) vertex_removed[id_of(label)] = true;

  ResistorNetwork post;
  std::vector<VertexId> new_id(pre.vertex_count(), 0);
  for (VertexId v = 0; v < pre.vertex_count(); ++v) {
    if (!vertex_removed[v]) new_id[v] = post.add_vertex(pre.label(v));
  }
  for (std::size_t i = 0; i < pre.edge_count(); ++i) {
    if (edge_removed[i]) continue;
    const Edge& e = pre.edges()[i];
    if (vertex_removed[e.u] || vertex_removed[e.v]) {
      throw ReductionError("step removes vertex with a remaining edge " + pre.label(e.u) + "-" + pre.label(e.v));
    }
    post.add_edge(new_id[e.u], new_id[e.v], e.r, e.gadget);
  }
  for (const auto& label : step.added_vertices) post.add_vertex(label);
  for (const auto& rec : step.added_edges) {
    auto u = post.find(rec.u);
    auto v = post.find(rec.v);
    if (!u || !v) throw ReductionError("step adds an edge to an unknown vertex");
    post.add_edge(*u, *v, rec.r, rec.gadget);
  }
  return post;
}

namespace {

EdgeRecord record_of(const ResistorNetwork& net, const Edge& e) {
  return EdgeRecord{net.label(e.u), net.label(e.v), e.r, e.gadget};
}

EdgeRecord new_edge(std::string u, std::string v, Rational r) {
  const bool gadget = r < 0;
  return EdgeRecord{std::move(u), std::move(v), std::move(r), gadget};
}

Rewrite finish(const ResistorNetwork& net, ReductionStep step) {
  ResistorNetwork post = apply_step(net, step);
  return Rewrite{std::move(post), std::move(step)};
}

std::string fresh_label(const ResistorNetwork& net, const std::string& prefix, std::size_t start = 0) {
  for (std::size_t k = start;; ++k) {
    std::string candidate = prefix + std::to_string(k);
    if (!net.find(candidate)) return candidate;
  }
}

void check_vertex(const ResistorNetwork& net, VertexId v) {
  if (v >= net.vertex_count()) throw ReductionError("vertex id " + std::to_string(v) + " out of range");
}

// Biconnected components (as vertex sets) and cut vertices of a multigraph.
struct BlockStructure {
  std::vector<std::vector<VertexId>> blocks;
  std::vector<bool> is_cut;
};

BlockStructure find_blocks(const ResistorNetwork& net) {
  const std::size_t n = net.vertex_count();
  std::vector<std::vector<std::pair<VertexId, std::size_t>>> adj(n);
  for (std::size_t i = 0; i < net.edge_count(); ++i) {
    const Edge& e = net.edges()[i];
    adj[e.u].push_back({e.v, i});
    adj[e.v].push_back({e.u, i});
  }
  BlockStructure out;
  out.is_cut.assign(n, false);
  std::vector<std::size_t> disc(n, 0), low(n, 0);
  std::size_t timer = 0;
  std::vector<std::size_t> edge_stack;

  struct Frame {
    VertexId v;
    std::size_t parent_edge;
    std::size_t next;
    std::size_t children;
  };
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  for (VertexId root = 0; root < n; ++root) {
    if (disc[root] != 0) continue;
    std::vector<Frame> stack;
    disc[root] = low[root] = ++timer;
    stack.push_back({root, kNone, 0, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < adj[f.v].size()) {
        auto [w, edge] = adj[f.v][f.next++];
        if (edge == f.parent_edge) continue;
        if (disc[w] == 0) {
          edge_stack.push_back(edge);
          ++f.children;
          disc[w] = low[w] = ++timer;
          stack.push_back({w, edge, 0, 0});
        } else if (disc[w] < disc[f.v]) {
          edge_stack.push_back(edge);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (stack.empty()) {
        if (done.children > 1) out.is_cut[done.v] = true;
        continue;
      }
      Frame& parent = stack.back();
      low[parent.v] = std::min(low[parent.v], low[done.v]);
      if (low[done.v] >= disc[parent.v]) {
        if (parent.parent_edge != kNone) out.is_cut[parent.v] = true;
        std::set<VertexId> block;
        while (!edge_stack.empty()) {
          std::size_t e = edge_stack.back();
          edge_stack.pop_back();
          block.insert(net.edges()[e].u);
          block.insert(net.edges()[e].v);
          if (e == done.parent_edge) break;
        }
        out.blocks.emplace_back(block.begin(), block.end());
      }
    }
  }
  return out;
}

}  // namespace

Rewrite series_reduce(const ResistorNetwork& net, VertexId mid, const Terminals& terminals) {
  check_vertex(net, mid);
  if (terminals.contains(net.label(mid))) {
    throw ReductionError("series_reduce: " + net.label(mid) + " is a terminal");
  }
  std::vector<const Edge*> incident;
  for (const auto& e : net.edges()) {
    if (e.u == mid || e.v == mid) incident.push_back(&e);
  }
  if (incident.size() != 2) {
    throw ReductionError("series_reduce: " + net.label(mid) + " has degree " + std::to_string(incident.size()));
  }
  const VertexId a = incident[0]->u == mid ? incident[0]->v : incident[0]->u;
  const VertexId b = incident[1]->u == mid ? incident[1]->v : incident[1]->u;
  if (a == b) throw ReductionError("series_reduce: both edges at " + net.label(mid) + " lead to the same vertex");
  Rational r = incident[0]->r + incident[1]->r;
  if (r == 0) throw ReductionError("series_reduce: resistances cancel to zero");

  ReductionStep step;
  step.kind = StepKind::series;
  step.removed_edges = {record_of(net, *incident[0]), record_of(net, *incident[1])};
  step.removed_vertices = {net.label(mid)};
  step.added_edges = {new_edge(net.label(a), net.label(b), std::move(r))};
  return finish(net, std::move(step));
}

Rewrite parallel_reduce(const ResistorNetwork& net, VertexId u, VertexId v) {
  check_vertex(net, u);
  check_vertex(net, v);
  auto idx = net.edges_between(u, v);
  if (idx.size() < 2) {
    throw ReductionError("parallel_reduce: fewer than two edges between " + net.label(u) + " and " + net.label(v));
  }
  Rational conductance(0);
  ReductionStep step;
  step.kind = StepKind::parallel;
  for (std::size_t i : idx) {
    conductance += 1 / net.edges()[i].r;
    step.removed_edges.push_back(record_of(net, net.edges()[i]));
  }
  if (conductance == 0) {
    throw ReductionError("parallel_reduce: conductances between " + net.label(u) + " and " + net.label(v) +
                         " cancel; not reducible");
  }
  step.added_edges = {new_edge(net.label(u), net.label(v), 1 / conductance)};
  return finish(net, std::move(step));
}

Rewrite delta_y(const ResistorNetwork& net, std::array<VertexId, 3> triangle, std::string center_label) {
  for (VertexId v : triangle) check_vertex(net, v);
  const auto [u, v, w] = triangle;
  if (u == v || v == w || u == w) throw ReductionError("delta_y: triangle corners must be distinct");
  auto side = [&](VertexId a, VertexId b) -> const Edge& {
    auto idx = net.edges_between(a, b);
    if (idx.empty()) throw ReductionError("delta_y: missing triangle edge " + net.label(a) + "-" + net.label(b));
    if (idx.size() > 1) {
      throw ReductionError("delta_y: parallel edges between " + net.label(a) + " and " + net.label(b) +
                           "; merge them first");
    }
    return net.edges()[idx.front()];
  };
  const Edge& e1 = side(u, v);
  const Edge& e2 = side(v, w);
  const Edge& e3 = side(w, u);
  const Rational sum = e1.r + e2.r + e3.r;
  if (sum == 0) throw ReductionError("delta_y: triangle resistances sum to zero");

  if (center_label.empty()) center_label = fresh_label(net, "c", 1);
  ReductionStep step;
  step.kind = StepKind::delta_y;
  step.removed_edges = {record_of(net, e1), record_of(net, e2), record_of(net, e3)};
  step.added_vertices = {center_label};
  step.added_edges = {new_edge(center_label, net.label(u), e1.r * e3.r / sum),
                      new_edge(center_label, net.label(v), e1.r * e2.r / sum),
                      new_edge(center_label, net.label(w), e2.r * e3.r / sum)};
  return finish(net, std::move(step));
}

Rewrite eliminate_block(const ResistorNetwork& net, const Terminals& terminals) {
  const BlockStructure bs = find_blocks(net);
  const std::vector<VertexId>* chosen = nullptr;
  VertexId chosen_key = 0;
  VertexId chosen_cut = 0;
  for (const auto& block : bs.blocks) {
    std::size_t cuts = 0;
    VertexId cut = 0;
    for (VertexId x : block) {
      if (bs.is_cut[x]) {
        ++cuts;
        cut = x;
      }
    }
    if (cuts != 1) continue;
    bool blocked = false;
    VertexId key = net.vertex_count();
    for (VertexId x : block) {
      if (x == cut) continue;
      if (terminals.contains(net.label(x))) blocked = true;
      key = std::min(key, x);
    }
    if (blocked) continue;
    if (!chosen || key < chosen_key) {
      chosen = &block;
      chosen_key = key;
      chosen_cut = cut;
    }
  }
  if (!chosen) throw ReductionError("eliminate_block: no block with exactly one cut vertex and no terminals");

  std::vector<bool> in_block(net.vertex_count(), false);
  for (VertexId x : *chosen) in_block[x] = true;
  ReductionStep step;
  step.kind = StepKind::eliminate_block;
  for (const auto& e : net.edges()) {
    if (in_block[e.u] && in_block[e.v]) step.removed_edges.push_back(record_of(net, e));
  }
  for (VertexId x : *chosen) {
    if (x != chosen_cut) step.removed_vertices.push_back(net.label(x));
  }
  return finish(net, std::move(step));
}

Rewrite substitute_bipartite_star(const ResistorNetwork& net, std::span<const VertexId> x_side,
                                  std::span<const VertexId> y_side, std::string x0_label,
                                  std::string y0_label) {
  if (x_side.empty() || y_side.empty()) throw ReductionError("substitute_bipartite_star: empty partite set");
  std::set<VertexId> xs(x_side.begin(), x_side.end());
  std::set<VertexId> ys(y_side.begin(), y_side.end());
  if (xs.size() != x_side.size() || ys.size() != y_side.size()) {
    throw ReductionError("substitute_bipartite_star: repeated vertex in a partite set");
  }
  for (VertexId x : xs) {
    check_vertex(net, x);
    if (ys.count(x)) throw ReductionError("substitute_bipartite_star: partite sets overlap");
  }
  for (VertexId y : ys) check_vertex(net, y);

  ReductionStep step;
  step.kind = StepKind::substitute_bipartite;
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const auto& e : net.edges()) {
    const bool ux = xs.count(e.u) > 0, vx = xs.count(e.v) > 0;
    const bool uy = ys.count(e.u) > 0, vy = ys.count(e.v) > 0;
    if ((ux && vx) || (uy && vy)) {
      throw ReductionError("substitute_bipartite_star: edge inside a partite set (" + net.label(e.u) + "-" +
                           net.label(e.v) + ")");
    }
    if ((ux && vy) || (uy && vx)) {
      const VertexId x = ux ? e.u : e.v;
      const VertexId y = ux ? e.v : e.u;
      if (e.r != 1 || e.gadget) {
        throw ReductionError("substitute_bipartite_star: non-unit resistor " + net.label(x) + "-" + net.label(y));
      }
      if (!seen.insert({x, y}).second) {
        throw ReductionError("substitute_bipartite_star: parallel edges " + net.label(x) + "-" + net.label(y));
      }
      step.removed_edges.push_back(record_of(net, e));
    }
  }
  if (seen.size() != xs.size() * ys.size()) {
    throw ReductionError("substitute_bipartite_star: induced subnetwork is not complete bipartite");
  }

  const auto m = static_cast<unsigned long>(xs.size());
  const auto n = static_cast<unsigned long>(ys.size());
  if (x0_label.empty()) x0_label = net.find("x0") ? fresh_label(net, "x0_") : "x0";
  if (y0_label.empty()) y0_label = net.find("y0") ? fresh_label(net, "y0_") : "y0";
  if (x0_label == y0_label) throw ReductionError("substitute_bipartite_star: centre labels must differ");
  step.added_vertices = {x0_label, y0_label};
  for (VertexId x : x_side) step.added_edges.push_back(new_edge(x0_label, net.label(x), Rational(1, n)));
  for (VertexId y : y_side) step.added_edges.push_back(new_edge(y0_label, net.label(y), Rational(1, m)));
  step.added_edges.push_back(new_edge(x0_label, y0_label, Rational(-1) / Rational(m * n)));
  return finish(net, std::move(step));
}

CertificateTable terminal_resistances(const ResistorNetwork& net, const Terminals& terminals) {
  terminals.check_subset_of(net);
  CertificateTable table;
  const auto& labels = terminals.labels();
  if (labels.size() < 2) return table;
  std::vector<VertexId> ids;
  for (const auto& l : labels) ids.push_back(*net.find(l));
  const VertexId ground = ids.front();
  GroundedSystem system(net, ground);
  std::vector<std::vector<Rational>> response;
  for (VertexId v : ids) response.push_back(system.unit_response(v));
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      Rational r = response[i][ids[i]] + response[j][ids[j]] - 2 * response[i][ids[j]];
      table.push_back(CertificateEntry{labels[i], labels[j], std::move(r)});
    }
  }
  return table;
}

namespace {

std::optional<Rewrite> try_parallel(const ResistorNetwork& net) {
  std::set<std::pair<VertexId, VertexId>> seen;
  std::vector<std::pair<VertexId, VertexId>> candidates;
  for (const auto& e : net.edges()) {
    auto key = std::minmax(e.u, e.v);
    if (!seen.insert(key).second) candidates.push_back(key);
  }
  std::sort(candidates.begin(), candidates.end());
  for (auto [u, v] : candidates) {
    try {
      return parallel_reduce(net, u, v);
    } catch (const ReductionError&) {
    }
  }
  return std::nullopt;
}

std::optional<Rewrite> try_series(const ResistorNetwork& net, const Terminals& terminals,
                                  const std::set<std::string>& protected_labels) {
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    if (terminals.contains(net.label(v)) || protected_labels.count(net.label(v))) continue;
    if (net.degree(v) != 2) continue;
    try {
      return series_reduce(net, v, terminals);
    } catch (const ReductionError&) {
    }
  }
  return std::nullopt;
}

std::optional<Rewrite> try_block(const ResistorNetwork& net, const Terminals& terminals) {
  try {
    return eliminate_block(net, terminals);
  } catch (const ReductionError&) {
    return std::nullopt;
  }
}

// Triangles ranked by their largest id (descending), then the remaining
// ids ascending. Newly created centres carry the largest ids, so the chain
// grows from the most recent centre.
std::optional<Rewrite> try_delta_y(const ResistorNetwork& net) {
  const std::size_t n = net.vertex_count();
  std::vector<std::array<VertexId, 3>> triangles;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b : net.neighbors(a)) {
      if (b <= a) continue;
      for (VertexId c : net.neighbors(b)) {
        if (c <= b) continue;
        if (net.edges_between(a, c).empty()) continue;
        triangles.push_back({a, b, c});
      }
    }
  }
  std::sort(triangles.begin(), triangles.end(), [](const auto& x, const auto& y) {
    if (x[2] != y[2]) return x[2] > y[2];
    return std::tie(x[0], x[1]) < std::tie(y[0], y[1]);
  });
  for (const auto& t : triangles) {
    try {
      return delta_y(net, t);
    } catch (const ReductionError&) {
    }
  }
  return std::nullopt;
}

}  // namespace

ReduceResult reduce(const ResistorNetwork& net, const Terminals& terminals, const ReduceOptions& options) {
  terminals.check_subset_of(net);
  ReduceResult result;
  ReductionTrace& trace = result.trace;
  trace.initial = net;
  trace.terminals = terminals;
  if (options.certify) trace.certificates.emplace().push_back(terminal_resistances(net, terminals));

  ResistorNetwork current = net;
  std::set<std::string> protected_labels;
  for (std::size_t count = 0;; ++count) {
    if (count >= options.max_steps) throw ReductionError("reduce: step limit reached");
    std::optional<Rewrite> next = try_parallel(current);
    if (!next) next = try_series(current, terminals, protected_labels);
    if (!next) next = try_block(current, terminals);
    if (!next && options.fan_pipeline) {
      next = try_delta_y(current);
      if (next) {
        for (const auto& l : next->step.added_vertices) protected_labels.insert(l);
      }
    }
    if (!next) break;
    current = std::move(next->network);
    trace.steps.push_back(std::move(next->step));
    if (options.certify) trace.certificates->push_back(terminal_resistances(current, terminals));
  }
  result.fully_reduced = current.vertex_count() == terminals.size();
  trace.final_network = std::move(current);
  return result;
}

Rational FanChain::endpoint_resistance() const {
  Rational total = tail;
  for (const auto& r : chain) total += r;
  return total;
}

Rational FanChain::apex_resistance() const {
  Rational total = center_to_apex.back();
  for (const auto& r : chain) total += r;
  return total;
}

Rational FanChain::shorter_endpoint_resistance() const {
  Rational total(0);
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) total += chain[i];
  return 2 * total;
}

FanChain fan_chain_reduce(std::size_t n, std::size_t m, bool certify) {
  if (n < 2) throw ReductionError("fan_chain_reduce: n must be at least 2");
  if (m < 2) throw ReductionError("fan_chain_reduce: m must be an integer > 1");
  FanChain out;
  out.n = n;
  out.m = m;

  ResistorNetwork current = fan(n + 1, m);
  const std::string a1 = "a1";
  const std::string last = "a" + std::to_string(n + 1);
  const std::string apex = "b";
  Terminals terminals({a1, last, apex});
  ReductionTrace& trace = out.trace;
  trace.initial = current;
  trace.terminals = terminals;
  if (certify) trace.certificates.emplace().push_back(terminal_resistances(current, terminals));

  auto push = [&](Rewrite rw) {
    current = std::move(rw.network);
    trace.steps.push_back(std::move(rw.step));
    if (certify) trace.certificates->push_back(terminal_resistances(current, terminals));
  };
  auto id = [&](const std::string& label) { return *current.find(label); };
  auto edge_r = [&](const std::string& a, const std::string& b) {
    auto idx = current.edges_between(id(a), id(b));
    return current.edges()[idx.at(0)].r;
  };

  std::string previous = a1;
  for (std::size_t i = 1; i <= n; ++i) {
    const std::string center = "c" + std::to_string(i);
    const std::string corner = "a" + std::to_string(i + 1);
    push(delta_y(current, {id(previous), id(corner), id(apex)}, center));
    out.chain.push_back(edge_r(previous, center));
    out.center_to_apex.push_back(edge_r(center, apex));
    if (i < n) push(series_reduce(current, id(corner), terminals));
    previous = center;
  }
  out.tail = edge_r(previous, last);
  trace.final_network = current;
  return out;
}

}  // namespace resnet
