#include "resnet/builders.hpp"

#include <string>

#include "resnet/errors.hpp"

namespace resnet {

namespace {

void require_positive(std::size_t value, const char* what) {
  if (value == 0) throw MalformedNetwork(std::string(what) + " must be positive");
}

ResistorNetwork labelled(std::size_t n, const std::string& prefix) {
  ResistorNetwork net;
  for (std::size_t i = 1; i <= n; ++i) net.add_vertex(prefix + std::to_string(i));
  return net;
}

}  // namespace

ResistorNetwork path(std::size_t n) {
  require_positive(n, "path length");
  auto net = labelled(n, "a");
  for (std::size_t i = 0; i + 1 < n; ++i) net.add_edge(i, i + 1, Rational(1));
  return net;
}

ResistorNetwork cycle(std::size_t n) {
  if (n < 3) throw MalformedNetwork("cycle needs at least 3 vertices");
  auto net = labelled(n, "b");
  for (std::size_t i = 0; i < n; ++i) net.add_edge(i, (i + 1) % n, Rational(1));
  return net;
}

ResistorNetwork clique2() {
  auto net = labelled(2, "c");
  net.add_edge(0, 1, Rational(1));
  return net;
}

ResistorNetwork empty_graph(std::size_t m) {
  require_positive(m, "vertex count");
  return labelled(m, "w");
}

ResistorNetwork complete_bipartite(std::size_t m, std::size_t n) {
  require_positive(m, "partite size m");
  require_positive(n, "partite size n");
  ResistorNetwork net;
  for (std::size_t i = 1; i <= m; ++i) net.add_vertex("x" + std::to_string(i));
  for (std::size_t j = 1; j <= n; ++j) net.add_vertex("y" + std::to_string(j));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) net.add_edge(i, m + j, Rational(1));
  }
  return net;
}

ResistorNetwork hypercube(std::size_t k) {
  require_positive(k, "hypercube dimension");
  ResistorNetwork q = clique2();
  for (std::size_t d = 1; d < k; ++d) q = cartesian_product(q, clique2());
  for (VertexId v = 0; v < q.vertex_count(); ++v) q.relabel(v, "b" + std::to_string(v + 1));
  return q;
}

ResistorNetwork cartesian_product(const ResistorNetwork& g, const ResistorNetwork& h) {
  const std::size_t m = h.vertex_count();
  ResistorNetwork out;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    for (VertexId x = 0; x < m; ++x) out.add_vertex("(" + g.label(u) + "," + h.label(x) + ")");
  }
  for (VertexId x = 0; x < m; ++x) {
    for (const auto& e : g.edges()) out.add_edge(e.u * m + x, e.v * m + x, e.r, e.gadget);
  }
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    for (const auto& e : h.edges()) out.add_edge(u * m + e.u, u * m + e.v, e.r, e.gadget);
  }
  return out;
}

ResistorNetwork cone(const ResistorNetwork& g, std::size_t m) {
  if (m < 2) throw MalformedNetwork("cone weight m must be an integer > 1");
  ResistorNetwork out = g;
  VertexId apex = out.add_vertex(out.find("b") ? "apex" : "b");
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    out.add_edge(u, apex, Rational(1, static_cast<unsigned long>(m)));
  }
  return out;
}

ResistorNetwork join(const ResistorNetwork& g, const ResistorNetwork& h) {
  ResistorNetwork out = g;
  const std::size_t n = g.vertex_count();
  for (VertexId x = 0; x < h.vertex_count(); ++x) {
    const std::string& l = h.label(x);
    out.add_vertex(out.find(l) ? "h:" + l : l);
  }
  for (const auto& e : h.edges()) out.add_edge(n + e.u, n + e.v, e.r, e.gadget);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId x = 0; x < h.vertex_count(); ++x) out.add_edge(u, n + x, Rational(1));
  }
  return out;
}

ResistorNetwork ladder(std::size_t n) { return cartesian_product(path(n), clique2()); }

ResistorNetwork block_tower(std::size_t n) { return cartesian_product(path(n), cycle(4)); }

ResistorNetwork fan(std::size_t n, std::size_t m) { return cone(path(n), m); }

}  // namespace resnet
