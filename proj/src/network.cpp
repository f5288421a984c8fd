#include "resnet/network.hpp"

#include <algorithm>
#include <cctype>
#include <queue>

#include "resnet/errors.hpp"

namespace resnet {

void validate_label(std::string_view label) {
  if (label.empty()) throw MalformedNetwork("empty vertex label");
  if (label.front() == '#') throw MalformedNetwork("vertex label may not start with '#'");
  for (char c : label) {
    if (std::isspace(static_cast<unsigned char>(c)) || !std::isprint(static_cast<unsigned char>(c))) {
      throw MalformedNetwork("vertex label '" + std::string(label) + "' contains whitespace");
    }
  }
}

ResistorNetwork::ResistorNetwork(std::size_t vertex_count) {
  labels_.reserve(vertex_count);
  for (std::size_t i = 0; i < vertex_count; ++i) labels_.push_back(std::to_string(i));
}

const std::string& ResistorNetwork::label(VertexId v) const {
  check_vertex(v);
  return labels_[v];
}

std::optional<VertexId> ResistorNetwork::find(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<VertexId>(it - labels_.begin());
}

VertexId ResistorNetwork::add_vertex(std::string label) {
  if (label.empty()) label = std::to_string(labels_.size());
  validate_label(label);
  if (find(label)) throw MalformedNetwork("duplicate vertex label '" + label + "'");
  labels_.push_back(std::move(label));
  return labels_.size() - 1;
}

void ResistorNetwork::add_edge(VertexId u, VertexId v, Rational r, bool gadget) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw MalformedNetwork("self-loop at vertex " + labels_[u]);
  if (r == 0) {
    throw MalformedNetwork("zero resistance on edge " + labels_[u] + "-" + labels_[v]);
  }
  if (r < 0 && !gadget) {
    throw MalformedNetwork("negative resistance on edge " + labels_[u] + "-" + labels_[v] +
                           " requires the gadget flag");
  }
  edges_.push_back(Edge{u, v, std::move(r), gadget});
}

void ResistorNetwork::relabel(VertexId v, std::string label) {
  check_vertex(v);
  validate_label(label);
  if (auto other = find(label); other && *other != v) {
    throw MalformedNetwork("duplicate vertex label '" + label + "'");
  }
  labels_[v] = std::move(label);
}

std::size_t ResistorNetwork::degree(VertexId v) const {
  check_vertex(v);
  return static_cast<std::size_t>(std::count_if(
      edges_.begin(), edges_.end(), [v](const Edge& e) { return e.u == v || e.v == v; }));
}

std::vector<VertexId> ResistorNetwork::neighbors(VertexId v) const {
  check_vertex(v);
  std::vector<VertexId> out;
  for (const auto& e : edges_) {
    if (e.u == v) out.push_back(e.v);
    if (e.v == v) out.push_back(e.u);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::size_t> ResistorNetwork::edges_between(VertexId u, VertexId v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) out.push_back(i);
  }
  return out;
}

bool ResistorNetwork::is_connected() const {
  const std::size_t n = vertex_count();
  if (n <= 1) return true;
  std::vector<std::vector<VertexId>> adj(n);
  for (const auto& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<bool> seen(n, false);
  std::queue<VertexId> frontier;
  frontier.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    VertexId x = frontier.front();
    frontier.pop();
    for (VertexId y : adj[x]) {
      if (!seen[y]) {
        seen[y] = true;
        ++reached;
        frontier.push(y);
      }
    }
  }
  return reached == n;
}

bool ResistorNetwork::has_gadget_edges() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.gadget; });
}

void ResistorNetwork::check_vertex(VertexId v) const {
  if (v >= labels_.size()) {
    throw MalformedNetwork("vertex id " + std::to_string(v) + " out of range (n = " +
                           std::to_string(labels_.size()) + ")");
  }
}

Eigen::MatrixXd Laplacian::to_float() const {
  Eigen::MatrixXd m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) m(i, j) = to_double((*this)(i, j));
  }
  return m;
}

Laplacian build_laplacian(const ResistorNetwork& net) {
  Laplacian lap(net.vertex_count());
  for (const auto& e : net.edges()) {
    if (e.r == 0) throw MalformedNetwork("zero-resistance edge");
    Rational c = 1 / e.r;
    lap(e.u, e.u) += c;
    lap(e.v, e.v) += c;
    lap(e.u, e.v) -= c;
    lap(e.v, e.u) -= c;
  }
  return lap;
}

}  // namespace resnet
