#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "resnet/rational.hpp"

namespace resnet {

using VertexId = std::size_t;

/// A resistor between two distinct vertices. Negative resistance is legal
/// only on edges flagged as gadget edges (star substitutes of complete
/// bipartite networks carry one).
struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  Rational r{1};
  bool gadget = false;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Weighted undirected multigraph whose edge weights are resistances.
///
/// Vertex ids are dense in [0, vertex_count()). Every vertex carries a
/// unique label; unlabelled vertices are labelled with their decimal id.
/// Parallel edges are kept as separate resistors.
class ResistorNetwork {
 public:
  ResistorNetwork() = default;
  explicit ResistorNetwork(std::size_t vertex_count);

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(VertexId v) const;
  std::optional<VertexId> find(std::string_view label) const;

  /// Appends a vertex and returns its id. An empty label means "use the id".
  VertexId add_vertex(std::string label = {});
  void add_edge(VertexId u, VertexId v, Rational r, bool gadget = false);
  void relabel(VertexId v, std::string label);

  /// Number of edge endpoints at v (parallel edges counted separately).
  std::size_t degree(VertexId v) const;
  /// Distinct neighbours of v in ascending id order.
  std::vector<VertexId> neighbors(VertexId v) const;
  /// Indices into edges() of the edges joining u and v.
  std::vector<std::size_t> edges_between(VertexId u, VertexId v) const;

  bool is_connected() const;
  bool has_gadget_edges() const;

  friend bool operator==(const ResistorNetwork&, const ResistorNetwork&) = default;

 private:
  void check_vertex(VertexId v) const;

  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
};

/// Throws MalformedNetwork unless `label` is usable in the edge-list format.
void validate_label(std::string_view label);

/// Dense n-by-n Laplacian with exact entries: off-diagonal (i,j) is minus
/// the total conductance between i and j, the diagonal is the negated row sum.
class Laplacian {
 public:
  explicit Laplacian(std::size_t n) : n_(n), entries_(n * n) {}

  std::size_t size() const noexcept { return n_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

  /// Lossless promotion is not possible in general; this rounds each entry.
  Eigen::MatrixXd to_float() const;

 private:
  std::size_t n_;
  std::vector<Rational> entries_;
};

Laplacian build_laplacian(const ResistorNetwork& net);

}  // namespace resnet
