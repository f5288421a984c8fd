#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "resnet/network.hpp"
#include "resnet/rational.hpp"

namespace resnet {

/// LU factorization of the Laplacian with the ground vertex's row and
/// column deleted. Exact rational arithmetic throughout; rows are pivoted
/// toward the nonzero candidate with the smallest bit length.
class GroundedSystem {
 public:
  /// Throws DisconnectedNetwork, or SingularSystem when no nonzero pivot
  /// exists for some column (possible only with gadget edges).
  GroundedSystem(const ResistorNetwork& net, VertexId ground);

  VertexId ground() const noexcept { return ground_; }
  std::size_t vertex_count() const noexcept { return n_; }

  /// Potentials with the ground held at zero for the injected currents
  /// `current` (length vertex_count(); entries must sum to zero).
  std::vector<Rational> solve(const std::vector<Rational>& current) const;

  /// Potential at every vertex when a unit current enters at `source` and
  /// leaves through the ground. Column `source` of the grounded inverse.
  std::vector<Rational> unit_response(VertexId source) const;

 private:
  std::size_t reduced_index(VertexId v) const { return v < ground_ ? v : v - 1; }
  std::vector<Rational> solve_reduced(std::vector<Rational> rhs) const;

  std::size_t n_ = 0;
  VertexId ground_ = 0;
  std::size_t dim_ = 0;
  std::vector<Rational> lu_;           // dim_ x dim_, unit-lower L below the diagonal, U on/above
  std::vector<std::size_t> perm_;      // row permutation applied to the right-hand side
  std::vector<std::vector<std::size_t>> upper_nz_;  // nonzero columns of each U row
  std::vector<std::vector<std::size_t>> lower_nz_;  // nonzero columns of each L row
};

/// Exact effective resistance between u and v. The ground defaults to the
/// lowest id that is neither u nor v; any choice gives the same value.
Rational resistance_exact(const ResistorNetwork& net, VertexId u, VertexId v,
                          std::optional<VertexId> ground = std::nullopt);

/// Symmetric all-pairs resistance table with a zero diagonal.
class ResistanceTable {
 public:
  explicit ResistanceTable(std::size_t n) : n_(n), values_(n * n) {}
  std::size_t size() const noexcept { return n_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return values_[i * n_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return values_[i * n_ + j]; }

 private:
  std::size_t n_;
  std::vector<Rational> values_;
};

/// All pairs from one factorization plus n-1 solves.
ResistanceTable resistance_matrix_exact(const ResistorNetwork& net);

}  // namespace resnet
