#include "resnet/exact_solver.hpp"

#include <limits>
#include <string>
#include <utility>

#include "resnet/errors.hpp"

namespace resnet {

GroundedSystem::GroundedSystem(const ResistorNetwork& net, VertexId ground)
    : n_(net.vertex_count()), ground_(ground) {
  if (n_ == 0) throw MalformedNetwork("empty network");
  if (ground >= n_) throw MalformedNetwork("ground vertex out of range");
  if (!net.is_connected()) throw DisconnectedNetwork("network is disconnected");

  dim_ = n_ - 1;
  lu_.assign(dim_ * dim_, Rational(0));
  for (const auto& e : net.edges()) {
    Rational c = 1 / e.r;
    const bool u_in = e.u != ground_;
    const bool v_in = e.v != ground_;
    const std::size_t iu = reduced_index(e.u);
    const std::size_t iv = reduced_index(e.v);
    if (u_in) lu_[iu * dim_ + iu] += c;
    if (v_in) lu_[iv * dim_ + iv] += c;
    if (u_in && v_in) {
      lu_[iu * dim_ + iv] -= c;
      lu_[iv * dim_ + iu] -= c;
    }
  }

  perm_.resize(dim_);
  for (std::size_t i = 0; i < dim_; ++i) perm_[i] = i;
  upper_nz_.assign(dim_, {});
  lower_nz_.assign(dim_, {});

  auto at = [this](std::size_t i, std::size_t j) -> Rational& { return lu_[i * dim_ + j]; };

  for (std::size_t col = 0; col < dim_; ++col) {
    std::size_t pivot = dim_;
    std::size_t best_bits = std::numeric_limits<std::size_t>::max();
    for (std::size_t row = col; row < dim_; ++row) {
      if (sgn(at(row, col)) == 0) continue;
      std::size_t bits = bit_length(at(row, col));
      if (bits < best_bits) {
        best_bits = bits;
        pivot = row;
      }
    }
    if (pivot == dim_) {
      VertexId vertex = col < ground_ ? col : col + 1;
      throw SingularSystem(vertex, "grounded system is singular: no nonzero pivot for vertex " +
                                       net.label(vertex));
    }
    if (pivot != col) {
      for (std::size_t j = 0; j < dim_; ++j) std::swap(at(pivot, j), at(col, j));
      std::swap(perm_[pivot], perm_[col]);
    }

    std::vector<std::size_t>& nz = upper_nz_[col];
    for (std::size_t j = col + 1; j < dim_; ++j) {
      if (sgn(at(col, j)) != 0) nz.push_back(j);
    }
    const Rational& p = at(col, col);
    Rational factor;
    for (std::size_t row = col + 1; row < dim_; ++row) {
      Rational& lead = at(row, col);
      if (sgn(lead) == 0) continue;
      factor = lead / p;
      for (std::size_t j : nz) at(row, j) -= factor * at(col, j);
      lead = factor;
    }
  }

  // Record the nonzero pattern of L per row once the swaps are final.
  for (std::size_t row = 0; row < dim_; ++row) {
    for (std::size_t j = 0; j < row; ++j) {
      if (sgn(at(row, j)) != 0) lower_nz_[row].push_back(j);
    }
  }
}

std::vector<Rational> GroundedSystem::solve_reduced(std::vector<Rational> rhs) const {
  std::vector<Rational> y(dim_);
  for (std::size_t i = 0; i < dim_; ++i) y[i] = rhs[perm_[i]];
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j : lower_nz_[i]) {
      if (sgn(y[j]) != 0) y[i] -= lu_[i * dim_ + j] * y[j];
    }
  }
  for (std::size_t i = dim_; i-- > 0;) {
    for (std::size_t j : upper_nz_[i]) {
      if (sgn(y[j]) != 0) y[i] -= lu_[i * dim_ + j] * y[j];
    }
    y[i] /= lu_[i * dim_ + i];
  }
  return y;
}

std::vector<Rational> GroundedSystem::solve(const std::vector<Rational>& current) const {
  if (current.size() != n_) throw std::invalid_argument("current vector has the wrong length");
  std::vector<Rational> rhs(dim_);
  for (VertexId v = 0; v < n_; ++v) {
    if (v != ground_) rhs[reduced_index(v)] = current[v];
  }
  auto x = solve_reduced(std::move(rhs));
  std::vector<Rational> potential(n_, Rational(0));
  for (VertexId v = 0; v < n_; ++v) {
    if (v != ground_) potential[v] = x[reduced_index(v)];
  }
  return potential;
}

std::vector<Rational> GroundedSystem::unit_response(VertexId source) const {
  std::vector<Rational> current(n_, Rational(0));
  if (source != ground_) {
    current[source] = 1;
    current[ground_] = -1;
  }
  return solve(current);
}

Rational resistance_exact(const ResistorNetwork& net, VertexId u, VertexId v,
                          std::optional<VertexId> ground) {
  const std::size_t n = net.vertex_count();
  if (u >= n || v >= n) throw MalformedNetwork("query vertex out of range");
  if (u == v) return Rational(0);
  VertexId g = 0;
  if (ground) {
    g = *ground;
  } else {
    while (g == u || g == v) ++g;
    if (g >= n) g = v;
  }
  GroundedSystem system(net, g);
  std::vector<Rational> current(n, Rational(0));
  current[u] += 1;
  current[v] -= 1;
  auto potential = system.solve(current);
  return potential[u] - potential[v];
}

ResistanceTable resistance_matrix_exact(const ResistorNetwork& net) {
  const std::size_t n = net.vertex_count();
  ResistanceTable table(n);
  if (n <= 1) return table;
  GroundedSystem system(net, n - 1);
  // Column v of the grounded inverse: G(., v). The ground row/column is zero.
  std::vector<std::vector<Rational>> inverse;
  inverse.reserve(n);
  for (VertexId v = 0; v < n; ++v) {
    inverse.push_back(v == n - 1 ? std::vector<Rational>(n, Rational(0)) : system.unit_response(v));
  }
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      Rational r = inverse[u][u] + inverse[v][v] - 2 * inverse[u][v];
      table(u, v) = r;
      table(v, u) = r;
    }
  }
  return table;
}

}  // namespace resnet
