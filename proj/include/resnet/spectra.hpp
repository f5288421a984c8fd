#pragma once

#include <Eigen/Dense>

#include <cstddef>

#include "resnet/network.hpp"

namespace resnet {

/// Laplacian eigensystem. values(k) is paired with column k of vectors;
/// values are nonincreasing and, for a connected graph, the last pair is
/// (0, e/sqrt(n)) exactly.
struct Spectrum {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;

  std::size_t size() const noexcept { return static_cast<std::size_t>(values.size()); }
  double value(std::size_t k) const { return values(static_cast<Eigen::Index>(k)); }
  /// Entry of eigenvector k at vertex v.
  double entry(std::size_t k, std::size_t v) const {
    return vectors(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(k));
  }
};

inline constexpr double kOrthonormalityTolerance = 1e-12;
inline constexpr double kEigenResidualTolerance = 1e-10;
inline constexpr double kResistanceAgreementTolerance = 1e-9;

/// P_n: eigenvalues 4 sin^2(p pi / 2n), p = n-1..0, with cosine profiles
/// -sqrt(2/n) cos(p pi (2j+1) / 2n). The sign makes P_2 match clique2_spectrum().
Spectrum path_spectrum(std::size_t n);

/// C_n in the labelling of cycle(n). For n = 4 the eigenvectors are
/// (1,-1,1,-1)/2, (-1,-1,1,1)/2 and (-1,1,1,-1)/2; other n use the
/// cosine/sine real Fourier basis.
Spectrum cycle_spectrum(std::size_t n);

/// K2: (2, (-1,1)/sqrt2) and (0, (1,1)/sqrt2).
Spectrum clique2_spectrum();

/// Q_k as the k-fold product of clique2_spectrum(), matching hypercube(k) ids.
Spectrum hypercube_spectrum(std::size_t k);

/// Spectrum of G □ H: values lambda_i + mu_j with eigenvectors Psi_i ⊗ Phi_j.
/// Sorted nonincreasing; numerically tied values keep lexicographic (i, j) order.
Spectrum product_spectrum(const Spectrum& g, const Spectrum& h);

/// Full eigensystem of a symmetric matrix by cyclic Jacobi rotations.
/// Throws std::invalid_argument for non-symmetric input.
Spectrum generic_spectrum(const Eigen::MatrixXd& laplacian);
Spectrum generic_spectrum(const Laplacian& laplacian);

/// R(u, v) = sum over nonzero modes of (Psi_ku - Psi_kv)^2 / lambda_k.
/// Throws DisconnectedNetwork when the zero eigenvalue is repeated.
double resistance_spectral(const Spectrum& s, std::size_t u, std::size_t v);

/// max |Psi^T Psi - I|.
double orthonormality_defect(const Spectrum& s);
/// max over pairs and entries of |L Psi_k - lambda_k Psi_k|.
double eigen_residual(const Spectrum& s, const Eigen::MatrixXd& laplacian);

}  // namespace resnet
