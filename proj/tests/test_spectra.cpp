#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracle.hpp"
#include "resnet/builders.hpp"
#include "resnet/errors.hpp"
#include "resnet/exact_solver.hpp"
#include "resnet/io.hpp"
#include "resnet/spectra.hpp"

using namespace resnet;
using Catch::Matchers::WithinAbs;

namespace {

std::vector<double> sorted_values(const Spectrum& s) {
  std::vector<double> v(s.values.data(), s.values.data() + s.values.size());
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

void check_values(const Spectrum& s, std::vector<double> expected, double tol = 1e-10) {
  REQUIRE(s.size() == expected.size());
  for (std::size_t k = 0; k < expected.size(); ++k) CHECK_THAT(s.value(k), WithinAbs(expected[k], tol));
}

void check_well_formed(const Spectrum& s, const ResistorNetwork& net) {
  const Eigen::MatrixXd l = build_laplacian(net).to_float();
  CHECK(orthonormality_defect(s) < kOrthonormalityTolerance);
  CHECK(eigen_residual(s, l) < kEigenResidualTolerance);
  for (std::size_t k = 0; k + 1 < s.size(); ++k) CHECK(s.value(k) >= s.value(k + 1) - 1e-12);
  const double inv = 1.0 / std::sqrt(static_cast<double>(s.size()));
  for (std::size_t v = 0; v < s.size(); ++v) {
    CHECK(s.entry(s.size() - 1, v) == s.entry(s.size() - 1, 0));
    CHECK_THAT(s.entry(s.size() - 1, v), WithinAbs(inv, 1e-15));
  }
  CHECK(s.value(s.size() - 1) == 0.0);
}

}  // namespace

TEST_CASE("path spectra") {
  Spectrum p2 = path_spectrum(2);
  check_values(p2, {2, 0});
  CHECK_THAT(std::abs(p2.entry(0, 0)), WithinAbs(std::sqrt(2.0) / 2, 1e-15));
  CHECK_THAT(p2.entry(0, 0), WithinAbs(-p2.entry(0, 1), 1e-15));

  Spectrum p1 = path_spectrum(1);
  check_values(p1, {0});
  CHECK(p1.entry(0, 0) == 1.0);

  check_values(path_spectrum(3), {3, 1, 0});
  for (std::size_t n = 1; n <= 12; ++n) check_well_formed(path_spectrum(n), path(n));
}

TEST_CASE("cycle, K2 and hypercube spectra") {
  Spectrum c4 = cycle_spectrum(4);
  check_values(c4, {4, 2, 2, 0});
  for (std::size_t v = 0; v < 4; ++v) {
    CHECK_THAT(c4.entry(0, v), WithinAbs(v % 2 == 0 ? 0.5 : -0.5, 1e-15));
    for (std::size_t k = 0; k < 4; ++k) CHECK_THAT(std::abs(c4.entry(k, v)), WithinAbs(0.5, 1e-15));
  }
  for (std::size_t n = 3; n <= 10; ++n) check_well_formed(cycle_spectrum(n), cycle(n));

  Spectrum k2 = clique2_spectrum();
  check_values(k2, {2, 0});
  CHECK_THAT(k2.entry(0, 0), WithinAbs(-std::sqrt(2.0) / 2, 1e-15));
  check_well_formed(k2, clique2());

  check_values(hypercube_spectrum(1), {2, 0});
  check_values(hypercube_spectrum(3), {6, 4, 4, 4, 2, 2, 2, 0});
  for (std::size_t k = 1; k <= 6; ++k) check_well_formed(hypercube_spectrum(k), hypercube(k));
}

TEST_CASE("hypercube eigenvector entries have magnitude (sqrt2/2)^k") {
  for (std::size_t k = 1; k <= 6; ++k) {
    Spectrum s = hypercube_spectrum(k);
    const double expected = std::pow(std::sqrt(2.0) / 2, static_cast<double>(k));
    for (std::size_t r = 0; r < s.size(); ++r) {
      for (std::size_t v = 0; v < s.size(); ++v) CHECK_THAT(std::abs(s.entry(r, v)), WithinAbs(expected, 1e-14));
    }
  }
}

TEST_CASE("product spectra") {
  check_values(product_spectrum(path_spectrum(2), clique2_spectrum()), {4, 2, 2, 0});

  Spectrum s = cycle_spectrum(5);
  Spectrum same = product_spectrum(s, path_spectrum(1));
  check_values(same, sorted_values(s));
  CHECK((same.vectors - s.vectors).cwiseAbs().maxCoeff() < 1e-15);

  Spectrum q3 = product_spectrum(path_spectrum(2), cycle_spectrum(4));
  check_values(q3, sorted_values(hypercube_spectrum(3)), 1e-12);
  check_well_formed(q3, cartesian_product(path(2), cycle(4)));

  check_well_formed(product_spectrum(path_spectrum(4), cycle_spectrum(4)), block_tower(4));
  check_well_formed(product_spectrum(path_spectrum(3), path_spectrum(5)), cartesian_product(path(3), path(5)));
}

TEST_CASE("generic spectra") {
  check_values(generic_spectrum(build_laplacian(clique2())), {2, 0});
  check_values(generic_spectrum(build_laplacian(path(3))), {3, 1, 0});
  check_values(generic_spectrum(build_laplacian(cycle(4))), {4, 2, 2, 0});

  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 15; ++trial) {
    ResistorNetwork net = oracle::random_network(rng, 2 + trial, trial % 7);
    check_well_formed(generic_spectrum(build_laplacian(net)), net);
  }

  // Repeated zero eigenvalue: the constant vector still comes last.
  Spectrum e3 = generic_spectrum(build_laplacian(empty_graph(3)));
  CHECK(orthonormality_defect(e3) < kOrthonormalityTolerance);
  for (std::size_t v = 0; v < 3; ++v) CHECK_THAT(e3.entry(2, v), WithinAbs(1 / std::sqrt(3.0), 1e-15));
  check_values(e3, {0, 0, 0}, 0.0);

  Eigen::MatrixXd skew(2, 2);
  skew << 1, 2, 0, 1;
  CHECK_THROWS_AS(generic_spectrum(skew), std::invalid_argument);
}

TEST_CASE("spectral resistance") {
  CHECK_THAT(resistance_spectral(clique2_spectrum(), 0, 1), WithinAbs(1.0, 1e-12));
  CHECK_THAT(resistance_spectral(cycle_spectrum(4), 0, 2), WithinAbs(1.0, 1e-12));
  CHECK_THAT(resistance_spectral(path_spectrum(4), 0, 3), WithinAbs(3.0, 1e-12));

  ResistorNetwork split = parse_network("0 1 1\n2 3 1\n");
  CHECK_THROWS_AS(resistance_spectral(generic_spectrum(build_laplacian(split)), 0, 1), DisconnectedNetwork);
}

TEST_CASE("spectral and exact resistances agree") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    ResistorNetwork net = oracle::random_network(rng, 2 + trial % 12, trial % 9);
    Spectrum s = generic_spectrum(build_laplacian(net));
    ResistanceTable exact = resistance_matrix_exact(net);
    for (VertexId u = 0; u < net.vertex_count(); ++u) {
      for (VertexId v = u + 1; v < net.vertex_count(); ++v) {
        CHECK(std::abs(resistance_spectral(s, u, v) - to_double(exact(u, v))) < kResistanceAgreementTolerance);
      }
    }
  }
}
