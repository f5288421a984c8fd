#pragma once

// Reference resistances for tests, computed without the library solver:
// R[u,v] = det(L minus rows/cols {u,v}) / det(L minus row/col u),
// the ratio of spanning-forest counts (weighted by conductances).

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "resnet/network.hpp"
#include "resnet/rational.hpp"

namespace oracle {

using resnet::Rational;
using resnet::ResistorNetwork;
using resnet::VertexId;

using Matrix = std::vector<std::vector<Rational>>;

/// Laplacian assembled from conductances 1/r.
Matrix laplacian(const ResistorNetwork& net);

/// Determinant by plain fraction elimination, first nonzero pivot.
Rational determinant(Matrix m);

/// The matrix with the listed rows and columns removed.
Matrix minor_without(const Matrix& m, const std::vector<std::size_t>& drop);

Rational resistance(const ResistorNetwork& net, VertexId u, VertexId v);

/// All pairs u < v, row-major.
std::vector<Rational> all_pairs(const ResistorNetwork& net);

/// Connected network on n vertices: a random spanning tree plus extra edges
/// with resistances drawn from {1/4, 1/3, 1/2, 1, 2, 3}; parallel edges allowed.
ResistorNetwork random_network(std::mt19937_64& rng, std::size_t n, std::size_t extra_edges);

/// Connected simple unit-resistance graph on n vertices.
ResistorNetwork random_simple_graph(std::mt19937_64& rng, std::size_t n, double edge_probability);

}  // namespace oracle
