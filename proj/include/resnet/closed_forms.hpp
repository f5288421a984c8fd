#pragma once

#include <cstddef>

#include "resnet/rational.hpp"
#include "resnet/spectra.hpp"

namespace resnet {

/// Which partite set of K_{m,n} a vertex belongs to: the m-vertex side
/// or the n-vertex side.
enum class Side { m_side, n_side };

/// Resistance between two distinct vertices of K_{m,n}:
/// 2/n within the m-side, 2/m within the n-side, (m+n-1)/(mn) across.
Rational kmn_resistance(std::size_t m, std::size_t n, Side a, Side b);

/// A resistance query on a two-part network (a join G+H, or a cone over G).
struct PairQuery {
  enum class Kind { within_first, within_second, across } kind = Kind::within_first;
  std::size_t a = 0;  // index in the first part (or in H for within_second)
  std::size_t b = 0;  // index in the same part, or in H for across

  static PairQuery within_first(std::size_t u, std::size_t v) { return {Kind::within_first, u, v}; }
  static PairQuery within_second(std::size_t x, std::size_t y) { return {Kind::within_second, x, y}; }
  static PairQuery across(std::size_t u, std::size_t w) { return {Kind::across, u, w}; }
};

/// Resistance in the join G + H from the spectra of G (n vertices) and
/// H (m vertices). Both spectra must end with the constant null mode.
double join_resistance(const Spectrum& g, const Spectrum& h, const PairQuery& query);

/// Resistance in the weighted cone over G with apex edges of resistance
/// 1/m. `across` queries are (u, apex) and ignore the b field.
double cone_resistance(const Spectrum& g, std::size_t m, const PairQuery& query);

struct LadderConstants {
  double alpha;  // 2 - sqrt3
  double a;      // 2 + sqrt3
  double b;      // 2 - sqrt3
};
LadderConstants ladder_constants();

/// R_{L_n}[(a1,c1),(an,c2)], the diagonal corner-to-corner resistance of the ladder.
double ladder_endpoint_resistance(std::size_t n);
/// R_{L_n}[(a1,c1),(an,c2)] - R_{L_n}[(a1,c1),(an,c1)] = 2 sqrt3 / (a^n - b^n).
double ladder_gap(std::size_t n);

/// Resistance between antipodal vertices of Q_k:
/// sum_{i=1..k} (k-i)! (i-1)! / k!, evaluated exactly.
Rational hypercube_diameter(std::size_t k);

/// Both sides of
///   R_{G_n}[(a1,b1),(an,b3)] = R_{L_n}[(a1,c1),(an,c2)] + R_{fan(n,4)}[a1,an]/4 - (n-1)/4.
/// The exact fields use the exact solver on block_tower(n), ladder(n) and
/// fan(n, 4); the float right-hand side uses the ladder closed form and the
/// cone spectral formula.
struct DecompositionReport {
  std::size_t n = 0;
  Rational lhs_exact;
  Rational rhs_exact;
  Rational residual_exact;  // lhs - rhs
  double rhs_closed_form = 0.0;
  double residual_closed_form = 0.0;  // lhs - rhs_closed_form
};
DecompositionReport block_tower_decomposition(std::size_t n);

}  // namespace resnet
