#include "resnet/closed_forms.hpp"

#include <cmath>
#include <stdexcept>

#include "resnet/builders.hpp"
#include "resnet/exact_solver.hpp"

namespace resnet {

Rational kmn_resistance(std::size_t m, std::size_t n, Side a, Side b) {
  if (m < 1 || n < 1) throw std::invalid_argument("kmn_resistance: m and n must be at least 1");
  const auto mm = static_cast<unsigned long>(m);
  const auto nn = static_cast<unsigned long>(n);
  if (a == Side::m_side && b == Side::m_side) return fraction(2, nn);
  if (a == Side::n_side && b == Side::n_side) return fraction(2, mm);
  return fraction(static_cast<long>(mm + nn - 1), mm * nn);
}

namespace {

// sum_k f(Psi_k) / (lambda_k + shift) over the non-null modes of s.
template <typename Term>
double shifted_sum(const Spectrum& s, double shift, Term term) {
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < s.size(); ++k) total += term(k) / (s.value(k) + shift);
  return total;
}

void check_index(const Spectrum& s, std::size_t v) {
  if (v >= s.size()) throw std::invalid_argument("query vertex out of range");
}

}  // namespace

double join_resistance(const Spectrum& g, const Spectrum& h, const PairQuery& query) {
  const double n = static_cast<double>(g.size());
  const double m = static_cast<double>(h.size());
  auto within = [](const Spectrum& s, double other, std::size_t u, std::size_t v) {
    check_index(s, u);
    check_index(s, v);
    if (u == v) return 0.0;
    return shifted_sum(s, other, [&](std::size_t k) {
      const double d = s.entry(k, u) - s.entry(k, v);
      return d * d;
    });
  };
  switch (query.kind) {
    case PairQuery::Kind::within_first:
      return within(g, m, query.a, query.b);
    case PairQuery::Kind::within_second:
      return within(h, n, query.a, query.b);
    case PairQuery::Kind::across: {
      check_index(g, query.a);
      check_index(h, query.b);
      const double from_g = shifted_sum(g, m, [&](std::size_t k) {
        const double x = g.entry(k, query.a);
        return x * x;
      });
      const double from_h = shifted_sum(h, n, [&](std::size_t k) {
        const double x = h.entry(k, query.b);
        return x * x;
      });
      return from_g + from_h + 1.0 / (n * m);
    }
  }
  throw std::invalid_argument("join_resistance: malformed query");
}

double cone_resistance(const Spectrum& g, std::size_t m, const PairQuery& query) {
  if (m <= 1) throw std::invalid_argument("cone_resistance: m must be an integer > 1");
  const double dm = static_cast<double>(m);
  const double n = static_cast<double>(g.size());
  switch (query.kind) {
    case PairQuery::Kind::within_first: {
      check_index(g, query.a);
      check_index(g, query.b);
      if (query.a == query.b) return 0.0;
      return shifted_sum(g, dm, [&](std::size_t k) {
        const double d = g.entry(k, query.a) - g.entry(k, query.b);
        return d * d;
      });
    }
    case PairQuery::Kind::across: {
      check_index(g, query.a);
      return shifted_sum(g, dm,
                         [&](std::size_t k) {
                           const double x = g.entry(k, query.a);
                           return x * x;
                         }) +
             1.0 / (n * dm);
    }
    case PairQuery::Kind::within_second:
      break;
  }
  throw std::invalid_argument("cone_resistance: query must be within G or to the apex");
}

LadderConstants ladder_constants() {
  const double r3 = std::sqrt(3.0);
  return LadderConstants{2.0 - r3, 2.0 + r3, 2.0 - r3};
}

double ladder_endpoint_resistance(std::size_t n) {
  if (n < 2) throw std::invalid_argument("ladder_endpoint_resistance: n must be at least 2");
  const double alpha = ladder_constants().alpha;
  const double dn = static_cast<double>(n);
  const double an = std::pow(alpha, dn);
  const double bracket = 2.0 + 2.0 * an * alpha + 2.0 * an + 2.0 * alpha;
  return (dn - 1.0) / 2.0 +
         (1.0 + std::pow(alpha, dn - 1.0)) / (4.0 * std::sqrt(3.0) * (1.0 - an * an)) * bracket;
}

double ladder_gap(std::size_t n) {
  if (n < 2) throw std::invalid_argument("ladder_gap: n must be at least 2");
  const auto c = ladder_constants();
  const double dn = static_cast<double>(n);
  return 2.0 * std::sqrt(3.0) / (std::pow(c.a, dn) - std::pow(c.b, dn));
}

Rational hypercube_diameter(std::size_t k) {
  if (k < 1) throw std::invalid_argument("hypercube_diameter: k must be at least 1");
  auto factorial = [](std::size_t x) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(x));
    return f;
  };
  const mpz_class kf = factorial(k);
  Rational total(0);
  for (std::size_t i = 1; i <= k; ++i) {
    Rational term(factorial(k - i) * factorial(i - 1), kf);
    term.canonicalize();
    total += term;
  }
  return total;
}

DecompositionReport block_tower_decomposition(std::size_t n) {
  if (n < 2) throw std::invalid_argument("block_tower_decomposition: n must be at least 2");
  DecompositionReport report;
  report.n = n;
  const VertexId last_row = 4 * (n - 1);
  report.lhs_exact = resistance_exact(block_tower(n), 0, last_row + 2);

  const Rational ladder_diag = resistance_exact(ladder(n), 0, 2 * (n - 1) + 1);
  const Rational fan_ends = resistance_exact(fan(n, 4), 0, n - 1);
  const Rational shift = fraction(static_cast<long>(n - 1), 4);
  report.rhs_exact = ladder_diag + fan_ends / 4 - shift;
  report.residual_exact = report.lhs_exact - report.rhs_exact;

  const double fan_closed = cone_resistance(path_spectrum(n), 4, PairQuery::within_first(0, n - 1));
  report.rhs_closed_form = ladder_endpoint_resistance(n) + fan_closed / 4.0 - (static_cast<double>(n) - 1.0) / 4.0;
  report.residual_closed_form = to_double(report.lhs_exact) - report.rhs_closed_form;
  return report;
}

}  // namespace resnet
