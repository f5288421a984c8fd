#include "resnet/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "resnet/errors.hpp"

namespace resnet {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTieTolerance = 1e-9;

bool is_zero_mode(const Spectrum& s, std::size_t k) {
  const double scale = std::max(1.0, s.values.cwiseAbs().maxCoeff());
  return std::abs(s.value(k)) <= kTieTolerance * scale;
}

// Puts the null mode of a connected Laplacian in the exact e/sqrt(n) form.
void pin_null_mode(Spectrum& s) {
  const std::size_t n = s.size();
  if (n == 0) return;
  const std::size_t last = n - 1;
  if (!is_zero_mode(s, last) || (n > 1 && is_zero_mode(s, last - 1))) return;
  const double c = 1.0 / std::sqrt(static_cast<double>(n));
  const auto col = s.vectors.col(static_cast<Eigen::Index>(last));
  if ((col.cwiseAbs().array() - c).abs().maxCoeff() > 1e-8) return;
  s.values(static_cast<Eigen::Index>(last)) = 0.0;
  s.vectors.col(static_cast<Eigen::Index>(last)).setConstant(c);
}

// A disconnected Laplacian has a repeated zero eigenvalue and the solver
// returns an arbitrary basis of its null space. Replace that basis by the
// constant vector (last) plus an orthonormal complement inside the null space.
void rebuild_null_space(Spectrum& s) {
  const Eigen::Index n = static_cast<Eigen::Index>(s.size());
  Eigen::Index z = 0;
  while (z < n && is_zero_mode(s, static_cast<std::size_t>(n - 1 - z))) ++z;
  if (z < 2) return;
  const Eigen::VectorXd e = Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
  Eigen::MatrixXd basis = s.vectors.rightCols(z);
  basis -= e * (e.transpose() * basis);
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(basis);
  const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, z - 1);
  s.vectors.middleCols(n - z, z - 1) = q;
  s.vectors.col(n - 1) = e;
  s.values.tail(z).setZero();
}

}  // namespace

Spectrum path_spectrum(std::size_t n) {
  if (n == 0) throw std::invalid_argument("path_spectrum: n must be positive");
  Spectrum s;
  s.values.resize(static_cast<Eigen::Index>(n));
  s.vectors.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  const double dn = static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t p = n - 1 - k;
    const auto col = static_cast<Eigen::Index>(k);
    if (p == 0) {
      s.values(col) = 0.0;
      s.vectors.col(col).setConstant(1.0 / std::sqrt(dn));
      continue;
    }
    const double half = std::sin(static_cast<double>(p) * kPi / (2.0 * dn));
    s.values(col) = 4.0 * half * half;
    for (std::size_t j = 0; j < n; ++j) {
      s.vectors(static_cast<Eigen::Index>(j), col) =
          -std::sqrt(2.0 / dn) *
          std::cos(static_cast<double>(p) * kPi * (2.0 * static_cast<double>(j) + 1.0) / (2.0 * dn));
    }
  }
  return s;
}

Spectrum cycle_spectrum(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle_spectrum: n must be at least 3");
  Spectrum s;
  s.values.resize(static_cast<Eigen::Index>(n));
  s.vectors.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  if (n == 4) {
    s.values << 4.0, 2.0, 2.0, 0.0;
    s.vectors << 0.5, -0.5, -0.5, 0.5,
                 -0.5, -0.5, 0.5, 0.5,
                 0.5, 0.5, 0.5, 0.5,
                 -0.5, 0.5, -0.5, 0.5;
    return s;
  }
  struct Mode {
    double value;
    std::size_t freq;
    int kind;  // 0 cosine, 1 sine, 2 alternating
  };
  std::vector<Mode> modes;
  const double dn = static_cast<double>(n);
  for (std::size_t f = 1; 2 * f <= n; ++f) {
    const double half = std::sin(static_cast<double>(f) * kPi / dn);
    const double value = 4.0 * half * half;
    if (2 * f == n) {
      modes.push_back({value, f, 2});
    } else {
      modes.push_back({value, f, 0});
      modes.push_back({value, f, 1});
    }
  }
  std::stable_sort(modes.begin(), modes.end(),
                   [](const Mode& a, const Mode& b) { return a.freq > b.freq; });
  for (std::size_t k = 0; k < modes.size(); ++k) {
    const auto col = static_cast<Eigen::Index>(k);
    const Mode& m = modes[k];
    s.values(col) = m.value;
    for (std::size_t j = 0; j < n; ++j) {
      const double angle = 2.0 * kPi * static_cast<double>(m.freq * j) / dn;
      double x = 0.0;
      if (m.kind == 0) x = std::sqrt(2.0 / dn) * std::cos(angle);
      if (m.kind == 1) x = std::sqrt(2.0 / dn) * std::sin(angle);
      if (m.kind == 2) x = (j % 2 == 0 ? 1.0 : -1.0) / std::sqrt(dn);
      s.vectors(static_cast<Eigen::Index>(j), col) = x;
    }
  }
  const auto last = static_cast<Eigen::Index>(n - 1);
  s.values(last) = 0.0;
  s.vectors.col(last).setConstant(1.0 / std::sqrt(dn));
  return s;
}

Spectrum clique2_spectrum() {
  Spectrum s;
  const double h = std::sqrt(2.0) / 2.0;
  s.values.resize(2);
  s.values << 2.0, 0.0;
  s.vectors.resize(2, 2);
  s.vectors << -h, h,
               h, h;
  return s;
}

Spectrum hypercube_spectrum(std::size_t k) {
  if (k == 0) throw std::invalid_argument("hypercube_spectrum: k must be positive");
  Spectrum s = clique2_spectrum();
  for (std::size_t d = 1; d < k; ++d) s = product_spectrum(s, clique2_spectrum());
  return s;
}

Spectrum product_spectrum(const Spectrum& g, const Spectrum& h) {
  const std::size_t n = g.size();
  const std::size_t m = h.size();
  struct Pair {
    double value;
    std::size_t i, j;
  };
  std::vector<Pair> pairs;
  pairs.reserve(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) pairs.push_back({g.value(i) + h.value(j), i, j});
  }
  auto lex = [](const Pair& a, const Pair& b) { return a.i != b.i ? a.i < b.i : a.j < b.j; };
  std::stable_sort(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
    return a.value != b.value ? a.value > b.value : lex(a, b);
  });
  // Values within the tie tolerance form one cluster ordered by (i, j).
  for (std::size_t start = 0; start < pairs.size();) {
    std::size_t end = start + 1;
    while (end < pairs.size() &&
           std::abs(pairs[end].value - pairs[end - 1].value) <=
               kTieTolerance * std::max(1.0, std::abs(pairs[start].value))) {
      ++end;
    }
    std::sort(pairs.begin() + static_cast<std::ptrdiff_t>(start),
              pairs.begin() + static_cast<std::ptrdiff_t>(end), lex);
    start = end;
  }

  Spectrum s;
  const auto size = static_cast<Eigen::Index>(n * m);
  s.values.resize(size);
  s.vectors.resize(size, size);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto col = static_cast<Eigen::Index>(k);
    const auto& p = pairs[k];
    s.values(col) = p.value;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t x = 0; x < m; ++x) {
        s.vectors(static_cast<Eigen::Index>(u * m + x), col) = g.entry(p.i, u) * h.entry(p.j, x);
      }
    }
  }
  pin_null_mode(s);
  return s;
}

Spectrum generic_spectrum(const Eigen::MatrixXd& laplacian) {
  const Eigen::Index n = laplacian.rows();
  if (laplacian.cols() != n) throw std::invalid_argument("generic_spectrum: matrix is not square");
  const double scale = std::max(1.0, laplacian.cwiseAbs().maxCoeff());
  if ((laplacian - laplacian.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw std::invalid_argument("generic_spectrum: matrix is not symmetric");
  }

  Eigen::MatrixXd a = laplacian;
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    }
    if (std::sqrt(off) <= 1e-15 * scale) break;
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) <= 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - sn * akq;
          a(k, q) = sn * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - sn * aqk;
          a(q, k) = sn * apk + c * aqk;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - sn * vkq;
          v(k, q) = sn * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index x, Eigen::Index y) { return a(x, x) > a(y, y); });
  Spectrum s;
  s.values.resize(n);
  s.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index src = order[static_cast<std::size_t>(k)];
    s.values(k) = a(src, src);
    Eigen::VectorXd col = v.col(src);
    Eigen::Index big = 0;
    col.cwiseAbs().maxCoeff(&big);
    if (col(big) < 0) col = -col;
    s.vectors.col(k) = col;
  }
  rebuild_null_space(s);
  pin_null_mode(s);
  return s;
}

Spectrum generic_spectrum(const Laplacian& laplacian) { return generic_spectrum(laplacian.to_float()); }

double resistance_spectral(const Spectrum& s, std::size_t u, std::size_t v) {
  const std::size_t n = s.size();
  if (u >= n || v >= n) throw std::out_of_range("resistance_spectral: vertex out of range");
  if (n >= 2 && is_zero_mode(s, n - 2)) {
    throw DisconnectedNetwork("zero eigenvalue is repeated: network is disconnected");
  }
  if (u == v) return 0.0;
  double r = 0.0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const double d = s.entry(k, u) - s.entry(k, v);
    r += d * d / s.value(k);
  }
  return r;
}

double orthonormality_defect(const Spectrum& s) {
  const Eigen::MatrixXd gram = s.vectors.transpose() * s.vectors;
  return (gram - Eigen::MatrixXd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
}

double eigen_residual(const Spectrum& s, const Eigen::MatrixXd& laplacian) {
  const Eigen::MatrixXd lhs = laplacian * s.vectors;
  const Eigen::MatrixXd rhs = s.vectors * s.values.asDiagonal();
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

}  // namespace resnet
