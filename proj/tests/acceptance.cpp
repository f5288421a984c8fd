// Acceptance suite: one PASS/FAIL line per criterion, with its runtime
// measured against the stated limit. Exit status is nonzero on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "resnet/analysis.hpp"
#include "resnet/builders.hpp"
#include "resnet/closed_forms.hpp"
#include "resnet/errors.hpp"
#include "resnet/exact_solver.hpp"
#include "resnet/reduction.hpp"
#include "resnet/spectra.hpp"

using namespace resnet;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> body;
};

Rational pow_inverse(std::size_t base, std::size_t exponent) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), base, exponent);
  return Rational(mpz_class(1), p);
}

std::string str(const Rational& r) { return to_string(r); }

// 1 ---------------------------------------------------------------------------
Outcome hypercube_diameters() {
  Outcome out;
  for (std::size_t k = 1; k <= 6; ++k) {
    const Rational formula = hypercube_diameter(k);
    const Rational solved = resistance_exact(hypercube(k), 0, (VertexId{1} << k) - 1);
    out.require(formula == solved, "k=" + std::to_string(k) + ": " + str(formula) + " vs " + str(solved));
  }
  out.require(hypercube_diameter(3) == Rational(5, 6), "k=3 is not 5/6");
  if (out.ok) out.detail = "k=1..6 equal; k=3 -> 5/6";
  return out;
}

// 2 ---------------------------------------------------------------------------
Outcome bipartite_closed_forms() {
  Outcome out;
  std::size_t checked = 0;
  for (std::size_t m = 1; m <= 6; ++m) {
    for (std::size_t n = 1; n <= 6; ++n) {
      ResistorNetwork k = complete_bipartite(m, n);
      const std::string tag = "K_{" + std::to_string(m) + "," + std::to_string(n) + "}";
      if (m >= 2) {
        out.require(kmn_resistance(m, n, Side::m_side, Side::m_side) == oracle::resistance(k, 0, 1), tag + " m-side");
        ++checked;
      }
      if (n >= 2) {
        out.require(kmn_resistance(m, n, Side::n_side, Side::n_side) == oracle::resistance(k, m, m + 1),
                    tag + " n-side");
        ++checked;
      }
      out.require(kmn_resistance(m, n, Side::m_side, Side::n_side) == oracle::resistance(k, 0, m), tag + " cross");
      ++checked;
    }
  }
  if (out.ok) out.detail = std::to_string(checked) + " cases exact";
  return out;
}

// 3 ---------------------------------------------------------------------------
struct Candidate {
  std::function<Rewrite()> make;
};

std::vector<Candidate> candidate_rewrites(const ResistorNetwork& net, const Terminals& t, std::size_t max_vertices) {
  std::vector<Candidate> out;
  const std::size_t n = net.vertex_count();
  auto single = [&](VertexId a, VertexId b) { return net.edges_between(a, b).size() == 1; };
  // Series and parallel merges whose gadget resistances (or conductances)
  // cancel are not rewrites, so they are never offered.
  for (VertexId v = 0; v < n; ++v) {
    if (t.contains(net.label(v)) || net.degree(v) != 2 || net.neighbors(v).size() != 2) continue;
    Rational sum(0);
    for (const auto& e : net.edges()) {
      if (e.u == v || e.v == v) sum += e.r;
    }
    if (sum != 0) out.push_back({[&net, &t, v] { return series_reduce(net, v, t); }});
  }
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v : net.neighbors(u)) {
      const auto idx = net.edges_between(u, v);
      if (u >= v || idx.size() < 2) continue;
      Rational conductance(0);
      for (std::size_t i : idx) conductance += 1 / net.edges()[i].r;
      if (conductance != 0) out.push_back({[&net, u, v] { return parallel_reduce(net, u, v); }});
    }
  }
  if (n < max_vertices) {
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v : net.neighbors(u)) {
        if (v <= u || !single(u, v)) continue;
        for (VertexId w : net.neighbors(v)) {
          if (w <= v || !single(v, w) || net.edges_between(u, w).size() != 1) continue;
          const Rational sum = net.edges()[net.edges_between(u, v)[0]].r + net.edges()[net.edges_between(v, w)[0]].r +
                               net.edges()[net.edges_between(u, w)[0]].r;
          if (sum != 0) out.push_back({[&net, u, v, w] { return delta_y(net, {u, v, w}); }});
        }
      }
    }
  }
  try {
    Rewrite probe = eliminate_block(net, t);
    out.push_back({[probe] { return probe; }});
  } catch (const ReductionError&) {
  }
  if (n + 2 <= max_vertices) {
    // Stars K_{1,d}: a centre with unit single edges to pairwise non-adjacent leaves.
    for (VertexId x = 0; x < n; ++x) {
      std::vector<VertexId> leaves;
      bool unit = true;
      for (VertexId y : net.neighbors(x)) {
        auto idx = net.edges_between(x, y);
        if (idx.size() != 1 || net.edges()[idx[0]].r != 1 || net.edges()[idx[0]].gadget) {
          unit = false;
          break;
        }
        leaves.push_back(y);
      }
      if (!unit || leaves.empty()) continue;
      bool independent = true;
      for (std::size_t i = 0; i < leaves.size() && independent; ++i) {
        for (std::size_t j = i + 1; j < leaves.size(); ++j) {
          if (!net.edges_between(leaves[i], leaves[j]).empty()) independent = false;
        }
      }
      if (!independent) continue;
      out.push_back({[&net, x, leaves] {
        const VertexId xs[] = {x};
        return substitute_bipartite_star(net, xs, leaves);
      }});
    }
  }
  return out;
}

std::vector<Rational> terminal_table(const ResistorNetwork& net, const Terminals& t) {
  std::vector<Rational> out;
  const auto& labels = t.labels();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      out.push_back(oracle::resistance(net, *net.find(labels[i]), *net.find(labels[j])));
    }
  }
  return out;
}

Outcome randomized_rewrites() {
  Outcome out;
  std::mt19937_64 rng(20260101);
  constexpr std::size_t kSteps = 200;
  constexpr std::size_t kMaxVertices = 10;
  std::size_t steps = 0;
  std::size_t kinds[5] = {0, 0, 0, 0, 0};
  while (steps < kSteps && out.ok) {
    std::uniform_int_distribution<std::size_t> size(4, 8);
    ResistorNetwork net = oracle::random_network(rng, size(rng), 3);
    std::vector<VertexId> ids(net.vertex_count());
    for (VertexId v = 0; v < ids.size(); ++v) ids[v] = v;
    std::shuffle(ids.begin(), ids.end(), rng);
    ids.resize(2 + steps % 3);
    const Terminals t = Terminals::from_ids(net, ids);
    const std::vector<Rational> reference = terminal_table(net, t);

    for (int local = 0; local < 12 && steps < kSteps && out.ok; ++local) {
      auto options = candidate_rewrites(net, t, kMaxVertices);
      if (options.empty()) break;
      std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
      Rewrite rw = options[pick(rng)].make();
      out.require(apply_step(net, rw.step) == rw.network, "step replay mismatch");
      out.require(rw.network.vertex_count() <= kMaxVertices, "network grew past 10 vertices");
      out.require(terminal_table(rw.network, t) == reference,
                  "terminal resistances changed by a " + std::string(to_string(rw.step.kind)) + " step");
      ++kinds[static_cast<int>(rw.step.kind)];
      net = std::move(rw.network);
      ++steps;
    }
  }
  out.require(steps == kSteps, "ran out of applicable rewrites");
  if (out.ok) {
    std::ostringstream s;
    s << steps << " steps (series " << kinds[0] << ", parallel " << kinds[1] << ", delta-Y " << kinds[2]
      << ", block " << kinds[3] << ", star " << kinds[4] << ")";
    out.detail = s.str();
  }
  return out;
}

// 4 ---------------------------------------------------------------------------
Outcome fan_bounds() {
  Outcome out;
  for (std::size_t m = 2; m <= 4; ++m) {
    for (std::size_t n = 2; n <= 12; ++n) {
      const std::string tag = "m=" + std::to_string(m) + " n=" + std::to_string(n);
      ResistorNetwork small = fan(n, m);
      ResistorNetwork big = fan(n + 1, m);
      const Rational ends_small = resistance_exact(small, 0, n - 1);
      const Rational ends_big = resistance_exact(big, 0, n);
      const Rational apex_small = resistance_exact(small, 0, n);
      const Rational apex_big = resistance_exact(big, 0, n + 1);
      const Rational bound = pow_inverse(m, n);

      const Rational step = ends_big - ends_small;
      out.require(0 < step && step < 2 * bound, tag + ": endpoint growth " + str(step));
      const Rational drop = apex_small - apex_big;
      out.require(0 < drop && drop < bound, tag + ": apex drop " + str(drop));
      const Rational defect = 2 * apex_small - ends_small;
      out.require(0 < defect && defect < 2 * bound, tag + ": apex defect " + str(defect));

      const FanChain chain = fan_chain_reduce(n, m);
      const Rational arm = chain.penultimate_apex_arm();
      out.require(0 < arm && arm < bound, tag + ": r[c_(n-1),b] = " + str(arm));
      out.require(chain.endpoint_resistance() == ends_big, tag + ": chain endpoint mismatch");
    }
  }
  if (out.ok) out.detail = "33 (m,n) cases, all four bounds strict";
  return out;
}

// 5 ---------------------------------------------------------------------------
Outcome ladder_forms() {
  Outcome out;
  double worst = 0;
  Rational previous;
  for (std::size_t n = 2; n <= 12; ++n) {
    ResistorNetwork l = ladder(n);
    const Rational diag = resistance_exact(l, 0, 2 * (n - 1) + 1);
    const Rational straight = resistance_exact(l, 0, 2 * (n - 1));
    const double e1 = std::abs(ladder_endpoint_resistance(n) - to_double(diag));
    const double e2 = std::abs(ladder_gap(n) - to_double(diag - straight));
    worst = std::max({worst, e1, e2});
    out.require(e1 < 1e-12, "endpoint n=" + std::to_string(n));
    out.require(e2 < 1e-12, "gap n=" + std::to_string(n));
    out.require(ladder_gap(n) > 0 && diag - straight > 0, "gap not positive at n=" + std::to_string(n));
    if (n > 2) {
      out.require(diag - previous > Rational(1, 4), "exact endpoint difference <= 1/4 at n=" + std::to_string(n));
      out.require(ladder_endpoint_resistance(n) - ladder_endpoint_resistance(n - 1) > 0.25,
                  "closed-form endpoint difference <= 1/4 at n=" + std::to_string(n));
    }
    previous = diag;
  }
  if (out.ok) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "n=2..12, max error %.2e", worst);
    out.detail = buf;
  }
  return out;
}

// 6 ---------------------------------------------------------------------------
Outcome product_formula() {
  Outcome out;
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<std::size_t> size(1, 5);
  std::uniform_real_distribution<double> density(0.2, 0.9);
  double worst = 0;
  std::size_t pairs = 0;
  for (int trial = 0; trial < 50; ++trial) {
    ResistorNetwork g = oracle::random_simple_graph(rng, size(rng), density(rng));
    ResistorNetwork h = oracle::random_simple_graph(rng, size(rng), density(rng));
    const Spectrum sg = generic_spectrum(build_laplacian(g));
    const Spectrum sh = generic_spectrum(build_laplacian(h));
    const ResistanceTable rg = resistance_matrix_exact(g);
    const ResistanceTable rh = resistance_matrix_exact(h);
    const ResistorNetwork p = cartesian_product(g, h);
    const ResistanceTable rp = resistance_matrix_exact(p);
    const std::size_t m = h.vertex_count();
    for (VertexId a = 0; a < p.vertex_count(); ++a) {
      for (VertexId b = a; b < p.vertex_count(); ++b) {
        const VertexId u = a / m, x = a % m, v = b / m, y = b % m;
        const double value = product_resistance(sg, sh, to_double(rg(u, v)), to_double(rh(x, y)), u, x, v, y);
        const double err = std::abs(value - to_double(rp(a, b)));
        worst = std::max(worst, err);
        ++pairs;
        out.require(err < 1e-9, "trial " + std::to_string(trial) + " error " + std::to_string(err));
      }
    }
  }
  if (out.ok) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "50 pairs, %zu vertex pairs, max error %.2e", pairs, worst);
    out.detail = buf;
  }
  return out;
}

// 7 ---------------------------------------------------------------------------
Outcome scan_k2() {
  Outcome out;
  ScanOptions options;
  options.k = 2;
  options.n_max = 20;
  const ScanReport report = conjecture_scan(options);
  out.require(report.rows.size() == 19, "expected rows n=2..20");
  double at15 = 1;
  for (std::size_t i = 1; i < report.rows.size(); ++i) {
    const ScanRow& row = report.rows[i];
    out.require(*row.diff_exact > 0, "diff not positive at n=" + std::to_string(row.n));
    if (i > 1) {
      out.require(*row.abs_dev < *report.rows[i - 1].abs_dev, "deviation not decreasing at n=" + std::to_string(row.n));
    }
    if (row.n == 15) at15 = *row.abs_dev;
  }
  out.require(at15 < 1e-6, "deviation at n=15 is " + std::to_string(at15));
  if (out.ok) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "|diff-1/4| = %.3e at n=15, %.3e at n=20", at15, *report.rows.back().abs_dev);
    out.detail = buf;
  }
  return out;
}

// 8 ---------------------------------------------------------------------------
Outcome scan_other_k() {
  Outcome out;
  std::ostringstream detail;
  for (std::size_t k : {1, 3}) {
    ScanOptions options;
    options.k = k;
    options.n_max = 12;
    const ScanReport report = conjecture_scan(options);
    double at4 = 0, at12 = 0;
    for (const auto& row : report.rows) {
      if (row.n == 4) at4 = *row.abs_dev;
      if (row.n == 12) at12 = *row.abs_dev;
    }
    const double ratio = at4 / at12;
    out.require(at12 > 0 && ratio >= 10, "k=" + std::to_string(k) + " drop only " + std::to_string(ratio) + "x");
    char buf[128];
    std::snprintf(buf, sizeof buf, "k=%zu: %.2e -> %.2e (%.0fx)%s", k, at4, at12, ratio, k == 1 ? "; " : "");
    detail << buf;
  }
  if (out.ok) out.detail = detail.str();
  return out;
}

// 9 ---------------------------------------------------------------------------
Outcome diametrical_pairs() {
  Outcome out;
  for (std::size_t n = 2; n <= 8; ++n) {
    const DiameterReport d = resistance_diameter(block_tower(n));
    const VertexId top = 4 * (n - 1);
    std::vector<std::pair<VertexId, VertexId>> expected = {{0, top + 2}, {1, top + 3}, {2, top}, {3, top + 1}};
    std::sort(expected.begin(), expected.end());
    out.require(d.pairs == expected, "wrong tie set for n=" + std::to_string(n));
    const ResistorNetwork g = block_tower(n);
    const Rational first = resistance_exact(g, expected[0].first, expected[0].second);
    for (const auto& [u, v] : expected) {
      out.require(resistance_exact(g, u, v) == first, "corner values differ for n=" + std::to_string(n));
    }
    out.require(d.exact_value == first, "diameter value mismatch for n=" + std::to_string(n));
    if (n == 2) out.require(d.exact_value == Rational(5, 6), "D_r(G_2) is not 5/6");
  }
  if (out.ok) out.detail = "n=2..8: four corner pairs, equal values; D_r(G_2) = 5/6";
  return out;
}

// 10 --------------------------------------------------------------------------
Outcome decomposition() {
  Outcome out;
  for (std::size_t n = 2; n <= 8; ++n) {
    const DecompositionReport r = block_tower_decomposition(n);
    out.require(r.residual_exact == 0, "residual " + str(r.residual_exact) + " at n=" + std::to_string(n));
  }
  if (out.ok) out.detail = "n=2..8 residual exactly 0";
  return out;
}

// 11 --------------------------------------------------------------------------
struct Specimen {
  std::string name;
  ResistorNetwork net;
  Spectrum spectrum;
};

std::vector<Specimen> builder_specimens() {
  std::vector<Specimen> out;
  auto generic = [](const ResistorNetwork& net) { return generic_spectrum(build_laplacian(net)); };
  for (std::size_t n : {2, 5, 17, 200}) out.push_back({"path(" + std::to_string(n) + ")", path(n), path_spectrum(n)});
  for (std::size_t n : {3, 4, 9, 200}) out.push_back({"cycle(" + std::to_string(n) + ")", cycle(n), cycle_spectrum(n)});
  out.push_back({"clique2", clique2(), clique2_spectrum()});
  for (std::size_t k = 1; k <= 7; ++k) {
    out.push_back({"hypercube(" + std::to_string(k) + ")", hypercube(k), hypercube_spectrum(k)});
  }
  for (std::size_t n : {2, 7, 100}) {
    out.push_back({"ladder(" + std::to_string(n) + ")", ladder(n), product_spectrum(path_spectrum(n), clique2_spectrum())});
  }
  for (std::size_t n : {2, 5, 50}) {
    out.push_back({"block_tower(" + std::to_string(n) + ")", block_tower(n),
                   product_spectrum(path_spectrum(n), cycle_spectrum(4))});
  }
  out.push_back({"path(6)xpath(8)", cartesian_product(path(6), path(8)),
                 product_spectrum(path_spectrum(6), path_spectrum(8))});
  for (auto [n, m] : {std::pair<std::size_t, std::size_t>{3, 2}, {8, 4}, {40, 3}}) {
    ResistorNetwork f = fan(n, m);
    out.push_back({"fan(" + std::to_string(n) + "," + std::to_string(m) + ")", f, generic(f)});
  }
  ResistorNetwork c = cone(cycle(12), 5);
  out.push_back({"cone(cycle(12),5)", c, generic(c)});
  ResistorNetwork j = join(path(6), cycle(5));
  out.push_back({"join(path(6),cycle(5))", j, generic(j)});
  ResistorNetwork k = complete_bipartite(4, 7);
  out.push_back({"kmn(4,7)", k, generic(k)});
  return out;
}

Outcome property_suite() {
  Outcome out;
  std::mt19937_64 rng(911);
  double worst = 0;
  std::size_t count = 0;
  for (const Specimen& s : builder_specimens()) {
    const ResistorNetwork& net = s.net;
    const std::size_t n = net.vertex_count();
    const ResistanceTable r = resistance_matrix_exact(net);
    const std::string& tag = s.name;

    // Metric axioms: every triple for small networks, a sample otherwise.
    for (std::size_t u = 0; u < n; ++u) {
      out.require(r(u, u) == 0, tag + ": nonzero diagonal");
      for (std::size_t v = u + 1; v < n; ++v) {
        out.require(r(u, v) == r(v, u) && r(u, v) > 0, tag + ": symmetry or positivity");
      }
    }
    std::uniform_int_distribution<std::size_t> any(0, n - 1);
    auto triangle = [&](std::size_t u, std::size_t v, std::size_t w) {
      out.require(r(u, w) <= r(u, v) + r(v, w), tag + ": triangle inequality");
    };
    if (n <= 40) {
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
          for (std::size_t w = 0; w < n; ++w) triangle(u, v, w);
    } else {
      for (int i = 0; i < 20000; ++i) triangle(any(rng), any(rng), any(rng));
    }

    // Ground independence on sampled pairs.
    for (int i = 0; i < 4 && n >= 2; ++i) {
      VertexId u = any(rng), v = any(rng);
      if (u == v) continue;
      const VertexId g = any(rng);
      out.require(resistance_exact(net, u, v, g) == r(u, v), tag + ": ground dependence");
    }

    // Rayleigh: an extra resistor never raises any resistance.
    if (n >= 3 && n <= 60) {
      ResistorNetwork more = net;
      VertexId a = any(rng), b = any(rng);
      if (a == b) b = (a + 1) % n;
      more.add_edge(a, b, Rational(2));
      const ResistanceTable after = resistance_matrix_exact(more);
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) out.require(after(u, v) <= r(u, v), tag + ": Rayleigh monotonicity");
    }

    // Spectral agreement on every pair.
    out.require(orthonormality_defect(s.spectrum) < kOrthonormalityTolerance, tag + ": spectrum not orthonormal");
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        const double err = std::abs(resistance_spectral(s.spectrum, u, v) - to_double(r(u, v)));
        worst = std::max(worst, err);
        out.require(err < kResistanceAgreementTolerance, tag + ": spectral disagreement " + std::to_string(err));
      }
    }
    ++count;
  }
  if (out.ok) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%zu builder networks up to 200 vertices, max spectral error %.2e", count, worst);
    out.detail = buf;
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "hypercube diameter formula", 5, hypercube_diameters},
      {2, "K_{m,n} closed forms", 5, bipartite_closed_forms},
      {3, "rewrite soundness (200 random steps)", 30, randomized_rewrites},
      {4, "fan bounds", 30, fan_bounds},
      {5, "ladder closed forms", 10, ladder_forms},
      {6, "product resistance formula", 60, product_formula},
      {7, "k=2 tower scan", 120, scan_k2},
      {8, "k=1 and k=3 tower scans", 180, scan_other_k},
      {9, "block tower diametrical pairs", 120, diametrical_pairs},
      {10, "block tower decomposition", 60, decomposition},
      {11, "property suite", 120, property_suite},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.body();
    } catch (const std::exception& e) {
      outcome.ok = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outcome.ok && seconds >= c.limit_seconds) {
      outcome.ok = false;
      outcome.detail += " (over time limit)";
    }
    if (!outcome.ok) ++failures;
    std::printf("[%s] %2d %-40s %7.2f s / %4.0f s  %s\n", outcome.ok ? "PASS" : "FAIL", c.id, c.name.c_str(), seconds,
                c.limit_seconds, outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
