#include "resnet/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <thread>

#include "resnet/builders.hpp"
#include "resnet/errors.hpp"
#include "resnet/exact_solver.hpp"

namespace resnet {

double product_resistance(const Spectrum& g, const Spectrum& h, double rg_uv, double rh_xy, std::size_t u,
                          std::size_t x, std::size_t v, std::size_t y) {
  const std::size_t n = g.size();
  const std::size_t m = h.size();
  if (n == 0 || m == 0) throw std::invalid_argument("product_resistance: empty spectrum");
  if (static_cast<std::size_t>(g.vectors.rows()) != n || static_cast<std::size_t>(h.vectors.rows()) != m) {
    throw std::invalid_argument("product_resistance: spectrum dimension mismatch");
  }
  if (u >= n || v >= n || x >= m || y >= m) throw std::invalid_argument("product_resistance: vertex out of range");
  double total = rg_uv / static_cast<double>(m) + rh_xy / static_cast<double>(n);
  for (std::size_t p = 0; p + 1 < n; ++p) {
    const double gu = g.entry(p, u);
    const double gv = g.entry(p, v);
    for (std::size_t q = 0; q + 1 < m; ++q) {
      const double d = gu * h.entry(q, x) - gv * h.entry(q, y);
      total += d * d / (g.value(p) + h.value(q));
    }
  }
  return total;
}

std::size_t vertex_budget_from_env() {
  if (const char* env = std::getenv("RESNET_VERTEX_BUDGET")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<std::size_t>(value);
  }
  return kDefaultVertexBudget;
}

namespace {

// Runs body(i) for i in [0, count) on up to `jobs` threads.
void parallel_for(std::size_t count, std::size_t jobs, const std::function<void(std::size_t)>& body) {
  jobs = std::max<std::size_t>(1, std::min(jobs, count));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::thread> workers;
  for (std::size_t w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count && !failed; i = next++) {
        try {
          body(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : workers) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

DiameterReport resistance_diameter(const ResistorNetwork& net, EvalMode mode) {
  const std::size_t n = net.vertex_count();
  if (n < 2) throw std::invalid_argument("resistance_diameter: need at least two vertices");
  if (!net.is_connected()) throw DisconnectedNetwork("network is disconnected");
  DiameterReport report;
  report.labels = net.labels();

  if (mode == EvalMode::exact) {
    const ResistanceTable table = resistance_matrix_exact(net);
    Rational best = table(0, 1);
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = u + 1; v < n; ++v) {
        if (table(u, v) > best) best = table(u, v);
      }
    }
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = u + 1; v < n; ++v) {
        if (table(u, v) == best) report.pairs.emplace_back(u, v);
      }
    }
    report.value = to_double(best);
    report.exact_value = best;
    return report;
  }

  const Spectrum s = generic_spectrum(build_laplacian(net));
  std::vector<double> values;
  double best = 0.0;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) best = std::max(best, resistance_spectral(s, u, v));
  }
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (std::abs(resistance_spectral(s, u, v) - best) <= kDiameterTieTolerance * best) {
        report.pairs.emplace_back(u, v);
      }
    }
  }
  report.value = best;
  return report;
}

ResistorNetwork tower_base(std::size_t k) {
  if (k == 0) throw std::invalid_argument("tower base dimension must be positive");
  return k == 2 ? cycle(4) : hypercube(k);
}

std::size_t tower_antipode(std::size_t k) { return k == 2 ? 3 : (std::size_t{1} << k); }

ScanReport conjecture_scan(const ScanOptions& options) {
  const std::size_t k = options.k;
  if (k == 0 || k > 20) throw std::invalid_argument("conjecture_scan: k must be in 1..20");
  if (options.n_max < 2) throw std::invalid_argument("conjecture_scan: n_max must be at least 2");
  const std::size_t base_size = std::size_t{1} << k;
  if (options.n_max > options.vertex_budget / base_size) {
    throw BudgetExceeded("tower P_" + std::to_string(options.n_max) + " x Q_" + std::to_string(k) + " has " +
                         std::to_string(options.n_max * base_size) + " vertices, over the budget of " +
                         std::to_string(options.vertex_budget) +
                         "; lower --max-n or raise RESNET_VERTEX_BUDGET");
  }
  const auto [bi, bj] = options.pair.value_or(std::pair<std::size_t, std::size_t>{1, tower_antipode(k)});
  if (bi < 1 || bj < 1 || bi > base_size || bj > base_size) {
    throw std::invalid_argument("conjecture_scan: pair indices must be in 1.." + std::to_string(base_size));
  }

  ScanReport report;
  report.k = k;
  report.n_max = options.n_max;
  report.pair_i = bi;
  report.pair_j = bj;
  report.base = k == 2 ? "C4" : "Q" + std::to_string(k);
  report.limit = Rational(1, static_cast<unsigned long>(base_size));
  report.mode = options.mode;

  const ResistorNetwork base = tower_base(k);
  const std::size_t count = options.n_max - report.n_min + 1;
  report.rows.resize(count);

  std::optional<Spectrum> base_spectrum;
  double base_resistance = 0.0;
  if (options.mode == EvalMode::spectral) {
    base_spectrum = k == 2 ? cycle_spectrum(4) : hypercube_spectrum(k);
    base_resistance = resistance_spectral(*base_spectrum, bi - 1, bj - 1);
  }

  parallel_for(count, options.jobs, [&](std::size_t idx) {
    const std::size_t n = report.n_min + idx;
    ScanRow& row = report.rows[idx];
    row.n = n;
    const VertexId from = bi - 1;
    const VertexId to = (n - 1) * base_size + (bj - 1);
    if (options.mode == EvalMode::exact) {
      row.r_exact = resistance_exact(cartesian_product(path(n), base), from, to);
      row.r = to_double(*row.r_exact);
    } else {
      row.r = product_resistance(path_spectrum(n), *base_spectrum, static_cast<double>(n - 1), base_resistance, 0,
                                 bi - 1, n - 1, bj - 1);
    }
  });

  const double limit = to_double(report.limit);
  for (std::size_t idx = 1; idx < count; ++idx) {
    ScanRow& row = report.rows[idx];
    const ScanRow& prev = report.rows[idx - 1];
    if (row.r_exact && prev.r_exact) {
      row.diff_exact = *row.r_exact - *prev.r_exact;
      row.diff = to_double(*row.diff_exact);
      row.abs_dev = std::abs(to_double(*row.diff_exact - report.limit));
    } else {
      row.diff = row.r - prev.r;
      row.abs_dev = std::abs(*row.diff - limit);
    }
  }
  return report;
}

DiameterDeltaReport diameter_delta_scan(std::size_t n_max, std::size_t vertex_budget, std::size_t jobs) {
  if (n_max < 2) throw std::invalid_argument("diameter_delta_scan: n_max must be at least 2");
  if (n_max > vertex_budget / 4) {
    throw BudgetExceeded("block tower G_" + std::to_string(n_max) + " exceeds the vertex budget of " +
                         std::to_string(vertex_budget));
  }
  ScanOptions scan_options;
  scan_options.k = 2;
  scan_options.n_max = n_max;
  scan_options.jobs = jobs;
  scan_options.vertex_budget = vertex_budget;
  const ScanReport endpoint = conjecture_scan(scan_options);

  DiameterDeltaReport report;
  report.rows.resize(n_max - 1);
  parallel_for(report.rows.size(), jobs, [&](std::size_t idx) {
    const std::size_t n = idx + 2;
    const DiameterReport d = resistance_diameter(block_tower(n));
    DiameterDeltaRow& row = report.rows[idx];
    row.n = n;
    row.diameter = *d.exact_value;
    row.pair_count = d.pairs.size();
    const VertexId top = 4 * (n - 1);
    const std::vector<std::pair<VertexId, VertexId>> corners = {
        {0, top + 2}, {1, top + 3}, {2, top + 0}, {3, top + 1}};
    std::vector<std::pair<VertexId, VertexId>> sorted = corners;
    std::sort(sorted.begin(), sorted.end());
    row.corner_pairs = d.pairs == sorted;
  });
  for (std::size_t idx = 1; idx < report.rows.size(); ++idx) {
    auto& row = report.rows[idx];
    row.delta = row.diameter - report.rows[idx - 1].diameter;
    row.endpoint_delta = endpoint.rows[idx].diff_exact;
    if (!row.endpoint_delta || *row.delta != *row.endpoint_delta) report.matches_endpoint_scan = false;
  }
  return report;
}

}  // namespace resnet
