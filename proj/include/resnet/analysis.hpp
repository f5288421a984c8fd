#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "resnet/network.hpp"
#include "resnet/rational.hpp"
#include "resnet/spectra.hpp"

namespace resnet {

/// Resistance between (u, x) and (v, y) in G □ H:
///   R_G[u,v]/|V(H)| + R_H[x,y]/|V(G)|
///     + sum_{p,q nonnull} (Psi_pu Phi_qx - Psi_pv Phi_qy)^2 / (lambda_p + mu_q).
/// Both spectra must end with their constant null mode.
double product_resistance(const Spectrum& g, const Spectrum& h, double rg_uv, double rh_xy, std::size_t u,
                          std::size_t x, std::size_t v, std::size_t y);

enum class EvalMode { exact, spectral };

inline constexpr std::size_t kDefaultVertexBudget = 4096;
inline constexpr double kDiameterTieTolerance = 1e-9;

/// RESNET_VERTEX_BUDGET if set to a positive integer, else kDefaultVertexBudget.
std::size_t vertex_budget_from_env();

struct DiameterReport {
  double value = 0.0;
  /// Set in exact mode; ties are then decided exactly.
  std::optional<Rational> exact_value;
  /// Every (u, v), u < v, attaining the maximum, in lexicographic order.
  std::vector<std::pair<VertexId, VertexId>> pairs;
  std::vector<std::string> labels;
};

/// Maximum resistance over all vertex pairs together with the full tie set.
/// Spectral mode compares with a relative tolerance of kDiameterTieTolerance.
DiameterReport resistance_diameter(const ResistorNetwork& net, EvalMode mode = EvalMode::exact);

struct ScanOptions {
  std::size_t k = 2;
  std::size_t n_max = 20;
  /// 1-based labels (b_i, b_j) of the base vertices; defaults to b1 and its antipode.
  std::optional<std::pair<std::size_t, std::size_t>> pair;
  EvalMode mode = EvalMode::exact;
  std::size_t jobs = 1;
  std::size_t vertex_budget = kDefaultVertexBudget;
};

/// Row n holds R_n = R_{U_n}[(a1,b_i),(an,b_j)]. Every row after the first
/// (n = 2, the baseline) also holds diff = R_n - R_{n-1} and |diff - 1/2^k|.
struct ScanRow {
  std::size_t n = 0;
  double r = 0.0;
  std::optional<Rational> r_exact;
  std::optional<double> diff;
  std::optional<Rational> diff_exact;
  std::optional<double> abs_dev;
};

struct ScanReport {
  std::size_t k = 0;
  std::size_t n_min = 2;
  std::size_t n_max = 0;
  std::size_t pair_i = 0;
  std::size_t pair_j = 0;
  std::string base;  // "C4" for k = 2, "Q<k>" otherwise
  Rational limit;    // 1/2^k
  EvalMode mode = EvalMode::exact;
  std::vector<ScanRow> rows;
};

/// The base graph of the tower U_n = P_n □ base: the 4-cycle b1 b2 b3 b4
/// for k = 2 (so U_n is the block tower), the hypercube Q_k otherwise.
ResistorNetwork tower_base(std::size_t k);
/// 1-based index of the vertex antipodal to b1 in tower_base(k).
std::size_t tower_antipode(std::size_t k);

/// Throws BudgetExceeded when n_max * 2^k exceeds the vertex budget.
ScanReport conjecture_scan(const ScanOptions& options);

struct DiameterDeltaRow {
  std::size_t n = 0;
  Rational diameter;
  std::size_t pair_count = 0;
  /// The tie set is exactly the four (a1, b_p)-(an, b_{p+2}) corner pairs.
  bool corner_pairs = false;
  std::optional<Rational> delta;           // D_r(G_n) - D_r(G_{n-1})
  std::optional<Rational> endpoint_delta;  // the same difference for the corner pair
};

struct DiameterDeltaReport {
  std::vector<DiameterDeltaRow> rows;
  /// delta == endpoint_delta on every row that has one.
  bool matches_endpoint_scan = true;
};

/// D_r(G_n) for n = 2..n_max with consecutive differences, checked row by
/// row against the corner-pair scan.
DiameterDeltaReport diameter_delta_scan(std::size_t n_max, std::size_t vertex_budget = kDefaultVertexBudget,
                                        std::size_t jobs = 1);

}  // namespace resnet
