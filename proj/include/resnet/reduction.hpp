#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "resnet/network.hpp"
#include "resnet/rational.hpp"

namespace resnet {

/// Vertices that every rewrite must keep, identified by label so that they
/// survive the id compaction that follows vertex removal.
class Terminals {
 public:
  Terminals() = default;
  explicit Terminals(std::vector<std::string> labels);
  static Terminals from_ids(const ResistorNetwork& net, std::span<const VertexId> ids);
  static Terminals all(const ResistorNetwork& net);

  bool contains(std::string_view label) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }
  /// Throws ReductionError if a terminal is missing from `net`.
  void check_subset_of(const ResistorNetwork& net) const;

 private:
  std::vector<std::string> labels_;  // sorted, unique
};

enum class StepKind { series, parallel, delta_y, eliminate_block, substitute_bipartite };
std::string_view to_string(StepKind kind);

struct EdgeRecord {
  std::string u;
  std::string v;
  Rational r;
  bool gadget = false;

  friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

/// One rewrite, described by labels. Replaying removes the listed edges
/// (first matching occurrence each), then the listed vertices, then adds
/// the new vertices and edges.
struct ReductionStep {
  StepKind kind = StepKind::series;
  std::vector<std::string> removed_vertices;
  std::vector<std::string> added_vertices;
  std::vector<EdgeRecord> removed_edges;
  std::vector<EdgeRecord> added_edges;
};

/// Replays `step` on `pre`. Kept vertices and edges retain their relative
/// order; new vertices and edges are appended.
ResistorNetwork apply_step(const ResistorNetwork& pre, const ReductionStep& step);

struct Rewrite {
  ResistorNetwork network;
  ReductionStep step;
};

/// Replaces the two resistors at a non-terminal degree-2 vertex by one of
/// resistance r1 + r2.
Rewrite series_reduce(const ResistorNetwork& net, VertexId mid, const Terminals& terminals);

/// Merges all resistors between u and v into (sum 1/r_i)^-1. Rejects
/// parallel gadget edges whose conductances cancel.
Rewrite parallel_reduce(const ResistorNetwork& net, VertexId u, VertexId v);

/// Replaces triangle (u, v, w) by a star around a new centre. With
/// r1 = r(u,v), r2 = r(v,w), r3 = r(w,u) and S = r1 + r2 + r3 the arms are
///   centre-u: r1 r3 / S,   centre-v: r1 r2 / S,   centre-w: r2 r3 / S,
/// i.e. each arm is the product of the two triangle sides meeting at its
/// corner over the perimeter. An empty label picks a fresh "c<k>".
Rewrite delta_y(const ResistorNetwork& net, std::array<VertexId, 3> triangle,
                std::string center_label = {});

/// Removes a block that contains exactly one cut vertex x and no terminal
/// other than possibly x, keeping x. Picks the eligible block with the
/// smallest non-cut vertex id.
Rewrite eliminate_block(const ResistorNetwork& net, const Terminals& terminals);

/// Replaces the unit-resistance complete bipartite subnetwork on X ∪ Y
/// (|X| = m, |Y| = n) by the star gadget: new x0, y0 with x0-x_i = 1/n,
/// y0-y_j = 1/m and the gadget edge x0-y0 = -1/(mn).
Rewrite substitute_bipartite_star(const ResistorNetwork& net, std::span<const VertexId> x_side,
                                  std::span<const VertexId> y_side, std::string x0_label = {},
                                  std::string y0_label = {});

/// Resistances between every pair of terminals, in sorted label order.
struct CertificateEntry {
  std::string a;
  std::string b;
  Rational r;

  friend bool operator==(const CertificateEntry&, const CertificateEntry&) = default;
};
using CertificateTable = std::vector<CertificateEntry>;
CertificateTable terminal_resistances(const ResistorNetwork& net, const Terminals& terminals);

struct ReductionTrace {
  ResistorNetwork initial;
  Terminals terminals;
  std::vector<ReductionStep> steps;
  ResistorNetwork final_network;
  /// When certified: the table of the initial network followed by one per step.
  std::optional<std::vector<CertificateTable>> certificates;
};

struct ReduceOptions {
  bool certify = false;
  /// Also apply delta-Y to triangles and keep the centres it creates, as in
  /// the fan-to-chain pipeline.
  bool fan_pipeline = false;
  std::size_t max_steps = 100000;
};

struct ReduceResult {
  ReductionTrace trace;
  /// Only terminals remain.
  bool fully_reduced = false;
};

/// Greedy reduction: parallel merges, then series merges, then block
/// elimination, then (fan pipeline only) delta-Y, repeated until nothing
/// applies.
ReduceResult reduce(const ResistorNetwork& net, const Terminals& terminals, const ReduceOptions& options = {});

/// Chain reduction of the fan C^m_{P_{n+1}} with terminals a1, a(n+1), b:
/// delta-Y on (a1, a2, b) creating c1, series through a2, delta-Y on
/// (c1, a3, b) creating c2, ..., ending with c_n. The result is the chain
/// a1 - c1 - ... - c_n with c_n - a(n+1) and c_n - b.
struct FanChain {
  std::size_t n = 0;
  std::size_t m = 0;
  ReductionTrace trace;
  /// r[a1,c1], r[c1,c2], ..., r[c_{n-1},c_n].
  std::vector<Rational> chain;
  /// r[c_i, b] in the network right after c_i is created, i = 1..n.
  std::vector<Rational> center_to_apex;
  /// r[c_n, a(n+1)].
  Rational tail;

  /// R_{C^m_{P_{n+1}}}[a1, a(n+1)].
  Rational endpoint_resistance() const;
  /// R_{C^m_{P_{n+1}}}[a1, b].
  Rational apex_resistance() const;
  /// R_{C^m_{P_n}}[a1, a_n] = 2 R[a1, c_{n-1}].
  Rational shorter_endpoint_resistance() const;
  /// r[c_{n-1}, b] in N_{n-1}; strictly below 1/m^n.
  const Rational& penultimate_apex_arm() const { return center_to_apex.at(n - 2); }
  /// r[c_{n-1}, c_n].
  const Rational& last_link() const { return chain.back(); }
};

FanChain fan_chain_reduce(std::size_t n, std::size_t m, bool certify = false);

}  // namespace resnet
