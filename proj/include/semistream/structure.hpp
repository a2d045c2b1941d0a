#pragma once

#include <optional>
#include <span>
#include <vector>

#include "semistream/graph.hpp"
#include "semistream/semi_matching.hpp"

namespace semistream {

/// Layered decomposition of a semi-matching: per B vertex, its edges are
/// labeled 1..deg(b) in increasing A-index order and M_i collects label i.
/// The induced sets follow A_1 = A(S), B_1 = B and, for i > 1,
/// A_i = A(S) \ ⋃_{j<i} A(M_j), B_i = B(M_{i-1}).
struct Decomposition {
  std::vector<std::vector<Edge>> layers;  // M_1 .. M_d, d = degmax S
  std::vector<std::vector<int>> a_sets;   // A_i, sorted
  std::vector<std::vector<int>> b_sets;   // B_i, sorted
};

Decomposition decompose(const BipartiteGraph& g, const SemiMatching& s);

/// Per-layer maximality report: ok iff no edge of g inside A_i x B_i can
/// extend M_i. Always passes for semi2 / optimal inputs.
struct MaximalLayerCheck {
  int layer = 0;  // 1-based
  bool ok = true;
  std::optional<Edge> witness;  // an extending edge when !ok
};
std::vector<MaximalLayerCheck> verify_maximal_layers(const BipartiteGraph& g,
                                                     const Decomposition& dec);

/// Per-layer maximum check: ok iff |M_i| equals the exact maximum matching
/// size of g restricted to A_i x B_i. Always passes for optimal inputs.
struct MaximumLayerCheck {
  int layer = 0;
  bool ok = true;
  int layer_size = 0;
  int maximum_size = 0;
};
std::vector<MaximumLayerCheck> verify_maximum_layers(const BipartiteGraph& g,
                                                     const Decomposition& dec);

/// degmax semi2 vs ceil(log2(n + 1)) * degmax optimal on the full graph.
struct LogBoundReport {
  int semi2_degmax = 0;
  int optimal_degmax = 0;
  double ratio = 0.0;
  int bound_factor = 0;  // ceil(log2(n + 1))
  bool ok = false;
};
LogBoundReport check_log_bound(const BipartiteGraph& g);

/// Split driven by the first d* layers of decompose(S) for a semi2 result S
/// over active_a: A'' collects the vertices they match. Verifies
/// |A''| >= |A'| / 2, degmax S|_{A'' x B} <= d*, and that the residual
/// restriction admits no length-2 degree-minimizing path.
struct HalfSplit {
  std::vector<int> matched_half;  // A''
  SemiMatching restricted;        // S restricted to A''
  SemiMatching residual;          // S restricted to A' \ A''
  int d_star = 0;
  bool half_ok = false;
  bool degmax_ok = false;
  bool residual_semi2_ok = false;
};
HalfSplit half_matched_split(const BipartiteGraph& g, const SemiMatching& semi2_result,
                             std::span<const int> active_a);

}  // namespace semistream
