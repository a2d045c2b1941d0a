#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semistream/graph.hpp"
#include "semistream/semi_matching.hpp"

namespace semistream {

enum class SkeletonKind { Sqrt, CubeRoot, Custom };

std::string skeleton_kind_name(SkeletonKind kind);
SkeletonKind parse_skeleton_kind(std::string_view name);

/// An edge subset sent as a one-way message: the sqrt kind (an optimal
/// semi-matching, <= n edges) is an O(sqrt(n))-skeleton; the cuberoot kind
/// adds one more optimal semi-matching per matched-fiber (<= 2n edges) and is
/// an O(n^(1/3))-skeleton.
struct Skeleton {
  SkeletonKind kind;
  EdgeSubset edges;
};

/// Edges of optimal_semi(g, A). For every A':
///   degmax semi(A', B, S) < sqrt(n) * sqrt(degmax semi(A', B, E)) + 1.
Skeleton sqrt_skeleton(const BipartiteGraph& g);

/// S ∪ ⋃_{b in B(S)} semi(Γ_S(b), B, E) with S = optimal_semi(g, A).
/// For every A': degmax semi(A', B, ·) <= ceil(2 n^(1/3) degmax semi(A', B, E)).
Skeleton cuberoot_skeleton(const BipartiteGraph& g);

struct QualityResult {
  std::vector<int> worst_subset;  // A' maximizing the ratio
  int degmax_skeleton = 0;        // degmax semi(A', B, S)
  int degmax_full = 0;            // degmax semi(A', B, E)
  double ratio = 0.0;
};

/// Enumerates every non-empty A' (guard: n <= 16) and returns the worst
/// ratio. Exact comparison via cross-multiplication.
QualityResult skeleton_quality_exact(const BipartiteGraph& g, const Skeleton& skeleton);

/// Local-search lower bound on the worst ratio: seeds from skeleton B-vertex
/// fibers (largest first), hill-climbs by adding/removing single vertices,
/// up to `restart_budget` seeds. Never exceeds the exact worst ratio.
QualityResult skeleton_quality_adversarial(const BipartiteGraph& g, const Skeleton& skeleton,
                                           int restart_budget = 100);

/// One-way two-party protocol transcript. Alice holds E1 and sends the chosen
/// skeleton of (A(E1), B, E1); Bob holds E2 and outputs an optimal
/// semi-matching over skeleton ∪ E2. Message bits are counted both as
/// edges * ceil(log2(2nm)) (explicit edge ids) and as the paper's
/// edges * ceil(log2 m).
struct ProtocolTranscript {
  int alice_edges = 0;
  long long message_bits = 0;
  long long paper_message_bits = 0;
  SemiMatching bob_output;
  int bob_degmax = 0;
  int d_star = 0;
  double ratio = 0.0;
  double bound = 0.0;  // sqrt(n) + 2 or 2 n^(1/3) + 2
  bool bound_ok = false;
};

/// e1_ids / e2_ids must partition the edge ids of g; no isolated A vertices.
ProtocolTranscript two_party(const BipartiteGraph& g, const std::vector<int>& e1_ids,
                             const std::vector<int>& e2_ids, SkeletonKind kind);

struct ProbeResult {
  std::vector<int> witness;  // A', sorted, |A'| <= |B|
  int degmax = 0;            // degmax semi(A', B, skeleton_edges)
};

/// Witness search behind the skeleton lower bound: the parent of
/// skeleton_edges must be the complete graph K_{n,m} with
/// m = lower_bound_side_size(n, c, eps), and |skeleton_edges| <= c n.
/// When every deg(a) <= c the search is exact over the neighborhood classes
/// A_{i_1..i_c} of the proof; otherwise a fiber-seeded local search runs.
/// A vertices isolated in the skeleton are never added to a witness.
ProbeResult hard_instance_probe(int c, double eps, const EdgeSubset& skeleton_edges);

}  // namespace semistream
