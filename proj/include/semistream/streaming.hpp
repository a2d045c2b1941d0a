#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "semistream/graph.hpp"
#include "semistream/semi_matching.hpp"
#include "semistream/stream.hpp"

namespace semistream {

/// Space and pass accounting for the streaming algorithms.
///
/// peak_edges counts every edge simultaneously retained across S1, E', carried
/// partial outputs and S2; for drivers running several parallel instances it
/// is the sum of the per-instance peaks. passes counts full stream replays.
struct SpaceLedger {
  std::size_t peak_edges = 0;
  int passes = 0;
  long long s = -1;
  int d = -1;
  int p = -1;
  double eps = std::nan("");
  long long k = -1;

  void note(std::size_t current) {
    if (current > peak_edges) peak_edges = current;
  }
};

/// One invocation of the one-pass INCOMPLETE(G, s, d) subroutine restricted to
/// the active A subset. Exposes the internal sets for post-hoc fidelity
/// checks: s1 and s2 are d-bounded, eprime keeps at most k = floor(s / |A'|)
/// edges per A vertex, and the combined result is 2d-bounded.
struct IncompletePassResult {
  IncompleteSemiMatching result;  // S1 ∪ S2, cap 2d
  IncompleteSemiMatching s1;
  IncompleteSemiMatching s2;
  std::vector<int> eprime;  // edge ids kept, in arrival order
  long long k = 0;
  SpaceLedger ledger;
};

/// Requires s >= |A'| and d >= 1. Edges outside A' x B are skipped. An empty
/// active subset yields an empty result after one pass.
IncompletePassResult incomplete_pass(const EdgeStream& stream, std::span<const int> active_a,
                                     long long s, int d);

/// ASEMI(G, s, d, p): repeats incomplete_pass on the yet-unmatched A vertices
/// at most p times or until everyone is matched. Output is 2dp-bounded.
struct AsemiResult {
  IncompleteSemiMatching result;
  SpaceLedger ledger;
};
AsemiResult asemi(const EdgeStream& stream, long long s, int d, int p);

/// Result of the one-pass / multipass wrappers: a complete semi-matching of
/// minimal degmax among the parallel instances that completed (ties: smallest
/// instance index).
struct StreamSolveResult {
  SemiMatching semi;
  SpaceLedger ledger;
  int chosen_instance = -1;
  int chosen_cap = -1;
};

/// One pass, space O~(n^(1+eps)): runs ceil(log2 n) + 1 instances of
/// asemi(., ceil(n^(1+eps)), ceil(n^((1-eps)/2)) * 2^i, 1) over a single
/// shared pass and returns the best complete candidate. Guarantees
/// degmax <= 4 n^((1-eps)/2) d*. Requires 0 <= eps <= 1 and no isolated
/// A vertices.
StreamSolveResult one_pass_semi(const EdgeStream& stream, double eps);

/// max(1, ceil(log2 n)) passes, space O~(n): instances
/// asemi(., n, 2^i, ceil(log2 n)) share each pass; the best complete
/// candidate satisfies degmax <= 4 ceil(log2 n) d*.
StreamSolveResult multipass_semi(const EdgeStream& stream);

/// Online greedy for vertex-arrival streams: each A vertex is irrevocably
/// matched to a lowest-degree neighbor when its block ends (ties: lowest b).
/// degmax <= ceil(log2(n + 1)) d*. Throws StreamOrderError if the edges of
/// some A vertex do not arrive contiguously.
SemiMatching online_greedy(const EdgeStream& stream);

/// Documented constant for the space accounting checks:
/// one_pass_semi peak_edges <= C n^(1+eps) (ceil(log2 n) + 1) and
/// multipass_semi peak_edges <= C n (ceil(log2 n) + 1).
inline constexpr int kSpaceConstant = 8;

}  // namespace semistream
