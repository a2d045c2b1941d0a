#pragma once

#include <optional>
#include <span>
#include <vector>

#include "semistream/graph.hpp"
#include "semistream/semi_matching.hpp"

namespace semistream {

/// Optimal semi-matching over the active subset (default: all of A): the
/// result admits no degree-minimizing path of any length, which makes it
/// simultaneously optimal for degmax and for the total completion cost.
///
/// Strategy: greedy min-degree initialization, then repeated elimination of
/// degree-minimizing paths found by alternating BFS from the highest-degree
/// B vertices (ties broken by lowest index). Each flip strictly reduces
/// sum_b deg(deg+1)/2, so the loop terminates.
///
/// Throws IsolatedVertexError if some active a has no neighbor.
SemiMatching optimal_semi(const BipartiteGraph& g);
SemiMatching optimal_semi(const BipartiteGraph& g, std::span<const int> active_a);

/// A semi-matching admitting no length-2 degree-minimizing path: there is no
/// edge ab with deg_S(S(a)) > deg_S(b) + 1. Need not be optimal.
SemiMatching semi2(const BipartiteGraph& g);
SemiMatching semi2(const BipartiteGraph& g, std::span<const int> active_a);

/// Some valid degree-minimizing path if one exists (shortest over all start
/// vertices, ties toward higher start degree then lower index), or nullopt.
/// Absence certifies that `s` is optimal.
std::optional<DegMinPath> find_deg_min_path(const BipartiteGraph& g, const SemiMatching& s);

/// Flips the path: deg(b_1) drops by one, deg(b_k) rises by one, all other
/// degrees stay. Throws InvalidPathError if the path fails validation.
SemiMatching apply_path(const BipartiteGraph& g, const SemiMatching& s, const DegMinPath& path);

/// Maximum-size incomplete d-bounded semi-matching over the active subset,
/// computed exactly via a max-flow reduction with B-side capacities d.
/// d == 0 yields the empty assignment. The EdgeSubset overload restricts the
/// usable edges to the subset.
IncompleteSemiMatching isemi_max(const BipartiteGraph& g, std::span<const int> active_a, int d);
IncompleteSemiMatching isemi_max(const EdgeSubset& edges, std::span<const int> active_a, int d);

enum class ExpansionMode { Auto, Enumerate, ParametricFlow };

/// A subset A'' of minimal expansion |Γ(A'')| / |A''|, together with the
/// exact rational value. By the expansion duality, the optimal semi-matching
/// degmax on the same instance equals ceil(1 / alpha).
struct Expansion {
  std::vector<int> subset;    // A'', sorted ascending
  int neighborhood_size = 0;  // |Γ(A'')|

  double alpha() const {
    return subset.empty() ? 0.0
                          : static_cast<double>(neighborhood_size) /
                                static_cast<double>(subset.size());
  }
  /// ceil(|A''| / |Γ(A'')|) = degmax of an optimal semi-matching.
  int implied_degmax() const;
};

/// Exact minimal expansion. Auto mode enumerates all subsets for |A'| <= 20
/// and otherwise runs Dinkelbach-style parametric min-cuts (still exact).
/// Enumerate mode beyond the guard throws GuardExceededError.
Expansion min_expansion(const BipartiteGraph& g, std::span<const int> active_a,
                        ExpansionMode mode = ExpansionMode::Auto);
Expansion min_expansion(const BipartiteGraph& g, ExpansionMode mode = ExpansionMode::Auto);

/// Exhaustive oracle: enumerates every semi-matching over the active subset
/// and returns the one with lexicographically minimal sorted-descending
/// degree profile (ties: lexicographically minimal assignment). Guarded by
/// prod_a deg(a) <= 10^7; throws GuardExceededError beyond it.
SemiMatching brute_force_semi(const BipartiteGraph& g);
SemiMatching brute_force_semi(const BipartiteGraph& g, std::span<const int> active_a);

}  // namespace semistream
