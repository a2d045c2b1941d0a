#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "semistream/graph.hpp"

namespace semistream {

/// Complete bipartite graph K_{n,m}.
BipartiteGraph make_complete(int n, int m);

/// Each of the n*m candidate edges present independently with probability p.
BipartiteGraph make_random(int n, int m, double p, std::uint64_t seed);

/// B-side size used by the lower-bound instances: for eps == 0 this is
/// floor((c!)^{1/(c+1)} * n^{1/(c+1)}), and for eps > 0 it is
/// floor((c'!)^{1/(c'+1)} * (eps/(1+eps) * n)^{1/(c'+1)}) with c' = (1+eps)c.
/// The result is clamped to >= 1; non-integer c' goes through the gamma
/// function. Flooring only weakens the lower-bound direction.
int lower_bound_side_size(int n, int c, double eps);

/// Hard instance family G1(x): A of size n, B = B0 ∪ B1 with
/// |B0| = |B1| = m = lower_bound_side_size(n, c, eps). For every (i, j)
/// exactly one of (a_i, b0_j), (a_i, b1_j) is present, chosen by the bit
/// x[i][j]. B0 occupies B indices [0, m) and B1 occupies [m, 2m).
BipartiteGraph make_hard_g1(int n, int c, double eps, std::uint64_t seed);

/// Same construction from an explicit n x m bit matrix.
BipartiteGraph make_hard_g1_from_bits(const std::vector<std::vector<int>>& bits);

/// G2(A') family: graph on A (size n) and C (size n) containing the matching
/// {(a, c_a) : a in a_subset}. "Arbitrary matching" fixed to the identity.
BipartiteGraph make_matching_g2(int n, std::span<const int> a_subset);

}  // namespace semistream
