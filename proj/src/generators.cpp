#include "semistream/generators.hpp"

#include <cmath>
#include <random>
#include <string>

#include "semistream/errors.hpp"
#include "semistream/rng.hpp"

namespace semistream {
namespace {

void require_positive(int n, int m) {
  if (n < 1 || m < 1) {
    throw ArgumentError("vertex counts must be >= 1, got n=" + std::to_string(n) +
                        ", m=" + std::to_string(m));
  }
}

}  // namespace

BipartiteGraph make_complete(int n, int m) {
  require_positive(n, m);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(m));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < m; ++b) edges.push_back(Edge{a, b});
  }
  return BipartiteGraph(n, m, std::move(edges));
}

BipartiteGraph make_random(int n, int m, double p, std::uint64_t seed) {
  require_positive(n, m);
  if (p < 0.0 || p > 1.0) throw ArgumentError("edge probability must be in [0, 1]");
  std::mt19937_64 gen(seed);
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < m; ++b) {
      if (rng::chance(gen, p)) edges.push_back(Edge{a, b});
    }
  }
  return BipartiteGraph(n, m, std::move(edges));
}

int lower_bound_side_size(int n, int c, double eps) {
  if (n < 1 || c < 1 || eps < 0.0) {
    throw ArgumentError("need n >= 1, c >= 1, eps >= 0");
  }
  double size;
  if (eps == 0.0) {
    double cf = std::exp(std::lgamma(static_cast<double>(c) + 1.0));
    size = std::pow(cf, 1.0 / (c + 1)) * std::pow(static_cast<double>(n), 1.0 / (c + 1));
  } else {
    double cp = (1.0 + eps) * c;
    double cf = std::exp(std::lgamma(cp + 1.0));
    double scaled_n = eps / (1.0 + eps) * static_cast<double>(n);
    size = std::pow(cf, 1.0 / (cp + 1.0)) * std::pow(scaled_n, 1.0 / (cp + 1.0));
  }
  int m = static_cast<int>(std::floor(size + 1e-9));
  return m < 1 ? 1 : m;
}

BipartiteGraph make_hard_g1(int n, int c, double eps, std::uint64_t seed) {
  int m = lower_bound_side_size(n, c, eps);
  std::mt19937_64 gen(seed);
  std::vector<std::vector<int>> bits(static_cast<std::size_t>(n),
                                     std::vector<int>(static_cast<std::size_t>(m), 0));
  for (auto& row : bits) {
    for (int& bit : row) bit = static_cast<int>(gen() & 1u);
  }
  return make_hard_g1_from_bits(bits);
}

BipartiteGraph make_hard_g1_from_bits(const std::vector<std::vector<int>>& bits) {
  int n = static_cast<int>(bits.size());
  if (n < 1) throw ArgumentError("bit matrix must have at least one row");
  int m = static_cast<int>(bits.front().size());
  if (m < 1) throw ArgumentError("bit matrix must have at least one column");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(m));
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(bits[static_cast<std::size_t>(i)].size()) != m) {
      throw ArgumentError("ragged bit matrix");
    }
    for (int j = 0; j < m; ++j) {
      int bit = bits[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (bit != 0 && bit != 1) throw ArgumentError("bit matrix entries must be 0 or 1");
      edges.push_back(Edge{i, bit == 0 ? j : m + j});
    }
  }
  return BipartiteGraph(n, 2 * m, std::move(edges));
}

BipartiteGraph make_matching_g2(int n, std::span<const int> a_subset) {
  require_positive(n, n);
  std::vector<Edge> edges;
  edges.reserve(a_subset.size());
  for (int a : a_subset) {
    if (a < 0 || a >= n) throw ArgumentError("subset vertex " + std::to_string(a) + " out of range");
    edges.push_back(Edge{a, a});
  }
  return BipartiteGraph(n, n, std::move(edges));
}

}  // namespace semistream
