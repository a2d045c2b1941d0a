#include "semistream/structure.hpp"

#include <algorithm>
#include <numeric>

#include "semistream/errors.hpp"
#include "semistream/exact.hpp"
#include "semistream/util.hpp"

namespace semistream {
namespace {

// Kuhn's augmenting-path maximum matching on g restricted to amask x bmask.
int max_matching_size(const BipartiteGraph& g, const std::vector<char>& amask,
                      const std::vector<char>& bmask) {
  std::vector<int> match_b(static_cast<std::size_t>(g.num_b()), -1);
  std::vector<char> visited(static_cast<std::size_t>(g.num_b()), 0);
  int size = 0;

  auto try_augment = [&](auto&& self, int a) -> bool {
    for (const auto& [b, id] : g.sorted_adj_a(a)) {
      if (!bmask[static_cast<std::size_t>(b)] || visited[static_cast<std::size_t>(b)]) continue;
      visited[static_cast<std::size_t>(b)] = 1;
      if (match_b[static_cast<std::size_t>(b)] < 0 ||
          self(self, match_b[static_cast<std::size_t>(b)])) {
        match_b[static_cast<std::size_t>(b)] = a;
        return true;
      }
    }
    return false;
  };

  for (int a = 0; a < g.num_a(); ++a) {
    if (!amask[static_cast<std::size_t>(a)]) continue;
    std::fill(visited.begin(), visited.end(), 0);
    if (try_augment(try_augment, a)) ++size;
  }
  return size;
}

}  // namespace

Decomposition decompose(const BipartiteGraph& g, const SemiMatching& s) {
  if (s.num_a() != g.num_a() || s.num_b() != g.num_b()) {
    throw ArgumentError("semi-matching does not match graph dimensions");
  }
  Decomposition dec;
  const int d = s.degmax();
  dec.layers.resize(static_cast<std::size_t>(d));
  // Label each b's edges 1..deg(b) in increasing a order.
  std::vector<int> next_label(static_cast<std::size_t>(g.num_b()), 0);
  for (int a = 0; a < g.num_a(); ++a) {
    if (!s.covers(a)) continue;
    int b = s.matched_b(a);
    int label = next_label[static_cast<std::size_t>(b)]++;
    dec.layers[static_cast<std::size_t>(label)].push_back(Edge{a, b});
  }

  dec.a_sets.resize(static_cast<std::size_t>(d));
  dec.b_sets.resize(static_cast<std::size_t>(d));
  std::vector<char> remaining(static_cast<std::size_t>(g.num_a()), 0);
  for (int a = 0; a < g.num_a(); ++a) remaining[static_cast<std::size_t>(a)] = s.covers(a);
  for (int i = 0; i < d; ++i) {
    auto& a_set = dec.a_sets[static_cast<std::size_t>(i)];
    for (int a = 0; a < g.num_a(); ++a) {
      if (remaining[static_cast<std::size_t>(a)]) a_set.push_back(a);
    }
    auto& b_set = dec.b_sets[static_cast<std::size_t>(i)];
    if (i == 0) {
      b_set.resize(static_cast<std::size_t>(g.num_b()));
      std::iota(b_set.begin(), b_set.end(), 0);
    } else {
      for (const Edge& e : dec.layers[static_cast<std::size_t>(i - 1)]) b_set.push_back(e.b);
      std::sort(b_set.begin(), b_set.end());
    }
    for (const Edge& e : dec.layers[static_cast<std::size_t>(i)]) {
      remaining[static_cast<std::size_t>(e.a)] = 0;
    }
  }
  return dec;
}

std::vector<MaximalLayerCheck> verify_maximal_layers(const BipartiteGraph& g,
                                                     const Decomposition& dec) {
  std::vector<MaximalLayerCheck> report;
  for (std::size_t i = 0; i < dec.layers.size(); ++i) {
    MaximalLayerCheck check;
    check.layer = static_cast<int>(i) + 1;
    std::vector<char> amask(static_cast<std::size_t>(g.num_a()), 0);
    std::vector<char> bmask(static_cast<std::size_t>(g.num_b()), 0);
    for (int a : dec.a_sets[i]) amask[static_cast<std::size_t>(a)] = 1;
    for (int b : dec.b_sets[i]) bmask[static_cast<std::size_t>(b)] = 1;
    std::vector<char> a_used(static_cast<std::size_t>(g.num_a()), 0);
    std::vector<char> b_used(static_cast<std::size_t>(g.num_b()), 0);
    for (const Edge& e : dec.layers[i]) {
      a_used[static_cast<std::size_t>(e.a)] = 1;
      b_used[static_cast<std::size_t>(e.b)] = 1;
    }
    for (const Edge& e : g.edges()) {
      if (amask[static_cast<std::size_t>(e.a)] && bmask[static_cast<std::size_t>(e.b)] &&
          !a_used[static_cast<std::size_t>(e.a)] && !b_used[static_cast<std::size_t>(e.b)]) {
        check.ok = false;
        check.witness = e;
        break;
      }
    }
    report.push_back(check);
  }
  return report;
}

std::vector<MaximumLayerCheck> verify_maximum_layers(const BipartiteGraph& g,
                                                     const Decomposition& dec) {
  std::vector<MaximumLayerCheck> report;
  for (std::size_t i = 0; i < dec.layers.size(); ++i) {
    MaximumLayerCheck check;
    check.layer = static_cast<int>(i) + 1;
    check.layer_size = static_cast<int>(dec.layers[i].size());
    std::vector<char> amask(static_cast<std::size_t>(g.num_a()), 0);
    std::vector<char> bmask(static_cast<std::size_t>(g.num_b()), 0);
    for (int a : dec.a_sets[i]) amask[static_cast<std::size_t>(a)] = 1;
    for (int b : dec.b_sets[i]) bmask[static_cast<std::size_t>(b)] = 1;
    check.maximum_size = max_matching_size(g, amask, bmask);
    check.ok = check.layer_size == check.maximum_size;
    report.push_back(check);
  }
  return report;
}

LogBoundReport check_log_bound(const BipartiteGraph& g) {
  LogBoundReport report;
  report.optimal_degmax = optimal_semi(g).degmax();
  report.semi2_degmax = semi2(g).degmax();
  report.bound_factor = ceil_log2(g.num_a() + 1);
  report.ratio = report.optimal_degmax == 0
                     ? 0.0
                     : static_cast<double>(report.semi2_degmax) / report.optimal_degmax;
  report.ok = report.semi2_degmax <=
              static_cast<long long>(report.bound_factor) * report.optimal_degmax;
  return report;
}

HalfSplit half_matched_split(const BipartiteGraph& g, const SemiMatching& semi2_result,
                             std::span<const int> active_a) {
  std::vector<char> active(static_cast<std::size_t>(g.num_a()), 0);
  int active_count = 0;
  for (int a : active_a) {
    if (a < 0 || a >= g.num_a()) throw ArgumentError("active vertex out of range");
    if (!active[static_cast<std::size_t>(a)]) {
      active[static_cast<std::size_t>(a)] = 1;
      ++active_count;
    }
  }
  for (int a = 0; a < g.num_a(); ++a) {
    if (active[static_cast<std::size_t>(a)] != (semi2_result.covers(a) ? 1 : 0)) {
      throw ArgumentError("semi-matching domain must equal the active subset");
    }
  }

  const int d_star = optimal_semi(g, active_a).degmax();
  Decomposition dec = decompose(g, semi2_result);

  std::vector<char> in_half(static_cast<std::size_t>(g.num_a()), 0);
  for (int i = 0; i < d_star && i < static_cast<int>(dec.layers.size()); ++i) {
    for (const Edge& e : dec.layers[static_cast<std::size_t>(i)]) {
      in_half[static_cast<std::size_t>(e.a)] = 1;
    }
  }

  HalfSplit split{.matched_half = {},
                  .restricted = SemiMatching(g, std::vector<int>(
                                                    static_cast<std::size_t>(g.num_a()), -1)),
                  .residual = SemiMatching(g, std::vector<int>(
                                                  static_cast<std::size_t>(g.num_a()), -1)),
                  .d_star = d_star,
                  .half_ok = false,
                  .degmax_ok = false,
                  .residual_semi2_ok = false};

  std::vector<int> kept(static_cast<std::size_t>(g.num_a()), -1);
  std::vector<int> rest(static_cast<std::size_t>(g.num_a()), -1);
  for (int a = 0; a < g.num_a(); ++a) {
    if (!semi2_result.covers(a)) continue;
    if (in_half[static_cast<std::size_t>(a)]) {
      split.matched_half.push_back(a);
      kept[static_cast<std::size_t>(a)] = semi2_result.matched_b(a);
    } else {
      rest[static_cast<std::size_t>(a)] = semi2_result.matched_b(a);
    }
  }
  split.restricted = SemiMatching(g, std::move(kept));
  split.residual = SemiMatching(g, std::move(rest));

  split.half_ok = 2 * static_cast<int>(split.matched_half.size()) >= active_count;
  split.degmax_ok = split.restricted.degmax() <= d_star;

  split.residual_semi2_ok = true;
  for (int a = 0; a < g.num_a(); ++a) {
    if (!split.residual.covers(a)) continue;
    int cur = split.residual.matched_b(a);
    for (const auto& [b, id] : g.sorted_adj_a(a)) {
      if (split.residual.degree_of_b(cur) > split.residual.degree_of_b(b) + 1) {
        split.residual_semi2_ok = false;
        break;
      }
    }
    if (!split.residual_semi2_ok) break;
  }
  return split;
}

}  // namespace semistream
