#include "semistream/skeleton.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "semistream/errors.hpp"
#include "semistream/exact.hpp"
#include "semistream/generators.hpp"
#include "semistream/util.hpp"

namespace semistream {
namespace {

void require_no_isolated(const BipartiteGraph& g) {
  for (int a = 0; a < g.num_a(); ++a) {
    if (g.degree_a(a) == 0) throw IsolatedVertexError(a);
  }
}

}  // namespace

std::string skeleton_kind_name(SkeletonKind kind) {
  switch (kind) {
    case SkeletonKind::Sqrt:
      return "sqrt";
    case SkeletonKind::CubeRoot:
      return "cuberoot";
    case SkeletonKind::Custom:
      return "custom";
  }
  return "?";
}

SkeletonKind parse_skeleton_kind(std::string_view name) {
  if (name == "sqrt") return SkeletonKind::Sqrt;
  if (name == "cuberoot") return SkeletonKind::CubeRoot;
  if (name == "custom") return SkeletonKind::Custom;
  throw ArgumentError("unknown skeleton kind: " + std::string(name));
}

Skeleton sqrt_skeleton(const BipartiteGraph& g) {
  require_no_isolated(g);
  SemiMatching s = optimal_semi(g);
  return Skeleton{SkeletonKind::Sqrt, EdgeSubset(g, s.edge_ids_in(g))};
}

Skeleton cuberoot_skeleton(const BipartiteGraph& g) {
  require_no_isolated(g);
  SemiMatching s = optimal_semi(g);
  std::vector<int> ids = s.edge_ids_in(g);
  std::vector<std::vector<int>> fibers(static_cast<std::size_t>(g.num_b()));
  for (int a = 0; a < g.num_a(); ++a) {
    if (s.covers(a)) fibers[static_cast<std::size_t>(s.matched_b(a))].push_back(a);
  }
  for (int b = 0; b < g.num_b(); ++b) {
    const auto& fiber = fibers[static_cast<std::size_t>(b)];
    if (fiber.empty()) continue;
    SemiMatching sb = optimal_semi(g, fiber);
    std::vector<int> extra = sb.edge_ids_in(g);
    ids.insert(ids.end(), extra.begin(), extra.end());
  }
  return Skeleton{SkeletonKind::CubeRoot, EdgeSubset(g, std::move(ids))};
}

namespace {

// degmax of an optimal semi-matching of (subset, B, skeleton-graph); the
// skeleton must give every subset vertex a neighbor.
int degmax_over(const BipartiteGraph& graph, const std::vector<int>& subset) {
  return optimal_semi(graph, subset).degmax();
}

QualityResult better_of(QualityResult best, QualityResult cand) {
  // compare cand.ratio > best.ratio exactly: ds * bf > bs * df
  long long lhs = static_cast<long long>(cand.degmax_skeleton) * best.degmax_full;
  long long rhs = static_cast<long long>(best.degmax_skeleton) * cand.degmax_full;
  return lhs > rhs ? cand : best;
}

}  // namespace

QualityResult skeleton_quality_exact(const BipartiteGraph& g, const Skeleton& skeleton) {
  const int n = g.num_a();
  if (n > 16) {
    throw GuardExceededError("exact skeleton quality limited to n <= 16, got n=" +
                             std::to_string(n));
  }
  require_no_isolated(g);
  BipartiteGraph sgraph = skeleton.edges.to_graph();
  for (int a = 0; a < n; ++a) {
    if (sgraph.degree_a(a) == 0) throw IsolatedVertexError(a);
  }
  QualityResult best;
  best.degmax_full = 1;  // identity for the cross-multiplied comparison
  std::vector<int> subset;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    subset.clear();
    for (int a = 0; a < n; ++a) {
      if (mask & (1u << a)) subset.push_back(a);
    }
    QualityResult cand;
    cand.worst_subset = subset;
    cand.degmax_skeleton = degmax_over(sgraph, subset);
    cand.degmax_full = degmax_over(g, subset);
    best = better_of(std::move(best), std::move(cand));
  }
  best.ratio = static_cast<double>(best.degmax_skeleton) / best.degmax_full;
  return best;
}

QualityResult skeleton_quality_adversarial(const BipartiteGraph& g, const Skeleton& skeleton,
                                           int restart_budget) {
  require_no_isolated(g);
  BipartiteGraph sgraph = skeleton.edges.to_graph();
  const int n = g.num_a();

  std::vector<char> usable(static_cast<std::size_t>(n), 0);
  for (int a = 0; a < n; ++a) usable[static_cast<std::size_t>(a)] = sgraph.degree_a(a) > 0;

  auto evaluate = [&](const std::vector<int>& subset) {
    QualityResult r;
    r.worst_subset = subset;
    r.degmax_skeleton = degmax_over(sgraph, subset);
    r.degmax_full = degmax_over(g, subset);
    return r;
  };

  // Seeds: skeleton B-fibers, largest first.
  std::vector<std::vector<int>> fibers(static_cast<std::size_t>(g.num_b()));
  for (int id : skeleton.edges.ids()) {
    const Edge& e = g.edge(id);
    fibers[static_cast<std::size_t>(e.b)].push_back(e.a);
  }
  std::vector<int> seed_order;
  for (int b = 0; b < g.num_b(); ++b) {
    if (!fibers[static_cast<std::size_t>(b)].empty()) seed_order.push_back(b);
  }
  std::sort(seed_order.begin(), seed_order.end(), [&fibers](int x, int y) {
    auto sx = fibers[static_cast<std::size_t>(x)].size();
    auto sy = fibers[static_cast<std::size_t>(y)].size();
    if (sx != sy) return sx > sy;
    return x < y;
  });
  if (static_cast<int>(seed_order.size()) > restart_budget) {
    seed_order.resize(static_cast<std::size_t>(restart_budget));
  }

  QualityResult best;
  best.degmax_full = 1;
  bool have_any = false;
  constexpr int kMaxClimbSteps = 50;

  for (int b : seed_order) {
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    std::vector<int> subset;
    for (int a : fibers[static_cast<std::size_t>(b)]) {
      if (usable[static_cast<std::size_t>(a)] && !in[static_cast<std::size_t>(a)]) {
        in[static_cast<std::size_t>(a)] = 1;
        subset.push_back(a);
      }
    }
    if (subset.empty()) continue;
    std::sort(subset.begin(), subset.end());
    QualityResult cur = evaluate(subset);
    for (int step = 0; step < kMaxClimbSteps; ++step) {
      bool improved = false;
      for (int a = 0; a < n && !improved; ++a) {
        if (!in[static_cast<std::size_t>(a)]) {
          if (!usable[static_cast<std::size_t>(a)]) continue;
          std::vector<int> trial = subset;
          trial.insert(std::lower_bound(trial.begin(), trial.end(), a), a);
          QualityResult cand = evaluate(trial);
          if (static_cast<long long>(cand.degmax_skeleton) * cur.degmax_full >
              static_cast<long long>(cur.degmax_skeleton) * cand.degmax_full) {
            cur = cand;
            subset = std::move(trial);
            in[static_cast<std::size_t>(a)] = 1;
            improved = true;
          }
        } else if (subset.size() > 1) {
          std::vector<int> trial;
          trial.reserve(subset.size() - 1);
          for (int x : subset) {
            if (x != a) trial.push_back(x);
          }
          QualityResult cand = evaluate(trial);
          if (static_cast<long long>(cand.degmax_skeleton) * cur.degmax_full >
              static_cast<long long>(cur.degmax_skeleton) * cand.degmax_full) {
            cur = cand;
            subset = std::move(trial);
            in[static_cast<std::size_t>(a)] = 0;
            improved = true;
          }
        }
      }
      if (!improved) break;
    }
    if (!have_any) {
      best = cur;
      have_any = true;
    } else {
      best = better_of(std::move(best), std::move(cur));
    }
  }
  if (!have_any) throw ArgumentError("skeleton has no usable edges");
  best.ratio = static_cast<double>(best.degmax_skeleton) / best.degmax_full;
  return best;
}

ProtocolTranscript two_party(const BipartiteGraph& g, const std::vector<int>& e1_ids,
                             const std::vector<int>& e2_ids, SkeletonKind kind) {
  require_no_isolated(g);
  // Validate the partition.
  std::vector<int> merged;
  merged.reserve(e1_ids.size() + e2_ids.size());
  merged.insert(merged.end(), e1_ids.begin(), e1_ids.end());
  merged.insert(merged.end(), e2_ids.begin(), e2_ids.end());
  std::sort(merged.begin(), merged.end());
  if (static_cast<int>(merged.size()) != g.num_edges() ||
      std::adjacent_find(merged.begin(), merged.end()) != merged.end() ||
      (!merged.empty() && (merged.front() != 0 || merged.back() != g.num_edges() - 1))) {
    throw ArgumentError("e1 and e2 must partition the edge set");
  }

  const int n = g.num_a();
  const int m = g.num_b();

  // Alice: skeleton of (A(E1), B, E1).
  std::vector<int> message_ids;
  if (!e1_ids.empty()) {
    EdgeSubset e1(g, e1_ids);
    BipartiteGraph g1 = e1.to_graph();
    std::vector<int> alice_active = e1.covered_a();
    SemiMatching s = optimal_semi(g1, alice_active);
    message_ids = s.edge_ids_in(g);
    if (kind == SkeletonKind::CubeRoot) {
      std::vector<std::vector<int>> fibers(static_cast<std::size_t>(m));
      for (int a : alice_active) fibers[static_cast<std::size_t>(s.matched_b(a))].push_back(a);
      for (int b = 0; b < m; ++b) {
        const auto& fiber = fibers[static_cast<std::size_t>(b)];
        if (fiber.empty()) continue;
        std::vector<int> extra = optimal_semi(g1, fiber).edge_ids_in(g);
        message_ids.insert(message_ids.end(), extra.begin(), extra.end());
      }
    }
    std::sort(message_ids.begin(), message_ids.end());
    message_ids.erase(std::unique(message_ids.begin(), message_ids.end()), message_ids.end());
  }

  // Bob: optimal semi-matching over skeleton ∪ E2.
  std::vector<int> bob_ids = message_ids;
  bob_ids.insert(bob_ids.end(), e2_ids.begin(), e2_ids.end());
  BipartiteGraph bob_graph = EdgeSubset(g, std::move(bob_ids)).to_graph();
  for (int a = 0; a < n; ++a) {
    if (bob_graph.degree_a(a) == 0) {
      throw IsolatedVertexError(a);  // defensive; impossible when preconditions hold
    }
  }
  SemiMatching bob = optimal_semi(bob_graph);
  int d_star = optimal_semi(g).degmax();

  ProtocolTranscript t{.alice_edges = static_cast<int>(message_ids.size()),
                       .message_bits = 0,
                       .paper_message_bits = 0,
                       .bob_output = bob,
                       .bob_degmax = bob.degmax(),
                       .d_star = d_star,
                       .ratio = static_cast<double>(bob.degmax()) / d_star,
                       .bound = 0.0,
                       .bound_ok = false};
  t.message_bits = static_cast<long long>(t.alice_edges) *
                   ceil_log2(2LL * static_cast<long long>(n) * m);
  t.paper_message_bits = static_cast<long long>(t.alice_edges) * ceil_log2(m);

  // Exact integer check of degmax <= (root + 2) d*.
  long long excess = static_cast<long long>(t.bob_degmax) - 2LL * d_star;
  if (kind == SkeletonKind::CubeRoot) {
    t.bound = 2.0 * std::cbrt(static_cast<double>(n)) + 2.0;
    t.bound_ok = excess <= 0 || excess * excess * excess <=
                                   8LL * n * d_star * d_star * d_star;
  } else {
    t.bound = std::sqrt(static_cast<double>(n)) + 2.0;
    t.bound_ok = excess <= 0 || excess * excess <= static_cast<long long>(n) * d_star * d_star;
  }
  return t;
}

ProbeResult hard_instance_probe(int c, double eps, const EdgeSubset& skeleton_edges) {
  const BipartiteGraph& g = skeleton_edges.graph();
  const int n = g.num_a();
  const int m = g.num_b();
  if (c < 1 || eps < 0.0) throw ArgumentError("need c >= 1 and eps >= 0");
  if (m != lower_bound_side_size(n, c, eps)) {
    throw ArgumentError("parameter inconsistency: |B|=" + std::to_string(m) +
                        " does not match the lower-bound formula for n=" + std::to_string(n) +
                        ", c=" + std::to_string(c));
  }
  if (g.num_edges() != n * m) {
    throw ArgumentError("parameter inconsistency: parent graph must be complete");
  }
  if (skeleton_edges.size() > c * n) {
    throw ArgumentError("parameter inconsistency: skeleton has more than c*n edges");
  }

  BipartiteGraph sgraph = skeleton_edges.to_graph();
  std::vector<int> deg = skeleton_edges.degrees_a();
  bool bounded = true;
  for (int a = 0; a < n; ++a) {
    if (deg[static_cast<std::size_t>(a)] > c) {
      bounded = false;
      break;
    }
  }

  ProbeResult best;
  if (bounded) {
    // Exact over the neighborhood classes A_{i_1..i_c}: within one class all
    // vertices share the same neighborhood N, so taking t of them forces
    // degmax ceil(t / |N|).
    std::map<std::vector<int>, std::vector<int>> classes;
    for (int a = 0; a < n; ++a) {
      if (deg[static_cast<std::size_t>(a)] == 0) continue;  // never matchable
      std::vector<int> key;
      for (const auto& [b, id] : sgraph.sorted_adj_a(a)) key.push_back(b);
      classes[key].push_back(a);
    }
    for (const auto& [key, members] : classes) {
      int t = std::min<int>(static_cast<int>(members.size()), m);
      int degmax = static_cast<int>(ceil_div(t, static_cast<int>(key.size())));
      if (degmax > best.degmax) {
        best.degmax = degmax;
        best.witness.assign(members.begin(), members.begin() + t);
      }
    }
  } else {
    // Fiber-seeded local search under the |A'| <= m constraint.
    std::vector<std::vector<int>> fibers(static_cast<std::size_t>(m));
    for (int id : skeleton_edges.ids()) {
      const Edge& e = g.edge(id);
      fibers[static_cast<std::size_t>(e.b)].push_back(e.a);
    }
    std::vector<int> seed_order;
    for (int b = 0; b < m; ++b) {
      if (!fibers[static_cast<std::size_t>(b)].empty()) seed_order.push_back(b);
    }
    std::sort(seed_order.begin(), seed_order.end(), [&fibers](int x, int y) {
      auto sx = fibers[static_cast<std::size_t>(x)].size();
      auto sy = fibers[static_cast<std::size_t>(y)].size();
      if (sx != sy) return sx > sy;
      return x < y;
    });
    constexpr int kRestartBudget = 100;
    if (static_cast<int>(seed_order.size()) > kRestartBudget) {
      seed_order.resize(kRestartBudget);
    }
    auto evaluate = [&](const std::vector<int>& subset) {
      return optimal_semi(sgraph, subset).degmax();
    };
    for (int b : seed_order) {
      // Prefer the fiber members with the fewest alternatives elsewhere.
      std::vector<int> members = fibers[static_cast<std::size_t>(b)];
      std::sort(members.begin(), members.end());
      members.erase(std::unique(members.begin(), members.end()), members.end());
      std::stable_sort(members.begin(), members.end(), [&deg](int x, int y) {
        return deg[static_cast<std::size_t>(x)] < deg[static_cast<std::size_t>(y)];
      });
      if (static_cast<int>(members.size()) > m) members.resize(static_cast<std::size_t>(m));
      std::vector<int> subset = members;
      std::sort(subset.begin(), subset.end());
      if (subset.empty()) continue;
      int cur = evaluate(subset);
      std::vector<char> in(static_cast<std::size_t>(n), 0);
      for (int a : subset) in[static_cast<std::size_t>(a)] = 1;
      for (int step = 0; step < 50; ++step) {
        bool improved = false;
        for (int a = 0; a < n && !improved; ++a) {
          if (!in[static_cast<std::size_t>(a)]) {
            if (deg[static_cast<std::size_t>(a)] == 0 ||
                static_cast<int>(subset.size()) >= m) {
              continue;
            }
            std::vector<int> trial = subset;
            trial.insert(std::lower_bound(trial.begin(), trial.end(), a), a);
            int v = evaluate(trial);
            if (v > cur) {
              cur = v;
              subset = std::move(trial);
              in[static_cast<std::size_t>(a)] = 1;
              improved = true;
            }
          } else if (subset.size() > 1) {
            std::vector<int> trial;
            for (int x : subset) {
              if (x != a) trial.push_back(x);
            }
            int v = evaluate(trial);
            if (v > cur) {
              cur = v;
              subset = std::move(trial);
              in[static_cast<std::size_t>(a)] = 0;
              improved = true;
            }
          }
        }
        if (!improved) break;
      }
      if (cur > best.degmax) {
        best.degmax = cur;
        best.witness = subset;
      }
    }
  }
  return best;
}

}  // namespace semistream
