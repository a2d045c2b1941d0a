#include "semistream/exact.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "maxflow.hpp"
#include "semistream/errors.hpp"
#include "semistream/util.hpp"

namespace semistream {
namespace {

struct Active {
  std::vector<int> list;  // sorted unique
  std::vector<char> mask;
};

Active make_active(const BipartiteGraph& g, std::span<const int> subset) {
  Active act;
  act.mask.assign(static_cast<std::size_t>(g.num_a()), 0);
  for (int a : subset) {
    if (a < 0 || a >= g.num_a()) {
      throw ArgumentError("active vertex " + std::to_string(a) + " out of range");
    }
    act.mask[static_cast<std::size_t>(a)] = 1;
  }
  for (int a = 0; a < g.num_a(); ++a) {
    if (act.mask[static_cast<std::size_t>(a)]) act.list.push_back(a);
  }
  return act;
}

std::vector<int> all_of_a(const BipartiteGraph& g) {
  std::vector<int> v(static_cast<std::size_t>(g.num_a()));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

void require_neighbors(const BipartiteGraph& g, const Active& act) {
  for (int a : act.list) {
    if (g.degree_a(a) == 0) throw IsolatedVertexError(a);
  }
}

// Scan active vertices in ascending index and assign each to a neighbor with
// the smallest current degree (ties: lowest b).
std::vector<int> greedy_assignment(const BipartiteGraph& g, const Active& act,
                                   std::vector<int>& deg_b) {
  std::vector<int> assign(static_cast<std::size_t>(g.num_a()), -1);
  deg_b.assign(static_cast<std::size_t>(g.num_b()), 0);
  for (int a : act.list) {
    int best = -1;
    for (const auto& [b, id] : g.sorted_adj_a(a)) {
      if (best < 0 || deg_b[static_cast<std::size_t>(b)] < deg_b[static_cast<std::size_t>(best)]) {
        best = b;
      }
    }
    assign[static_cast<std::size_t>(a)] = best;
    ++deg_b[static_cast<std::size_t>(best)];
  }
  return assign;
}

std::vector<std::vector<int>> mates_from_assignment(const BipartiteGraph& g,
                                                    const std::vector<int>& assign) {
  std::vector<std::vector<int>> mates(static_cast<std::size_t>(g.num_b()));
  for (int a = 0; a < g.num_a(); ++a) {
    int b = assign[static_cast<std::size_t>(a)];
    if (b >= 0) mates[static_cast<std::size_t>(b)].push_back(a);
  }
  return mates;  // ascending per b by construction
}

// Alternating BFS over B vertices: from b we may step through any mate a of b
// to any other neighbor b' of a. Finds the nearest b' with
// deg(b') <= deg(b_start) - 2; max_dist (if >= 0) limits the search depth.
// Returns the target or -1; parent chains allow path extraction.
struct BfsBuffers {
  std::vector<int> dist, parent_a, parent_b, queue;
};

int alternating_bfs(const BipartiteGraph& g, const std::vector<std::vector<int>>& mates,
                    int b_start, int max_dist, BfsBuffers& buf) {
  const int m = g.num_b();
  const int want = static_cast<int>(mates[static_cast<std::size_t>(b_start)].size()) - 2;
  if (want < 0) return -1;
  buf.dist.assign(static_cast<std::size_t>(m), -1);
  buf.parent_a.assign(static_cast<std::size_t>(m), -1);
  buf.parent_b.assign(static_cast<std::size_t>(m), -1);
  buf.queue.clear();
  buf.dist[static_cast<std::size_t>(b_start)] = 0;
  buf.queue.push_back(b_start);
  for (std::size_t head = 0; head < buf.queue.size(); ++head) {
    int b = buf.queue[head];
    int d = buf.dist[static_cast<std::size_t>(b)];
    if (max_dist >= 0 && d >= max_dist) continue;
    for (int a : mates[static_cast<std::size_t>(b)]) {
      for (const auto& [b2, id] : g.sorted_adj_a(a)) {
        if (buf.dist[static_cast<std::size_t>(b2)] >= 0) continue;
        buf.dist[static_cast<std::size_t>(b2)] = d + 1;
        buf.parent_a[static_cast<std::size_t>(b2)] = a;
        buf.parent_b[static_cast<std::size_t>(b2)] = b;
        if (static_cast<int>(mates[static_cast<std::size_t>(b2)].size()) <= want) return b2;
        buf.queue.push_back(b2);
      }
    }
  }
  return -1;
}

DegMinPath extract_path(int b_start, int target, const BfsBuffers& buf) {
  DegMinPath path;
  int cur = target;
  while (cur != b_start) {
    path.b_nodes.push_back(cur);
    path.a_nodes.push_back(buf.parent_a[static_cast<std::size_t>(cur)]);
    cur = buf.parent_b[static_cast<std::size_t>(cur)];
  }
  path.b_nodes.push_back(b_start);
  std::reverse(path.b_nodes.begin(), path.b_nodes.end());
  std::reverse(path.a_nodes.begin(), path.a_nodes.end());
  return path;
}

void flip_path(const DegMinPath& path, std::vector<int>& assign,
               std::vector<std::vector<int>>& mates) {
  for (std::size_t i = 0; i + 1 < path.b_nodes.size(); ++i) {
    int a = path.a_nodes[i];
    int from = path.b_nodes[i];
    int to = path.b_nodes[i + 1];
    auto& src = mates[static_cast<std::size_t>(from)];
    src.erase(std::find(src.begin(), src.end(), a));
    auto& dst = mates[static_cast<std::size_t>(to)];
    dst.insert(std::lower_bound(dst.begin(), dst.end(), a), a);
    assign[static_cast<std::size_t>(a)] = to;
  }
}

std::vector<int> b_vertices_by_degree(const std::vector<std::vector<int>>& mates) {
  std::vector<int> order;
  for (int b = 0; b < static_cast<int>(mates.size()); ++b) {
    if (mates[static_cast<std::size_t>(b)].size() >= 2) order.push_back(b);
  }
  std::sort(order.begin(), order.end(), [&mates](int x, int y) {
    auto dx = mates[static_cast<std::size_t>(x)].size();
    auto dy = mates[static_cast<std::size_t>(y)].size();
    if (dx != dy) return dx > dy;
    return x < y;
  });
  return order;
}

void eliminate_paths(const BipartiteGraph& g, std::vector<int>& assign) {
  auto mates = mates_from_assignment(g, assign);
  BfsBuffers buf;
  while (true) {
    bool flipped = false;
    for (int b : b_vertices_by_degree(mates)) {
      int target = alternating_bfs(g, mates, b, /*max_dist=*/-1, buf);
      if (target >= 0) {
        flip_path(extract_path(b, target, buf), assign, mates);
        flipped = true;
        break;
      }
    }
    if (!flipped) break;
  }
}

}  // namespace

SemiMatching optimal_semi(const BipartiteGraph& g, std::span<const int> active_a) {
  Active act = make_active(g, active_a);
  require_neighbors(g, act);
  std::vector<int> deg_b;
  std::vector<int> assign = greedy_assignment(g, act, deg_b);
  eliminate_paths(g, assign);
  return SemiMatching(g, std::move(assign));
}

SemiMatching optimal_semi(const BipartiteGraph& g) { return optimal_semi(g, all_of_a(g)); }

SemiMatching semi2(const BipartiteGraph& g, std::span<const int> active_a) {
  Active act = make_active(g, active_a);
  require_neighbors(g, act);
  std::vector<int> deg_b;
  std::vector<int> assign = greedy_assignment(g, act, deg_b);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a : act.list) {
      int cur = assign[static_cast<std::size_t>(a)];
      for (const auto& [b, id] : g.sorted_adj_a(a)) {
        if (deg_b[static_cast<std::size_t>(cur)] > deg_b[static_cast<std::size_t>(b)] + 1) {
          --deg_b[static_cast<std::size_t>(cur)];
          ++deg_b[static_cast<std::size_t>(b)];
          assign[static_cast<std::size_t>(a)] = b;
          cur = b;
          changed = true;
        }
      }
    }
  }
  return SemiMatching(g, std::move(assign));
}

SemiMatching semi2(const BipartiteGraph& g) { return semi2(g, all_of_a(g)); }

std::optional<DegMinPath> find_deg_min_path(const BipartiteGraph& g, const SemiMatching& s) {
  if (s.num_a() != g.num_a() || s.num_b() != g.num_b()) {
    throw ArgumentError("semi-matching does not match graph dimensions");
  }
  auto mates = mates_from_assignment(g, s.assignment());
  BfsBuffers buf;
  std::optional<DegMinPath> best;
  int best_dist = -1;  // -1 = unbounded
  for (int b : b_vertices_by_degree(mates)) {
    int max_dist = best_dist < 0 ? -1 : best_dist - 1;
    if (max_dist == 0) break;  // length-2 path already found, nothing shorter exists
    int target = alternating_bfs(g, mates, b, max_dist, buf);
    if (target < 0) continue;
    best_dist = buf.dist[static_cast<std::size_t>(target)];
    best = extract_path(b, target, buf);
  }
  if (best) {
    std::string why;
    if (!is_valid_deg_min_path(g, s, *best, &why)) {
      throw std::logic_error("internal: extracted path failed validation: " + why);
    }
  }
  return best;
}

SemiMatching apply_path(const BipartiteGraph& g, const SemiMatching& s, const DegMinPath& path) {
  std::string why;
  if (!is_valid_deg_min_path(g, s, path, &why)) {
    throw InvalidPathError("invalid degree-minimizing path: " + why);
  }
  std::vector<int> assign = s.assignment();
  for (std::size_t i = 0; i + 1 < path.b_nodes.size(); ++i) {
    assign[static_cast<std::size_t>(path.a_nodes[i])] = path.b_nodes[i + 1];
  }
  return SemiMatching(g, std::move(assign));
}

namespace {

IncompleteSemiMatching isemi_core(const BipartiteGraph& g, const Active& act,
                                  const std::vector<int>& edge_ids, int d) {
  if (d < 0) throw ArgumentError("cap must be >= 0");
  std::vector<int> assign(static_cast<std::size_t>(g.num_a()), -1);
  if (d == 0 || act.list.empty()) return IncompleteSemiMatching(g, std::move(assign), d);

  std::vector<int> a_node(static_cast<std::size_t>(g.num_a()), -1);
  int next = 1;  // node 0 is the source
  for (int a : act.list) a_node[static_cast<std::size_t>(a)] = next++;
  std::vector<int> b_node(static_cast<std::size_t>(g.num_b()), -1);
  std::vector<int> used_b;
  for (int id : edge_ids) {
    const Edge& e = g.edge(id);
    if (a_node[static_cast<std::size_t>(e.a)] < 0) continue;
    if (b_node[static_cast<std::size_t>(e.b)] < 0) {
      b_node[static_cast<std::size_t>(e.b)] = next++;
      used_b.push_back(e.b);
    }
  }
  const int sink = next++;

  detail::MaxFlow flow(next);
  for (int a : act.list) flow.add_edge(0, a_node[static_cast<std::size_t>(a)], 1);
  struct EdgeRef {
    int handle, a, b;
  };
  std::vector<EdgeRef> refs;
  for (int id : edge_ids) {
    const Edge& e = g.edge(id);
    if (a_node[static_cast<std::size_t>(e.a)] < 0) continue;
    int h = flow.add_edge(a_node[static_cast<std::size_t>(e.a)],
                          b_node[static_cast<std::size_t>(e.b)], 1);
    refs.push_back(EdgeRef{h, e.a, e.b});
  }
  for (int b : used_b) flow.add_edge(b_node[static_cast<std::size_t>(b)], sink, d);
  flow.run(0, sink);

  for (const EdgeRef& ref : refs) {
    if (flow.flow_on(ref.handle) > 0) assign[static_cast<std::size_t>(ref.a)] = ref.b;
  }
  return IncompleteSemiMatching(g, std::move(assign), d);
}

}  // namespace

IncompleteSemiMatching isemi_max(const BipartiteGraph& g, std::span<const int> active_a, int d) {
  Active act = make_active(g, active_a);
  std::vector<int> ids(static_cast<std::size_t>(g.num_edges()));
  std::iota(ids.begin(), ids.end(), 0);
  return isemi_core(g, act, ids, d);
}

IncompleteSemiMatching isemi_max(const EdgeSubset& edges, std::span<const int> active_a, int d) {
  Active act = make_active(edges.graph(), active_a);
  return isemi_core(edges.graph(), act, edges.ids(), d);
}

int Expansion::implied_degmax() const {
  if (subset.empty() || neighborhood_size == 0) return 0;
  return static_cast<int>(
      ceil_div(static_cast<std::int64_t>(subset.size()), neighborhood_size));
}

namespace {

constexpr std::size_t kEnumerationGuard = 20;

Expansion expansion_enumerate(const BipartiteGraph& g, const Active& act) {
  const int t = static_cast<int>(act.list.size());
  const int words = (g.num_b() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> nbr(
      static_cast<std::size_t>(t), std::vector<std::uint64_t>(static_cast<std::size_t>(words), 0));
  for (int i = 0; i < t; ++i) {
    for (const auto& [b, id] : g.sorted_adj_a(act.list[static_cast<std::size_t>(i)])) {
      nbr[static_cast<std::size_t>(i)][static_cast<std::size_t>(b >> 6)] |= 1ULL << (b & 63);
    }
  }

  std::vector<std::uint64_t> acc(static_cast<std::size_t>(words), 0);
  std::vector<int> chosen;
  Expansion best;
  long long best_gamma = 0, best_size = 0;

  // Exclude-first DFS; strict improvements only, so ties keep the first
  // subset in enumeration order.
  auto rec = [&](auto&& self, int i, long long gamma) -> void {
    if (i == t) {
      if (chosen.empty()) return;
      long long size = static_cast<long long>(chosen.size());
      if (best_size == 0 || gamma * best_size < best_gamma * size) {
        best_gamma = gamma;
        best_size = size;
        best.neighborhood_size = static_cast<int>(gamma);
        best.subset.assign(chosen.begin(), chosen.end());
        std::transform(best.subset.begin(), best.subset.end(), best.subset.begin(),
                       [&act](int idx) { return act.list[static_cast<std::size_t>(idx)]; });
      }
      return;
    }
    self(self, i + 1, gamma);
    const auto& row = nbr[static_cast<std::size_t>(i)];
    long long delta = 0;
    std::vector<std::uint64_t> saved(static_cast<std::size_t>(words));
    for (int w = 0; w < words; ++w) {
      saved[static_cast<std::size_t>(w)] = acc[static_cast<std::size_t>(w)];
      std::uint64_t fresh = row[static_cast<std::size_t>(w)] & ~acc[static_cast<std::size_t>(w)];
      delta += __builtin_popcountll(fresh);
      acc[static_cast<std::size_t>(w)] |= row[static_cast<std::size_t>(w)];
    }
    chosen.push_back(i);
    self(self, i + 1, gamma + delta);
    chosen.pop_back();
    acc = saved;
  };
  rec(rec, 0, 0);
  return best;
}

Expansion expansion_flow(const BipartiteGraph& g, const Active& act) {
  auto gamma_of = [&](const std::vector<int>& subset) {
    std::vector<char> hit(static_cast<std::size_t>(g.num_b()), 0);
    long long gamma = 0;
    for (int a : subset) {
      for (const auto& [b, id] : g.sorted_adj_a(a)) {
        if (!hit[static_cast<std::size_t>(b)]) {
          hit[static_cast<std::size_t>(b)] = 1;
          ++gamma;
        }
      }
    }
    return gamma;
  };

  std::vector<int> best_subset = act.list;
  long long best_gamma = gamma_of(best_subset);
  long long best_size = static_cast<long long>(best_subset.size());

  // Dinkelbach iterations: with the current ratio p/q as the parameter, a
  // min s-t cut minimizes q|Γ(X)| - p|X|; a negative value yields a strictly
  // better ratio. Ratios live on a finite lattice, so this terminates.
  while (true) {
    const long long p = best_gamma, q = best_size;
    std::vector<int> a_node(static_cast<std::size_t>(g.num_a()), -1);
    int next = 1;
    for (int a : act.list) a_node[static_cast<std::size_t>(a)] = next++;
    std::vector<int> b_node(static_cast<std::size_t>(g.num_b()), -1);
    std::vector<int> used_b;
    for (int a : act.list) {
      for (const auto& [b, id] : g.sorted_adj_a(a)) {
        if (b_node[static_cast<std::size_t>(b)] < 0) {
          b_node[static_cast<std::size_t>(b)] = next++;
          used_b.push_back(b);
        }
      }
    }
    const int sink = next++;
    const long long inf =
        p * static_cast<long long>(act.list.size()) + q * static_cast<long long>(used_b.size()) + 1;

    detail::MaxFlow flow(next);
    for (int a : act.list) flow.add_edge(0, a_node[static_cast<std::size_t>(a)], p);
    for (int a : act.list) {
      for (const auto& [b, id] : g.sorted_adj_a(a)) {
        flow.add_edge(a_node[static_cast<std::size_t>(a)], b_node[static_cast<std::size_t>(b)],
                      inf);
      }
    }
    for (int b : used_b) flow.add_edge(b_node[static_cast<std::size_t>(b)], sink, q);
    flow.run(0, sink);

    std::vector<char> side = flow.source_side(0);
    std::vector<int> subset;
    for (int a : act.list) {
      if (side[static_cast<std::size_t>(a_node[static_cast<std::size_t>(a)])]) subset.push_back(a);
    }
    if (subset.empty()) break;
    long long gamma = gamma_of(subset);
    long long size = static_cast<long long>(subset.size());
    if (gamma * best_size < best_gamma * size) {
      best_gamma = gamma;
      best_size = size;
      best_subset = std::move(subset);
    } else {
      break;
    }
  }

  Expansion out;
  out.subset = std::move(best_subset);
  out.neighborhood_size = static_cast<int>(best_gamma);
  return out;
}

}  // namespace

Expansion min_expansion(const BipartiteGraph& g, std::span<const int> active_a,
                        ExpansionMode mode) {
  Active act = make_active(g, active_a);
  if (act.list.empty()) throw ArgumentError("active subset must be non-empty");
  require_neighbors(g, act);
  switch (mode) {
    case ExpansionMode::Enumerate:
      if (act.list.size() > kEnumerationGuard) {
        throw GuardExceededError("subset enumeration limited to " +
                                 std::to_string(kEnumerationGuard) + " active vertices");
      }
      return expansion_enumerate(g, act);
    case ExpansionMode::ParametricFlow:
      return expansion_flow(g, act);
    case ExpansionMode::Auto:
      return act.list.size() <= kEnumerationGuard ? expansion_enumerate(g, act)
                                                  : expansion_flow(g, act);
  }
  throw ArgumentError("bad expansion mode");
}

Expansion min_expansion(const BipartiteGraph& g, ExpansionMode mode) {
  return min_expansion(g, all_of_a(g), mode);
}

SemiMatching brute_force_semi(const BipartiteGraph& g, std::span<const int> active_a) {
  Active act = make_active(g, active_a);
  require_neighbors(g, act);
  long long leaves = 1;
  for (int a : act.list) {
    leaves *= g.degree_a(a);
    if (leaves > 10'000'000LL) {
      throw GuardExceededError("brute force guard exceeded: > 10^7 assignments");
    }
  }

  std::vector<int> assign(static_cast<std::size_t>(g.num_a()), -1);
  std::vector<int> deg_b(static_cast<std::size_t>(g.num_b()), 0);
  std::vector<int> best_assign;
  std::vector<int> best_profile;
  std::vector<int> profile(static_cast<std::size_t>(g.num_b()));

  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == act.list.size()) {
      profile.assign(deg_b.begin(), deg_b.end());
      std::sort(profile.begin(), profile.end(), std::greater<int>());
      if (best_assign.empty() || profile < best_profile) {
        best_profile = profile;
        best_assign = assign;
      }
      return;
    }
    int a = act.list[idx];
    for (const auto& [b, id] : g.sorted_adj_a(a)) {
      assign[static_cast<std::size_t>(a)] = b;
      ++deg_b[static_cast<std::size_t>(b)];
      self(self, idx + 1);
      --deg_b[static_cast<std::size_t>(b)];
    }
    assign[static_cast<std::size_t>(a)] = -1;
  };
  rec(rec, 0);
  return SemiMatching(g, std::move(best_assign));
}

SemiMatching brute_force_semi(const BipartiteGraph& g) {
  return brute_force_semi(g, all_of_a(g));
}

}  // namespace semistream
