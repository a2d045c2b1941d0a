#include "semistream/streaming.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "semistream/errors.hpp"
#include "semistream/exact.hpp"
#include "semistream/util.hpp"

namespace semistream {
namespace {

std::vector<int> all_of_a(const BipartiteGraph& g) {
  std::vector<int> v(static_cast<std::size_t>(g.num_a()));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

void require_no_isolated(const BipartiteGraph& g) {
  for (int a = 0; a < g.num_a(); ++a) {
    if (g.degree_a(a) == 0) throw IsolatedVertexError(a);
  }
}

// One Algorithm-2 instance fed edge by edge. Greedy S1 (accept ab iff a is
// unmatched and deg_{S1}(b) < d) plus a reservoir E' of at most k edges per
// A vertex; finalize() computes S2 = isemi_d over E' restricted to the
// vertices S1 missed.
class IncompleteRun {
 public:
  IncompleteRun(const BipartiteGraph& g, std::vector<char> active_mask, long long k, int d)
      : g_(&g),
        active_(std::move(active_mask)),
        k_(k),
        d_(d),
        s1_(static_cast<std::size_t>(g.num_a()), -1),
        deg_s1_b_(static_cast<std::size_t>(g.num_b()), 0),
        eprime_per_a_(static_cast<std::size_t>(g.num_a()), 0) {}

  void offer(int edge_id) {
    const Edge& e = g_->edge(edge_id);
    if (!active_[static_cast<std::size_t>(e.a)]) return;  // edge outside A' x B
    if (s1_[static_cast<std::size_t>(e.a)] < 0 && deg_s1_b_[static_cast<std::size_t>(e.b)] < d_) {
      s1_[static_cast<std::size_t>(e.a)] = e.b;
      ++deg_s1_b_[static_cast<std::size_t>(e.b)];
      ++s1_size_;
    }
    if (eprime_per_a_[static_cast<std::size_t>(e.a)] < k_) {
      ++eprime_per_a_[static_cast<std::size_t>(e.a)];
      eprime_.push_back(edge_id);
    }
  }

  void finalize() {
    std::vector<int> unmatched;
    for (int a = 0; a < g_->num_a(); ++a) {
      if (active_[static_cast<std::size_t>(a)] && s1_[static_cast<std::size_t>(a)] < 0) {
        unmatched.push_back(a);
      }
    }
    EdgeSubset pool(*g_, eprime_);
    s2_ = isemi_max(pool, unmatched, d_).assignment();
  }

  std::size_t stored_edges() const {
    return static_cast<std::size_t>(s1_size_) + eprime_.size() + static_cast<std::size_t>(s2_size());
  }

  int s2_size() const {
    int c = 0;
    for (int b : s2_) {
      if (b >= 0) ++c;
    }
    return c;
  }

  const std::vector<int>& s1() const { return s1_; }
  const std::vector<int>& s2() const { return s2_; }
  const std::vector<int>& eprime() const { return eprime_; }

  std::vector<int> combined() const {
    std::vector<int> out = s1_;
    for (int a = 0; a < g_->num_a(); ++a) {
      if (out[static_cast<std::size_t>(a)] < 0) out[static_cast<std::size_t>(a)] = s2_[static_cast<std::size_t>(a)];
    }
    return out;
  }

 private:
  const BipartiteGraph* g_;
  std::vector<char> active_;
  long long k_;
  int d_;
  std::vector<int> s1_;
  std::vector<int> deg_s1_b_;
  std::vector<int> eprime_per_a_;
  std::vector<int> eprime_;
  std::vector<int> s2_;
  int s1_size_ = 0;
};

std::vector<char> mask_from(const BipartiteGraph& g, std::span<const int> subset) {
  std::vector<char> mask(static_cast<std::size_t>(g.num_a()), 0);
  for (int a : subset) {
    if (a < 0 || a >= g.num_a()) {
      throw ArgumentError("active vertex " + std::to_string(a) + " out of range");
    }
    mask[static_cast<std::size_t>(a)] = 1;
  }
  return mask;
}

}  // namespace

IncompletePassResult incomplete_pass(const EdgeStream& stream, std::span<const int> active_a,
                                     long long s, int d) {
  const BipartiteGraph& g = stream.graph();
  if (d < 1) throw ArgumentError("d must be >= 1");
  std::vector<char> mask = mask_from(g, active_a);
  long long count = std::count(mask.begin(), mask.end(), char(1));
  if (s < count) {
    throw ArgumentError("space budget s=" + std::to_string(s) + " below |A'|=" +
                        std::to_string(count));
  }
  long long k = count == 0 ? 1 : std::max<long long>(1, s / count);

  IncompleteRun run(g, std::move(mask), k, d);
  for (std::size_t pos = 0; pos < stream.size(); ++pos) run.offer(stream.edge_id_at(pos));
  run.finalize();

  SpaceLedger ledger;
  ledger.passes = 1;
  ledger.s = s;
  ledger.d = d;
  ledger.k = k;
  ledger.note(run.stored_edges());

  return IncompletePassResult{
      IncompleteSemiMatching(g, run.combined(), 2 * d),
      IncompleteSemiMatching(g, run.s1(), d),
      IncompleteSemiMatching(g, run.s2(), d),
      run.eprime(),
      k,
      ledger,
  };
}

AsemiResult asemi(const EdgeStream& stream, long long s, int d, int p) {
  const BipartiteGraph& g = stream.graph();
  if (p < 1) throw ArgumentError("p must be >= 1");
  if (d < 1) throw ArgumentError("d must be >= 1");
  if (s < g.num_a()) throw ArgumentError("space budget below |A|");

  std::vector<int> carried(static_cast<std::size_t>(g.num_a()), -1);
  int matched = 0;
  SpaceLedger ledger;
  ledger.s = s;
  ledger.d = d;
  ledger.p = p;
  for (int pass = 0; pass < p && matched < g.num_a(); ++pass) {
    std::vector<int> remaining;
    for (int a = 0; a < g.num_a(); ++a) {
      if (carried[static_cast<std::size_t>(a)] < 0) remaining.push_back(a);
    }
    long long k = remaining.empty() ? 1 : std::max<long long>(1, s / static_cast<long long>(remaining.size()));
    IncompleteRun run(g, mask_from(g, remaining), k, d);
    for (std::size_t pos = 0; pos < stream.size(); ++pos) run.offer(stream.edge_id_at(pos));
    run.finalize();
    ++ledger.passes;
    ledger.k = std::max(ledger.k, k);
    ledger.note(static_cast<std::size_t>(matched) + run.stored_edges());

    std::vector<int> add = run.combined();
    for (int a = 0; a < g.num_a(); ++a) {
      if (carried[static_cast<std::size_t>(a)] < 0 && add[static_cast<std::size_t>(a)] >= 0) {
        carried[static_cast<std::size_t>(a)] = add[static_cast<std::size_t>(a)];
        ++matched;
      }
    }
  }
  return AsemiResult{IncompleteSemiMatching(g, std::move(carried), 2 * d * p), ledger};
}

StreamSolveResult one_pass_semi(const EdgeStream& stream, double eps) {
  const BipartiteGraph& g = stream.graph();
  if (eps < 0.0 || eps > 1.0) throw ArgumentError("eps must lie in [0, 1]");
  require_no_isolated(g);
  const int n = g.num_a();
  if (n == 0) throw ArgumentError("graph has no A vertices");

  const int top = ceil_log2(n);
  const long long s = std::max<long long>(n, ceil_real_pow(n, 1.0 + eps));
  const long long base_cap = ceil_real_pow(n, (1.0 - eps) / 2.0);
  const long long k = std::max<long long>(1, s / n);
  std::vector<int> all = all_of_a(g);
  std::vector<char> mask = mask_from(g, all);

  std::vector<IncompleteRun> runs;
  std::vector<int> caps;
  runs.reserve(static_cast<std::size_t>(top) + 1);
  for (int i = 0; i <= top; ++i) {
    long long cap = base_cap << i;
    caps.push_back(static_cast<int>(std::min<long long>(cap, n)));  // beyond n the cap never binds
    runs.emplace_back(g, mask, k, caps.back());
  }
  for (std::size_t pos = 0; pos < stream.size(); ++pos) {
    for (auto& run : runs) run.offer(stream.edge_id_at(pos));
  }

  SpaceLedger ledger;
  ledger.passes = 1;
  ledger.s = s;
  ledger.eps = eps;
  ledger.k = k;
  std::size_t total_stored = 0;

  int best = -1;
  int best_degmax = 0;
  std::vector<int> best_assign;
  for (int i = 0; i <= top; ++i) {
    auto& run = runs[static_cast<std::size_t>(i)];
    run.finalize();
    total_stored += run.stored_edges();
    std::vector<int> combined = run.combined();
    int size = 0, degmax = 0;
    std::vector<int> deg(static_cast<std::size_t>(g.num_b()), 0);
    for (int a = 0; a < n; ++a) {
      int b = combined[static_cast<std::size_t>(a)];
      if (b >= 0) {
        ++size;
        degmax = std::max(degmax, ++deg[static_cast<std::size_t>(b)]);
      }
    }
    if (size == n && (best < 0 || degmax < best_degmax)) {
      best = i;
      best_degmax = degmax;
      best_assign = std::move(combined);
    }
  }
  ledger.note(total_stored);
  if (best < 0) {
    throw NoCompleteCandidateError("no parallel instance produced a complete semi-matching");
  }
  ledger.d = caps[static_cast<std::size_t>(best)];
  return StreamSolveResult{SemiMatching(g, std::move(best_assign)), ledger, best,
                           caps[static_cast<std::size_t>(best)]};
}

StreamSolveResult multipass_semi(const EdgeStream& stream) {
  const BipartiteGraph& g = stream.graph();
  require_no_isolated(g);
  const int n = g.num_a();
  if (n == 0) throw ArgumentError("graph has no A vertices");

  const int top = ceil_log2(n);
  const int max_passes = std::max(1, top);  // the theorem's log(n) passes; n = 1 still needs one
  const long long s = n;

  struct Instance {
    std::vector<int> carried;
    int matched = 0;
    bool done = false;
    std::size_t peak = 0;
    int cap = 1;
  };
  std::vector<Instance> instances(static_cast<std::size_t>(top) + 1);
  for (int i = 0; i <= top; ++i) {
    auto& inst = instances[static_cast<std::size_t>(i)];
    inst.carried.assign(static_cast<std::size_t>(n), -1);
    inst.cap = static_cast<int>(std::min<long long>(1LL << i, n));
  }

  SpaceLedger ledger;
  ledger.s = s;
  ledger.p = max_passes;

  for (int pass = 0; pass < max_passes; ++pass) {
    std::vector<int> live;
    for (int i = 0; i <= top; ++i) {
      if (!instances[static_cast<std::size_t>(i)].done) live.push_back(i);
    }
    if (live.empty()) break;
    std::vector<IncompleteRun> runs;
    runs.reserve(live.size());
    for (int i : live) {
      auto& inst = instances[static_cast<std::size_t>(i)];
      std::vector<int> remaining;
      for (int a = 0; a < n; ++a) {
        if (inst.carried[static_cast<std::size_t>(a)] < 0) remaining.push_back(a);
      }
      long long k = remaining.empty()
                        ? 1
                        : std::max<long long>(1, s / static_cast<long long>(remaining.size()));
      ledger.k = std::max(ledger.k, k);
      runs.emplace_back(g, mask_from(g, remaining), k, inst.cap);
    }
    for (std::size_t pos = 0; pos < stream.size(); ++pos) {
      for (auto& run : runs) run.offer(stream.edge_id_at(pos));
    }
    ++ledger.passes;
    for (std::size_t r = 0; r < live.size(); ++r) {
      auto& inst = instances[static_cast<std::size_t>(live[r])];
      runs[r].finalize();
      inst.peak = std::max(inst.peak, static_cast<std::size_t>(inst.matched) + runs[r].stored_edges());
      std::vector<int> add = runs[r].combined();
      for (int a = 0; a < n; ++a) {
        if (inst.carried[static_cast<std::size_t>(a)] < 0 && add[static_cast<std::size_t>(a)] >= 0) {
          inst.carried[static_cast<std::size_t>(a)] = add[static_cast<std::size_t>(a)];
          ++inst.matched;
        }
      }
      if (inst.matched == n) inst.done = true;
    }
  }

  std::size_t total_peak = 0;
  for (const auto& inst : instances) total_peak += inst.peak;
  ledger.note(total_peak);

  int best = -1;
  int best_degmax = 0;
  for (int i = 0; i <= top; ++i) {
    auto& inst = instances[static_cast<std::size_t>(i)];
    if (inst.matched != n) continue;
    std::vector<int> deg(static_cast<std::size_t>(g.num_b()), 0);
    int degmax = 0;
    for (int a = 0; a < n; ++a) {
      degmax = std::max(degmax, ++deg[static_cast<std::size_t>(inst.carried[static_cast<std::size_t>(a)])]);
    }
    if (best < 0 || degmax < best_degmax) {
      best = i;
      best_degmax = degmax;
    }
  }
  if (best < 0) {
    throw NoCompleteCandidateError("no parallel instance produced a complete semi-matching");
  }
  auto& chosen = instances[static_cast<std::size_t>(best)];
  ledger.d = chosen.cap;
  return StreamSolveResult{SemiMatching(g, chosen.carried), ledger, best, chosen.cap};
}

SemiMatching online_greedy(const EdgeStream& stream) {
  const BipartiteGraph& g = stream.graph();
  std::vector<int> assign(static_cast<std::size_t>(g.num_a()), -1);
  std::vector<int> deg(static_cast<std::size_t>(g.num_b()), 0);
  std::vector<char> block_closed(static_cast<std::size_t>(g.num_a()), 0);
  int current = -1;
  std::vector<int> block;

  auto close_block = [&]() {
    if (current < 0) return;
    int best = -1;
    for (int b : block) {
      if (best < 0 || deg[static_cast<std::size_t>(b)] < deg[static_cast<std::size_t>(best)] ||
          (deg[static_cast<std::size_t>(b)] == deg[static_cast<std::size_t>(best)] && b < best)) {
        best = b;
      }
    }
    assign[static_cast<std::size_t>(current)] = best;
    ++deg[static_cast<std::size_t>(best)];
    block_closed[static_cast<std::size_t>(current)] = 1;
    block.clear();
  };

  for (std::size_t pos = 0; pos < stream.size(); ++pos) {
    const Edge& e = stream.at(pos);
    if (e.a != current) {
      close_block();
      if (block_closed[static_cast<std::size_t>(e.a)]) {
        throw StreamOrderError("edges of A vertex " + std::to_string(e.a) +
                               " are not contiguous; not a vertex-arrival stream");
      }
      current = e.a;
    }
    block.push_back(e.b);
  }
  close_block();

  for (int a = 0; a < g.num_a(); ++a) {
    if (assign[static_cast<std::size_t>(a)] < 0) throw IsolatedVertexError(a);
  }
  return SemiMatching(g, std::move(assign));
}

}  // namespace semistream
