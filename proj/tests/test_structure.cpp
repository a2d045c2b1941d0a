#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "oracles.hpp"
#include "semistream/errors.hpp"
#include "semistream/exact.hpp"
#include "semistream/structure.hpp"
#include "semistream/util.hpp"

using namespace semistream;
using namespace semistream::testing;

namespace {

std::vector<int> all_a(const BipartiteGraph& g) {
  std::vector<int> v(static_cast<std::size_t>(g.num_a()));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

TEST_CASE("decompose fixtures") {
  BipartiteGraph pm = perfect(4);
  Decomposition d1 = decompose(pm, optimal_semi(pm));
  CHECK(d1.layers.size() == 1);
  CHECK(d1.layers[0].size() == 4);

  BipartiteGraph tri = g_tri();
  Decomposition d2 = decompose(tri, SemiMatching(tri, {0, 0, 1}));
  REQUIRE(d2.layers.size() == 2);
  CHECK(d2.layers[0] == std::vector<Edge>{{0, 0}, {2, 1}});  // labels follow a-index order
  CHECK(d2.layers[1] == std::vector<Edge>{{1, 0}});
  CHECK(d2.a_sets[0] == std::vector<int>{0, 1, 2});
  CHECK(d2.a_sets[1] == std::vector<int>{1});
  CHECK(d2.b_sets[0] == std::vector<int>{0, 1});
  CHECK(d2.b_sets[1] == std::vector<int>{0, 1});  // B(M_1)

  Decomposition d3 = decompose(star(4), optimal_semi(star(4)));
  CHECK(d3.layers.size() == 4);
  for (const auto& layer : d3.layers) CHECK(layer.size() == 1);
}

TEST_CASE("decomposition partitions the semi-matching") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    BipartiteGraph g = random_patched(2 + seed % 9, 1 + seed % 7, 0.5, seed + 19);
    SemiMatching s = (seed % 2) ? optimal_semi(g) : semi2(g);
    Decomposition dec = decompose(g, s);
    CHECK(static_cast<int>(dec.layers.size()) == s.degmax());
    std::set<std::pair<int, int>> seen;
    for (std::size_t i = 0; i < dec.layers.size(); ++i) {
      std::set<int> layer_a, layer_b;
      for (const Edge& e : dec.layers[i]) {
        CHECK(seen.insert({e.a, e.b}).second);  // disjoint layers
        CHECK(layer_a.insert(e.a).second);      // each layer is a matching
        CHECK(layer_b.insert(e.b).second);
      }
    }
    CHECK(static_cast<int>(seen.size()) == s.size());
  }
}

TEST_CASE("semi2 layers are maximal; a planted length-2 path breaks layer 1") {
  BipartiteGraph tri = g_tri();
  auto good = verify_maximal_layers(tri, decompose(tri, semi2(tri)));
  for (const auto& check : good) CHECK(check.ok);

  // S = {a0b0, a1b0, a2b0} admits (b0, a2, b1); M_1 = {a0b0} misses a2b1.
  auto bad = verify_maximal_layers(tri, decompose(tri, SemiMatching(tri, {0, 0, 0})));
  REQUIRE(bad.size() == 3);
  CHECK(!bad[0].ok);
  REQUIRE(bad[0].witness.has_value());
  CHECK(*bad[0].witness == Edge{2, 1});

  auto single = verify_maximal_layers(perfect(3), decompose(perfect(3), optimal_semi(perfect(3))));
  CHECK(single.size() == 1);
  CHECK(single[0].ok);
}

TEST_CASE("optimal layers are maximum matchings") {
  BipartiteGraph tri = g_tri();
  for (const auto& check : verify_maximum_layers(tri, decompose(tri, optimal_semi(tri)))) {
    CHECK(check.ok);
  }
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    BipartiteGraph g = random_patched(2 + seed % 9, 1 + seed % 7, 0.5, seed + 511);
    Decomposition dec = decompose(g, optimal_semi(g));
    for (const auto& check : verify_maximum_layers(g, dec)) CHECK(check.ok);
    for (const auto& check : verify_maximal_layers(g, dec)) CHECK(check.ok);
  }
}

TEST_CASE("a semi2-but-not-optimal assignment has a maximal non-maximum layer") {
  BipartiteGraph p5 = path5();
  SemiMatching s(p5, {0, 0, 1});  // semi2 but admits a length-4 path
  CHECK(oracle_exists_deg_min_path(p5, s));
  Decomposition dec = decompose(p5, s);
  auto maximal = verify_maximal_layers(p5, dec);
  for (const auto& check : maximal) CHECK(check.ok);
  auto maximum = verify_maximum_layers(p5, dec);
  REQUIRE(!maximum.empty());
  CHECK(!maximum[0].ok);
  CHECK(maximum[0].layer_size == 2);
  CHECK(maximum[0].maximum_size == 3);  // the perfect matching
}

TEST_CASE("check_log_bound fixtures and sweep") {
  LogBoundReport pm = check_log_bound(perfect(4));
  CHECK(pm.ok);
  CHECK(pm.semi2_degmax == 1);

  LogBoundReport st = check_log_bound(star(4));
  CHECK(st.ok);
  CHECK(st.semi2_degmax == 4);
  CHECK(st.bound_factor == ceil_log2(5));

  int failures = 0;
  for (std::uint64_t seed = 0; seed < 10'000; ++seed) {
    BipartiteGraph g = random_patched(2 + seed % 9, 1 + seed % 8, 0.3 + 0.3 * (seed % 3), seed);
    if (!check_log_bound(g).ok) ++failures;
  }
  CHECK(failures == 0);
}

TEST_CASE("every semi2 candidate obeys the log bound (exhaustive enumeration)") {
  // Enumerate all semi-matchings, keep those free of length-2
  // degree-minimizing paths, and check each against ceil(log2(n+1)) d*.
  int graphs_tested = 0;
  for (std::uint64_t seed = 0; seed < 200 && graphs_tested < 40; ++seed) {
    BipartiteGraph g = random_patched(8 + seed % 5, 2 + seed % 4, 0.25, seed + 42'000);
    long long leaves = 1;
    bool skip = false;
    for (int a = 0; a < g.num_a(); ++a) {
      leaves *= g.degree_a(a);
      if (leaves > 200'000) {
        skip = true;
        break;
      }
    }
    if (skip) continue;
    ++graphs_tested;
    const int n = g.num_a();
    const long long cap = static_cast<long long>(ceil_log2(n + 1)) * optimal_semi(g).degmax();

    std::vector<int> assign(static_cast<std::size_t>(n), -1);
    std::vector<int> deg(static_cast<std::size_t>(g.num_b()), 0);
    int checked = 0;
    auto rec = [&](auto&& self, int a) -> void {
      if (a == n) {
        for (int x = 0; x < n; ++x) {
          int bx = assign[static_cast<std::size_t>(x)];
          for (const auto& [b, id] : g.sorted_adj_a(x)) {
            if (deg[static_cast<std::size_t>(bx)] > deg[static_cast<std::size_t>(b)] + 1) {
              return;  // admits a length-2 path: not a semi2 candidate
            }
          }
        }
        ++checked;
        int degmax = *std::max_element(deg.begin(), deg.end());
        CHECK(degmax <= cap);
        return;
      }
      for (const auto& [b, id] : g.sorted_adj_a(a)) {
        assign[static_cast<std::size_t>(a)] = b;
        ++deg[static_cast<std::size_t>(b)];
        self(self, a + 1);
        --deg[static_cast<std::size_t>(b)];
      }
    };
    rec(rec, 0);
    CHECK(checked >= 1);  // at least one semi2 candidate always exists
  }
  CHECK(graphs_tested >= 30);
}

TEST_CASE("half_matched_split fixtures") {
  BipartiteGraph pm = perfect(4);
  HalfSplit s1 = half_matched_split(pm, semi2(pm), all_a(pm));
  CHECK(s1.matched_half == all_a(pm));  // d* = 1 layer covers everyone
  CHECK(s1.half_ok);
  CHECK(s1.degmax_ok);
  CHECK(s1.residual_semi2_ok);
  CHECK(s1.residual.size() == 0);

  BipartiteGraph tri = g_tri();
  HalfSplit s2 = half_matched_split(tri, semi2(tri), all_a(tri));
  CHECK(s2.d_star == 2);
  CHECK(static_cast<int>(s2.matched_half.size()) >= 2);
  CHECK(s2.half_ok);
  CHECK(s2.degmax_ok);
  CHECK(s2.residual_semi2_ok);

  BipartiteGraph st = star(4);
  HalfSplit s3 = half_matched_split(st, semi2(st), all_a(st));
  CHECK(s3.matched_half == all_a(st));  // d* = 4 layers = everything
}

TEST_CASE("half_matched_split holds on random semi2 outputs") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    BipartiteGraph g = random_patched(2 + seed % 10, 1 + seed % 6, 0.45, seed + 3000);
    HalfSplit split = half_matched_split(g, semi2(g), all_a(g));
    CHECK(split.half_ok);
    CHECK(split.degmax_ok);
    CHECK(split.residual_semi2_ok);
  }
}

TEST_CASE("half_matched_split validates its domain") {
  BipartiteGraph tri = g_tri();
  std::vector<int> partial{0, 1};
  CHECK_THROWS_AS(half_matched_split(tri, semi2(tri), partial), ArgumentError);
}
