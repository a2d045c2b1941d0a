#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "semistream/errors.hpp"
#include "semistream/exact.hpp"
#include "semistream/streaming.hpp"
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

TEST_CASE("incomplete_pass trace on g_tri (s=3, d=1)") {
  BipartiteGraph tri = g_tri();
  EdgeStream stream = make_stream(tri, StreamOrder::AsGiven, 0);
  IncompletePassResult res = incomplete_pass(stream, all_a(tri), 3, 1);
  CHECK(res.k == 1);
  CHECK(res.s1.assignment() == std::vector<int>{0, -1, 1});
  CHECK(res.eprime == std::vector<int>{0, 1, 2});
  CHECK(res.s2.assignment() == std::vector<int>{-1, 0, -1});
  CHECK(res.result.size() == 3);
  CHECK(res.result.degmax() == 2);
  CHECK(res.ledger.passes == 1);
}

TEST_CASE("incomplete_pass with loose caps keeps S2 empty") {
  BipartiteGraph tri = g_tri();
  EdgeStream stream = make_stream(tri, StreamOrder::AsGiven, 0);
  IncompletePassResult res = incomplete_pass(stream, all_a(tri), 3, 3);
  CHECK(res.s1.assignment() == std::vector<int>{0, 0, 0});  // first encounters
  CHECK(res.s2.size() == 0);
  CHECK(res.result.size() == 3);
}

TEST_CASE("incomplete_pass edge cases") {
  BipartiteGraph tri = g_tri();
  EdgeStream stream = make_stream(tri, StreamOrder::AsGiven, 0);
  IncompletePassResult res = incomplete_pass(stream, std::vector<int>{}, 0, 1);
  CHECK(res.result.size() == 0);
  CHECK(res.ledger.passes == 1);
  CHECK_THROWS_AS(incomplete_pass(stream, all_a(tri), 2, 1), ArgumentError);
  CHECK_THROWS_AS(incomplete_pass(stream, all_a(tri), 3, 0), ArgumentError);
}

TEST_CASE("algorithm-2 fidelity invariants") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    BipartiteGraph g = random_patched(3 + seed % 8, 1 + seed % 6, 0.5, seed + 11);
    const int n = g.num_a();
    StreamOrder policy = seed % 2 ? StreamOrder::UniformRandom : StreamOrder::AdversarialSorted;
    EdgeStream stream = make_stream(g, policy, seed);
    long long s = n + static_cast<long long>(seed % 3) * n;
    int d = 1 + static_cast<int>(seed % 4);
    IncompletePassResult res = incomplete_pass(stream, all_a(g), s, d);

    CHECK(res.s1.degmax() <= d);
    CHECK(res.s2.degmax() <= d);
    CHECK(res.result.degmax() <= 2 * d);
    std::vector<int> per_a(static_cast<std::size_t>(n), 0);
    for (int id : res.eprime) ++per_a[static_cast<std::size_t>(g.edge(id).a)];
    for (int c : per_a) CHECK(c <= res.k);
    // S2 only matches vertices S1 missed, and the union is their sum
    for (int a = 0; a < n; ++a) {
      if (res.s2.covers(a)) CHECK(!res.s1.covers(a));
      CHECK(res.result.covers(a) == (res.s1.covers(a) || res.s2.covers(a)));
    }
  }
}

TEST_CASE("lemma: reservoirs of min(k, deg) edges support large isemi") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    BipartiteGraph g = random_patched(3 + seed % 7, 1 + seed % 5, 0.6, seed + 313);
    const int n = g.num_a();
    int d_star = optimal_semi(g).degmax();
    for (int k = 1; k <= 3; ++k) {
      std::vector<int> keep;
      for (int a = 0; a < n; ++a) {
        const auto& adj = g.sorted_adj_a(a);
        for (int i = 0; i < std::min<int>(k, static_cast<int>(adj.size())); ++i) {
          keep.push_back(adj[static_cast<std::size_t>(i)].second);
        }
      }
      EdgeSubset reservoir(g, keep);
      for (int d = d_star; d <= d_star + 1; ++d) {
        int size = isemi_max(reservoir, all_a(g), d).size();
        CHECK(size >= std::min<long long>(static_cast<long long>(k) * d, n));
      }
    }
  }
}

TEST_CASE("asemi with p=1 reduces to incomplete_pass") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    BipartiteGraph g = random_patched(4 + seed % 6, 1 + seed % 5, 0.5, seed + 17);
    EdgeStream stream = make_stream(g, StreamOrder::UniformRandom, seed);
    long long s = g.num_a() * 2;
    int d = 1 + static_cast<int>(seed % 3);
    AsemiResult one = asemi(stream, s, d, 1);
    IncompletePassResult pass = incomplete_pass(stream, all_a(g), s, d);
    CHECK(one.result.assignment() == pass.result.assignment());
    CHECK(one.ledger.passes == 1);
  }
}

TEST_CASE("asemi trace on g_tri (s=3, d=1, p=2)") {
  BipartiteGraph tri = g_tri();
  EdgeStream stream = make_stream(tri, StreamOrder::AsGiven, 0);
  AsemiResult res = asemi(stream, 3, 1, 2);
  CHECK(res.result.size() == 3);
  CHECK(res.result.degmax() == 2);
  CHECK(res.result.degmax() <= 4);  // 2dp
  CHECK(res.ledger.passes == 1);    // pass one already matched everyone
}

TEST_CASE("asemi with d >= d* and log passes matches everyone") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    BipartiteGraph g = random_patched(3 + seed % 10, 1 + seed % 7, 0.4, seed + 401);
    const int n = g.num_a();
    int d_star = optimal_semi(g).degmax();
    int p = std::max(1, ceil_log2(n));
    EdgeStream stream = make_stream(g, StreamOrder::UniformRandom, seed);
    AsemiResult res = asemi(stream, n, d_star, p);
    CHECK(res.result.size() == n);
    CHECK(res.result.degmax() <= 2 * d_star * p);
    CHECK(res.ledger.passes <= p);
  }
}

TEST_CASE("one_pass_semi on fixtures") {
  BipartiteGraph pm = perfect(5);
  for (double eps : {0.0, 0.5, 1.0}) {
    StreamSolveResult res = one_pass_semi(make_stream(pm, StreamOrder::UniformRandom, 3), eps);
    CHECK(res.semi.complete());
    CHECK(res.semi.degmax() == 1);
    CHECK(res.ledger.passes == 1);
  }

  BipartiteGraph tri = g_tri();
  StreamSolveResult res = one_pass_semi(make_stream(tri, StreamOrder::AsGiven, 0), 0.0);
  CHECK(res.semi.complete());
  CHECK(res.semi.degmax() == 2);  // traced by hand: the i=0 instance caps b1 at 2
  CHECK(res.semi.degmax() <= 3);

  CHECK_THROWS_AS(one_pass_semi(make_stream(tri, StreamOrder::AsGiven, 0), 1.5), ArgumentError);
  BipartiteGraph iso(2, 1, {{0, 0}});
  CHECK_THROWS_AS(one_pass_semi(make_stream(iso, StreamOrder::AsGiven, 0), 0.0),
                  IsolatedVertexError);
}

TEST_CASE("one_pass_semi stays within the theorem bound across orders") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    BipartiteGraph g = random_patched(4 + seed % 20, 1 + seed % 10, 0.4, seed + 71);
    const int n = g.num_a();
    int d_star = optimal_semi(g).degmax();
    for (double eps : {0.0, 0.5, 1.0}) {
      for (StreamOrder policy : {StreamOrder::AsGiven, StreamOrder::UniformRandom,
                                 StreamOrder::AdversarialSorted}) {
        StreamSolveResult res = one_pass_semi(make_stream(g, policy, seed), eps);
        CHECK(res.semi.complete());
        CHECK(res.semi.degmax() <= 4.0 * std::pow(n, (1.0 - eps) / 2.0) * d_star + 1e-9);
        // space accounting
        double cap = static_cast<double>(kSpaceConstant) * std::pow(n, 1.0 + eps) *
                     (ceil_log2(n) + 1);
        CHECK(static_cast<double>(res.ledger.peak_edges) <= cap);
      }
    }
  }
}

TEST_CASE("multipass_semi on fixtures") {
  CHECK(multipass_semi(make_stream(perfect(6), StreamOrder::UniformRandom, 1)).semi.degmax() == 1);
  StreamSolveResult st = multipass_semi(make_stream(star(4), StreamOrder::AsGiven, 0));
  CHECK(st.semi.degmax() == 4);  // unique semi-matching, ratio 1
  BipartiteGraph one(1, 1, {{0, 0}});
  StreamSolveResult tiny = multipass_semi(make_stream(one, StreamOrder::AsGiven, 0));
  CHECK(tiny.semi.complete());
  CHECK(tiny.ledger.passes == 1);
}

TEST_CASE("multipass_semi bound and pass budget") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    BipartiteGraph g = random_patched(4 + seed % 24, 1 + seed % 12, 0.35, seed + 137);
    const int n = g.num_a();
    int d_star = optimal_semi(g).degmax();
    StreamSolveResult res = multipass_semi(make_stream(g, StreamOrder::UniformRandom, seed));
    CHECK(res.semi.complete());
    CHECK(res.semi.degmax() <= 4LL * ceil_log2(n) * d_star);
    CHECK(res.ledger.passes <= std::max(1, ceil_log2(n)));
    double cap = static_cast<double>(kSpaceConstant) * n * (ceil_log2(n) + 1);
    CHECK(static_cast<double>(res.ledger.peak_edges) <= cap);
  }
}

TEST_CASE("online_greedy trace on g_tri") {
  BipartiteGraph tri = g_tri();
  // construction order is already a vertex-arrival order a0, a1, a2
  EdgeStream stream(tri, StreamOrder::VertexArrival, 0, {0, 1, 2, 3});
  SemiMatching s = online_greedy(stream);
  CHECK(s.assignment() == std::vector<int>{0, 0, 1});
  CHECK(s.degmax() == 2);
}

TEST_CASE("online_greedy fixtures and errors") {
  CHECK(online_greedy(make_stream(perfect(5), StreamOrder::VertexArrival, 9)).degmax() == 1);
  CHECK(online_greedy(make_stream(star(4), StreamOrder::VertexArrival, 9)).degmax() == 4);

  BipartiteGraph tri = g_tri();
  EdgeStream broken(tri, StreamOrder::AsGiven, 0, {0, 2, 1, 3});  // a2's block is split
  CHECK_THROWS_AS(online_greedy(broken), StreamOrderError);
}

TEST_CASE("online_greedy is log(n+1)-competitive") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    BipartiteGraph g = random_patched(2 + seed % 20, 1 + seed % 10, 0.4, seed + 23);
    int d_star = optimal_semi(g).degmax();
    SemiMatching s = online_greedy(make_stream(g, StreamOrder::VertexArrival, seed));
    CHECK(s.complete());
    CHECK(s.degmax() <= ceil_log2(g.num_a() + 1) * d_star);
  }
}
