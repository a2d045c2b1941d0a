#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "semistream/errors.hpp"
#include "semistream/generators.hpp"
#include "semistream/graph.hpp"
#include "semistream/io.hpp"
#include "semistream/stream.hpp"

using namespace semistream;
using semistream::testing::g_tri;

namespace {

std::set<std::pair<int, int>> edge_set(const BipartiteGraph& g) {
  std::set<std::pair<int, int>> out;
  for (const Edge& e : g.edges()) out.insert({e.a, e.b});
  return out;
}

}  // namespace

TEST_CASE("graph construction validates and deduplicates") {
  CHECK_THROWS_AS(BipartiteGraph(2, 2, {{2, 0}}), ArgumentError);
  CHECK_THROWS_AS(BipartiteGraph(2, 2, {{0, -1}}), ArgumentError);
  BipartiteGraph g(2, 2, {{0, 0}, {0, 0}, {1, 1}, {0, 0}});
  CHECK(g.num_edges() == 2);
  CHECK(g.degree_a(0) == 1);
  CHECK(g.find_edge(0, 0) == 0);
  CHECK(g.find_edge(1, 0) == -1);
  CHECK(g.has_edge(1, 1));
}

TEST_CASE("edge subset degrees and restriction") {
  BipartiteGraph g = g_tri();
  EdgeSubset sub(g, {0, 1, 3});
  CHECK(sub.degrees_b() == std::vector<int>{2, 1});
  CHECK(sub.degrees_a() == std::vector<int>{1, 1, 1});
  CHECK(sub.degmax() == 2);
  CHECK(sub.covered_a() == std::vector<int>{0, 1, 2});
  CHECK(sub.covered_b() == std::vector<int>{0, 1});
  CHECK(sub.contains(1));
  CHECK(!sub.contains(2));
  std::vector<int> keep_a{0, 2};
  EdgeSubset restricted = sub.restricted_to_a(keep_a);
  CHECK(restricted.ids() == std::vector<int>{0, 3});
  std::vector<int> keep_b{0};
  CHECK(sub.restricted(keep_a, keep_b).ids() == std::vector<int>{0});
  BipartiteGraph sg = sub.to_graph();
  CHECK(sg.num_edges() == 3);
  CHECK(sg.num_a() == 3);
  CHECK_THROWS_AS(EdgeSubset(g, {99}), ArgumentError);
}

TEST_CASE("load_graph parses the documented format") {
  BipartiteGraph g = load_graph(std::string("p semi 2 1\ne 1 1\ne 2 1\n"));
  CHECK(g.num_a() == 2);
  CHECK(g.num_b() == 1);
  CHECK(edge_set(g) == std::set<std::pair<int, int>>{{0, 0}, {1, 0}});

  BipartiteGraph empty = load_graph(std::string("p semi 1 1\n"));
  CHECK(empty.num_edges() == 0);

  // comments, CRLF, duplicate collapse
  BipartiteGraph crlf = load_graph(std::string("c hi\r\np semi 2 2\r\ne 1 2\r\ne 1 2\r\n"));
  CHECK(crlf.num_edges() == 1);
  CHECK(crlf.edge(0) == Edge{0, 1});
}

TEST_CASE("load_graph errors name the line") {
  try {
    load_graph(std::string("p semi 2 1\ne 3 1\n"));
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(std::string(e.what()) == "vertex index out of range, line 2");
  }
  CHECK_THROWS_AS(load_graph(std::string("p semi x 1\n")), ParseError);
  CHECK_THROWS_AS(load_graph(std::string("p semi 2 1\ne 1 z\n")), ParseError);
  CHECK_THROWS_AS(load_graph(std::string("e 1 1\n")), ParseError);
  CHECK_THROWS_AS(load_graph(std::string("")), ParseError);
  CHECK_THROWS_AS(load_graph_file("does-not-exist.graph"), IoError);
}

TEST_CASE("save/load round-trip preserves the edge set") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    int n = 1 + static_cast<int>(seed % 9);
    int m = 1 + static_cast<int>((seed * 7) % 6);
    BipartiteGraph g = make_random(n, m, 0.4, seed);
    BipartiteGraph back = load_graph(save_graph(g));
    CHECK(back.num_a() == g.num_a());
    CHECK(back.num_b() == g.num_b());
    CHECK(edge_set(back) == edge_set(g));
  }
}

TEST_CASE("generators") {
  CHECK(make_complete(2, 3).num_edges() == 6);
  CHECK(make_random(5, 5, 0.0, 1).num_edges() == 0);
  CHECK(make_random(5, 5, 1.0, 1).num_edges() == 25);
  CHECK_THROWS_AS(make_complete(0, 3), ArgumentError);
  CHECK_THROWS_AS(make_random(3, 3, 1.5, 0), ArgumentError);

  // determinism
  BipartiteGraph r1 = make_random(6, 6, 0.5, 42);
  BipartiteGraph r2 = make_random(6, 6, 0.5, 42);
  CHECK(edge_set(r1) == edge_set(r2));
}

TEST_CASE("hard_g1 from the explicit bit matrix") {
  // x = [[0], [1]] gives edges a1-b0_1 and a2-b1_1
  BipartiteGraph g = make_hard_g1_from_bits({{0}, {1}});
  CHECK(g.num_a() == 2);
  CHECK(g.num_b() == 2);
  CHECK(edge_set(g) == std::set<std::pair<int, int>>{{0, 0}, {1, 1}});
}

TEST_CASE("hard_g1 has exactly one of the two candidate edges per (i, j)") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    int n = 8;
    BipartiteGraph g = make_hard_g1(n, 1, 0.0, seed);
    int m = g.num_b() / 2;
    CHECK(g.num_edges() == n * m);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < m; ++j) {
        int hits = (g.has_edge(i, j) ? 1 : 0) + (g.has_edge(i, m + j) ? 1 : 0);
        CHECK(hits == 1);
      }
    }
  }
}

TEST_CASE("lower_bound_side_size") {
  CHECK(lower_bound_side_size(16, 1, 0.0) == 4);
  CHECK(lower_bound_side_size(64, 1, 0.0) == 8);
  CHECK(lower_bound_side_size(256, 1, 0.0) == 16);
  CHECK(lower_bound_side_size(4, 1, 0.0) == 2);
  CHECK(lower_bound_side_size(1, 3, 0.0) >= 1);  // clamped
}

TEST_CASE("matching_g2 builds a disjoint matching") {
  std::vector<int> subset{0, 2, 3};
  BipartiteGraph g = make_matching_g2(5, subset);
  CHECK(g.num_edges() == 3);
  CHECK(edge_set(g) == std::set<std::pair<int, int>>{{0, 0}, {2, 2}, {3, 3}});
  CHECK_THROWS_AS(make_matching_g2(2, std::vector<int>{5}), ArgumentError);
}

TEST_CASE("every stream policy is a permutation of the edges") {
  BipartiteGraph g = testing::random_patched(7, 5, 0.5, 3);
  for (StreamOrder policy : {StreamOrder::AsGiven, StreamOrder::UniformRandom,
                             StreamOrder::AdversarialSorted, StreamOrder::VertexArrival}) {
    EdgeStream stream = make_stream(g, policy, 11);
    std::vector<int> order = stream.order();
    std::sort(order.begin(), order.end());
    std::vector<int> expect(static_cast<std::size_t>(g.num_edges()));
    for (int i = 0; i < g.num_edges(); ++i) expect[static_cast<std::size_t>(i)] = i;
    CHECK(order == expect);
  }
}

TEST_CASE("as-given stream keeps construction order") {
  BipartiteGraph g = g_tri();
  EdgeStream stream = make_stream(g, StreamOrder::AsGiven, 0);
  CHECK(stream.order() == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("vertex-arrival streams keep each A block contiguous") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    BipartiteGraph g = testing::random_patched(8, 6, 0.5, seed);
    EdgeStream stream = make_stream(g, StreamOrder::VertexArrival, seed);
    std::vector<char> closed(static_cast<std::size_t>(g.num_a()), 0);
    int current = -1;
    for (std::size_t pos = 0; pos < stream.size(); ++pos) {
      int a = stream.at(pos).a;
      if (a != current) {
        CHECK(!closed[static_cast<std::size_t>(a)]);
        if (current >= 0) closed[static_cast<std::size_t>(current)] = 1;
        current = a;
      }
    }
  }
}

TEST_CASE("streams are deterministic per seed") {
  BipartiteGraph g = make_random(9, 9, 0.5, 5);
  EdgeStream s1 = make_stream(g, StreamOrder::UniformRandom, 7);
  EdgeStream s2 = make_stream(g, StreamOrder::UniformRandom, 7);
  CHECK(s1.order() == s2.order());
}

TEST_CASE("adversarial order sorts by (b, a)") {
  BipartiteGraph g = g_tri();
  EdgeStream stream = make_stream(g, StreamOrder::AdversarialSorted, 0);
  for (std::size_t pos = 1; pos < stream.size(); ++pos) {
    const Edge& prev = stream.at(pos - 1);
    const Edge& cur = stream.at(pos);
    CHECK((prev.b < cur.b || (prev.b == cur.b && prev.a < cur.a)));
  }
}

TEST_CASE("stream order names round-trip") {
  for (StreamOrder policy : {StreamOrder::AsGiven, StreamOrder::UniformRandom,
                             StreamOrder::AdversarialSorted, StreamOrder::VertexArrival}) {
    CHECK(parse_stream_order(stream_order_name(policy)) == policy);
  }
  CHECK_THROWS_AS(parse_stream_order("bogus"), ArgumentError);
}
