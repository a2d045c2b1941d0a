#include "semistream/stream.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "semistream/errors.hpp"
#include "semistream/rng.hpp"

namespace semistream {

EdgeStream make_stream(const BipartiteGraph& g, StreamOrder policy, std::uint64_t seed) {
  std::vector<int> order(static_cast<std::size_t>(g.num_edges()));
  std::iota(order.begin(), order.end(), 0);
  switch (policy) {
    case StreamOrder::AsGiven:
      break;
    case StreamOrder::UniformRandom: {
      std::mt19937_64 gen(seed);
      rng::shuffle(order, gen);
      break;
    }
    case StreamOrder::AdversarialSorted:
      std::sort(order.begin(), order.end(), [&g](int x, int y) {
        const Edge& ex = g.edge(x);
        const Edge& ey = g.edge(y);
        if (ex.b != ey.b) return ex.b < ey.b;
        return ex.a < ey.a;
      });
      break;
    case StreamOrder::VertexArrival: {
      std::mt19937_64 gen(seed);
      std::vector<int> a_order(static_cast<std::size_t>(g.num_a()));
      std::iota(a_order.begin(), a_order.end(), 0);
      rng::shuffle(a_order, gen);
      order.clear();
      for (int a : a_order) {
        std::vector<int> block = g.edge_ids_of_a(a);
        rng::shuffle(block, gen);
        order.insert(order.end(), block.begin(), block.end());
      }
      break;
    }
  }
  return EdgeStream(g, policy, seed, std::move(order));
}

StreamOrder parse_stream_order(std::string_view name) {
  if (name == "as-given") return StreamOrder::AsGiven;
  if (name == "random") return StreamOrder::UniformRandom;
  if (name == "adversarial") return StreamOrder::AdversarialSorted;
  if (name == "vertex-arrival") return StreamOrder::VertexArrival;
  throw ArgumentError("unknown stream order: " + std::string(name));
}

std::string stream_order_name(StreamOrder policy) {
  switch (policy) {
    case StreamOrder::AsGiven:
      return "as-given";
    case StreamOrder::UniformRandom:
      return "random";
    case StreamOrder::AdversarialSorted:
      return "adversarial";
    case StreamOrder::VertexArrival:
      return "vertex-arrival";
  }
  return "?";
}

}  // namespace semistream
