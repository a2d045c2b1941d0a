#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "semistream/graph.hpp"

namespace semistream {

/// Stream ordering policies.
///
/// AsGiven            edges in construction order (identity permutation).
/// UniformRandom      seeded uniform permutation.
/// AdversarialSorted  edges sorted by (b, a): all edges of each B vertex arrive
///                    in one burst, concentrating load and biasing the per-A
///                    reservoirs toward low B indices.
/// VertexArrival      all edges of one A vertex arrive contiguously; block
///                    order and in-block order are seeded.
enum class StreamOrder { AsGiven, UniformRandom, AdversarialSorted, VertexArrival };

/// A replayable, immutable permutation of a graph's edges.
/// References the graph; the graph must outlive the stream.
class EdgeStream {
 public:
  EdgeStream(const BipartiteGraph& g, StreamOrder policy, std::uint64_t seed,
             std::vector<int> order)
      : g_(&g), policy_(policy), seed_(seed), order_(std::move(order)) {}

  const BipartiteGraph& graph() const { return *g_; }
  StreamOrder policy() const { return policy_; }
  std::uint64_t seed() const { return seed_; }

  std::size_t size() const { return order_.size(); }
  int edge_id_at(std::size_t pos) const { return order_[pos]; }
  const Edge& at(std::size_t pos) const { return g_->edge(order_[pos]); }
  const std::vector<int>& order() const { return order_; }

 private:
  const BipartiteGraph* g_;
  StreamOrder policy_;
  std::uint64_t seed_;
  std::vector<int> order_;
};

/// Builds the permutation for the requested policy. Deterministic in
/// (graph, policy, seed); the seed is ignored by AsGiven and AdversarialSorted.
EdgeStream make_stream(const BipartiteGraph& g, StreamOrder policy, std::uint64_t seed = 0);

/// Parses "as-given" | "random" | "adversarial" | "vertex-arrival".
StreamOrder parse_stream_order(std::string_view name);
std::string stream_order_name(StreamOrder policy);

}  // namespace semistream
