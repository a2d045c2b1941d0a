#pragma once

#include <span>
#include <utility>
#include <vector>

namespace semistream {

/// An edge of a bipartite graph; both endpoints are 0-indexed.
struct Edge {
  int a = 0;
  int b = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Immutable bipartite graph G = (A, B, E) with n = |A| and m = |B|.
///
/// Endpoints are range-checked at construction and duplicate edges collapse
/// silently, keeping the first occurrence (simple graphs throughout).
/// Instances are safe to share read-only across threads.
class BipartiteGraph {
 public:
  BipartiteGraph(int num_a, int num_b, std::vector<Edge> edges = {});

  int num_a() const { return n_; }
  int num_b() const { return m_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }

  /// Incident edge ids in insertion order.
  const std::vector<int>& edge_ids_of_a(int a) const { return by_a_[static_cast<std::size_t>(a)]; }
  const std::vector<int>& edge_ids_of_b(int b) const { return by_b_[static_cast<std::size_t>(b)]; }

  /// (b, edge id) pairs of an A vertex, sorted by b. Canonical iteration order
  /// for the deterministic solvers.
  const std::vector<std::pair<int, int>>& sorted_adj_a(int a) const {
    return sorted_a_[static_cast<std::size_t>(a)];
  }

  int degree_a(int a) const { return static_cast<int>(by_a_[static_cast<std::size_t>(a)].size()); }
  int degree_b(int b) const { return static_cast<int>(by_b_[static_cast<std::size_t>(b)].size()); }

  /// Edge id of (a, b), or -1.
  int find_edge(int a, int b) const;
  bool has_edge(int a, int b) const { return find_edge(a, b) >= 0; }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> by_a_;
  std::vector<std::vector<int>> by_b_;
  std::vector<std::vector<std::pair<int, int>>> sorted_a_;
};

/// A subset E' of a parent graph's edges, kept as sorted unique edge ids.
/// Holds a pointer to the parent graph, which must outlive the subset.
class EdgeSubset {
 public:
  EdgeSubset(const BipartiteGraph& g, std::vector<int> edge_ids);

  const BipartiteGraph& graph() const { return *g_; }
  const std::vector<int>& ids() const { return ids_; }
  int size() const { return static_cast<int>(ids_.size()); }
  bool contains(int edge_id) const;

  std::vector<int> degrees_a() const;  // deg_{E'}(a) per A vertex
  std::vector<int> degrees_b() const;  // deg_{E'}(b) per B vertex
  int degmax() const;

  std::vector<int> covered_a() const;  // A(E'), sorted
  std::vector<int> covered_b() const;  // B(E'), sorted

  /// E'|_{A' x B'}: member edges with both endpoints in the given sets.
  EdgeSubset restricted(std::span<const int> a_keep, std::span<const int> b_keep) const;
  /// E'|_{A' x B}: member edges whose A endpoint lies in a_keep.
  EdgeSubset restricted_to_a(std::span<const int> a_keep) const;

  /// New graph with the same vertex counts and only the member edges.
  BipartiteGraph to_graph() const;

 private:
  const BipartiteGraph* g_;
  std::vector<int> ids_;
};

}  // namespace semistream
