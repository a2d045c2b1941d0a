#pragma once

// Internal Dinic max-flow used by the exact solvers (b-matching reduction for
// isemi_max, parametric cuts for min_expansion). Deterministic: arcs are
// explored in insertion order.

#include <vector>

namespace semistream::detail {

class MaxFlow {
 public:
  explicit MaxFlow(int num_nodes) : adj_(static_cast<std::size_t>(num_nodes)) {}

  /// Adds a directed arc with the given capacity; returns a handle usable
  /// with flow_on(). The reverse arc has capacity 0.
  int add_edge(int from, int to, long long cap) {
    int handle = static_cast<int>(handles_.size());
    handles_.emplace_back(from, static_cast<int>(adj_[static_cast<std::size_t>(from)].size()));
    adj_[static_cast<std::size_t>(from)].push_back(
        Arc{to, cap, static_cast<int>(adj_[static_cast<std::size_t>(to)].size())});
    adj_[static_cast<std::size_t>(to)].push_back(
        Arc{from, 0, static_cast<int>(adj_[static_cast<std::size_t>(from)].size()) - 1});
    caps_.push_back(cap);
    return handle;
  }

  long long run(int source, int sink);

  long long flow_on(int handle) const {
    auto [node, idx] = handles_[static_cast<std::size_t>(handle)];
    return caps_[static_cast<std::size_t>(handle)] -
           adj_[static_cast<std::size_t>(node)][static_cast<std::size_t>(idx)].cap;
  }

  /// Nodes reachable from `source` in the residual graph; call after run().
  std::vector<char> source_side(int source) const;

 private:
  struct Arc {
    int to;
    long long cap;
    int rev;
  };

  bool bfs(int s, int t);
  long long dfs(int v, int t, long long f);

  std::vector<std::vector<Arc>> adj_;
  std::vector<int> level_;
  std::vector<int> iter_;
  std::vector<std::pair<int, int>> handles_;
  std::vector<long long> caps_;
};

}  // namespace semistream::detail
