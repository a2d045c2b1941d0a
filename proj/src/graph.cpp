#include "semistream/graph.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "semistream/errors.hpp"

namespace semistream {

BipartiteGraph::BipartiteGraph(int num_a, int num_b, std::vector<Edge> edges)
    : n_(num_a), m_(num_b) {
  if (num_a < 0 || num_b < 0) {
    throw ArgumentError("vertex counts must be non-negative");
  }
  edges_.reserve(edges.size());
  std::unordered_set<long long> seen;
  seen.reserve(edges.size() * 2);
  for (const Edge& e : edges) {
    if (e.a < 0 || e.a >= n_ || e.b < 0 || e.b >= m_) {
      throw ArgumentError("edge (" + std::to_string(e.a) + ", " + std::to_string(e.b) +
                          ") out of range for n=" + std::to_string(n_) +
                          ", m=" + std::to_string(m_));
    }
    long long key = static_cast<long long>(e.a) * m_ + e.b;
    if (seen.insert(key).second) {
      edges_.push_back(e);
    }
  }
  by_a_.resize(static_cast<std::size_t>(n_));
  by_b_.resize(static_cast<std::size_t>(m_));
  sorted_a_.resize(static_cast<std::size_t>(n_));
  for (int id = 0; id < static_cast<int>(edges_.size()); ++id) {
    const Edge& e = edges_[static_cast<std::size_t>(id)];
    by_a_[static_cast<std::size_t>(e.a)].push_back(id);
    by_b_[static_cast<std::size_t>(e.b)].push_back(id);
    sorted_a_[static_cast<std::size_t>(e.a)].emplace_back(e.b, id);
  }
  for (auto& adj : sorted_a_) {
    std::sort(adj.begin(), adj.end());
  }
}

int BipartiteGraph::find_edge(int a, int b) const {
  if (a < 0 || a >= n_ || b < 0 || b >= m_) return -1;
  const auto& adj = sorted_a_[static_cast<std::size_t>(a)];
  auto it = std::lower_bound(adj.begin(), adj.end(), std::make_pair(b, -1));
  if (it != adj.end() && it->first == b) return it->second;
  return -1;
}

EdgeSubset::EdgeSubset(const BipartiteGraph& g, std::vector<int> edge_ids)
    : g_(&g), ids_(std::move(edge_ids)) {
  for (int id : ids_) {
    if (id < 0 || id >= g.num_edges()) {
      throw ArgumentError("edge id " + std::to_string(id) + " not in parent graph");
    }
  }
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool EdgeSubset::contains(int edge_id) const {
  return std::binary_search(ids_.begin(), ids_.end(), edge_id);
}

std::vector<int> EdgeSubset::degrees_a() const {
  std::vector<int> deg(static_cast<std::size_t>(g_->num_a()), 0);
  for (int id : ids_) ++deg[static_cast<std::size_t>(g_->edge(id).a)];
  return deg;
}

std::vector<int> EdgeSubset::degrees_b() const {
  std::vector<int> deg(static_cast<std::size_t>(g_->num_b()), 0);
  for (int id : ids_) ++deg[static_cast<std::size_t>(g_->edge(id).b)];
  return deg;
}

int EdgeSubset::degmax() const {
  auto da = degrees_a();
  auto db = degrees_b();
  int best = 0;
  for (int d : da) best = std::max(best, d);
  for (int d : db) best = std::max(best, d);
  return best;
}

std::vector<int> EdgeSubset::covered_a() const {
  std::vector<char> hit(static_cast<std::size_t>(g_->num_a()), 0);
  for (int id : ids_) hit[static_cast<std::size_t>(g_->edge(id).a)] = 1;
  std::vector<int> out;
  for (int a = 0; a < g_->num_a(); ++a) {
    if (hit[static_cast<std::size_t>(a)]) out.push_back(a);
  }
  return out;
}

std::vector<int> EdgeSubset::covered_b() const {
  std::vector<char> hit(static_cast<std::size_t>(g_->num_b()), 0);
  for (int id : ids_) hit[static_cast<std::size_t>(g_->edge(id).b)] = 1;
  std::vector<int> out;
  for (int b = 0; b < g_->num_b(); ++b) {
    if (hit[static_cast<std::size_t>(b)]) out.push_back(b);
  }
  return out;
}

EdgeSubset EdgeSubset::restricted(std::span<const int> a_keep, std::span<const int> b_keep) const {
  std::vector<char> amask(static_cast<std::size_t>(g_->num_a()), 0);
  std::vector<char> bmask(static_cast<std::size_t>(g_->num_b()), 0);
  for (int a : a_keep) amask.at(static_cast<std::size_t>(a)) = 1;
  for (int b : b_keep) bmask.at(static_cast<std::size_t>(b)) = 1;
  std::vector<int> kept;
  for (int id : ids_) {
    const Edge& e = g_->edge(id);
    if (amask[static_cast<std::size_t>(e.a)] && bmask[static_cast<std::size_t>(e.b)]) {
      kept.push_back(id);
    }
  }
  return EdgeSubset(*g_, std::move(kept));
}

EdgeSubset EdgeSubset::restricted_to_a(std::span<const int> a_keep) const {
  std::vector<char> amask(static_cast<std::size_t>(g_->num_a()), 0);
  for (int a : a_keep) amask.at(static_cast<std::size_t>(a)) = 1;
  std::vector<int> kept;
  for (int id : ids_) {
    if (amask[static_cast<std::size_t>(g_->edge(id).a)]) kept.push_back(id);
  }
  return EdgeSubset(*g_, std::move(kept));
}

BipartiteGraph EdgeSubset::to_graph() const {
  std::vector<Edge> kept;
  kept.reserve(ids_.size());
  for (int id : ids_) kept.push_back(g_->edge(id));
  return BipartiteGraph(g_->num_a(), g_->num_b(), std::move(kept));
}

}  // namespace semistream
