#include "maxflow.hpp"

#include <limits>

namespace semistream::detail {

bool MaxFlow::bfs(int s, int t) {
  level_.assign(adj_.size(), -1);
  std::vector<int> queue;
  queue.reserve(adj_.size());
  level_[static_cast<std::size_t>(s)] = 0;
  queue.push_back(s);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (const Arc& arc : adj_[static_cast<std::size_t>(v)]) {
      if (arc.cap > 0 && level_[static_cast<std::size_t>(arc.to)] < 0) {
        level_[static_cast<std::size_t>(arc.to)] = level_[static_cast<std::size_t>(v)] + 1;
        queue.push_back(arc.to);
      }
    }
  }
  return level_[static_cast<std::size_t>(t)] >= 0;
}

long long MaxFlow::dfs(int v, int t, long long f) {
  if (v == t) return f;
  for (int& i = iter_[static_cast<std::size_t>(v)];
       i < static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); ++i) {
    Arc& arc = adj_[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)];
    if (arc.cap <= 0 ||
        level_[static_cast<std::size_t>(arc.to)] != level_[static_cast<std::size_t>(v)] + 1) {
      continue;
    }
    long long pushed = dfs(arc.to, t, f < arc.cap ? f : arc.cap);
    if (pushed > 0) {
      arc.cap -= pushed;
      adj_[static_cast<std::size_t>(arc.to)][static_cast<std::size_t>(arc.rev)].cap += pushed;
      return pushed;
    }
  }
  return 0;
}

long long MaxFlow::run(int source, int sink) {
  long long total = 0;
  while (bfs(source, sink)) {
    iter_.assign(adj_.size(), 0);
    while (long long pushed = dfs(source, sink, std::numeric_limits<long long>::max())) {
      total += pushed;
    }
  }
  return total;
}

std::vector<char> MaxFlow::source_side(int source) const {
  std::vector<char> seen(adj_.size(), 0);
  std::vector<int> queue;
  seen[static_cast<std::size_t>(source)] = 1;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (const Arc& arc : adj_[static_cast<std::size_t>(v)]) {
      if (arc.cap > 0 && !seen[static_cast<std::size_t>(arc.to)]) {
        seen[static_cast<std::size_t>(arc.to)] = 1;
        queue.push_back(arc.to);
      }
    }
  }
  return seen;
}

}  // namespace semistream::detail
