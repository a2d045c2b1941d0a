#include "semistream/semi_matching.hpp"

#include <algorithm>
#include <unordered_set>

#include "semistream/errors.hpp"

namespace semistream {
namespace {

std::vector<int> degrees_from_assignment(const BipartiteGraph& g, const std::vector<int>& assign) {
  if (static_cast<int>(assign.size()) != g.num_a()) {
    throw ArgumentError("assignment length does not match |A|");
  }
  std::vector<int> deg(static_cast<std::size_t>(g.num_b()), 0);
  for (int a = 0; a < g.num_a(); ++a) {
    int b = assign[static_cast<std::size_t>(a)];
    if (b < 0) continue;
    if (b >= g.num_b() || !g.has_edge(a, b)) {
      throw ArgumentError("assigned pair (" + std::to_string(a) + ", " + std::to_string(b) +
                          ") is not an edge of the graph");
    }
    ++deg[static_cast<std::size_t>(b)];
  }
  return deg;
}

}  // namespace

SemiMatching::SemiMatching(const BipartiteGraph& g, std::vector<int> assignment)
    : assignment_(std::move(assignment)) {
  deg_b_ = degrees_from_assignment(g, assignment_);
  for (int d : deg_b_) degmax_ = std::max(degmax_, d);
  for (int b : assignment_) {
    if (b >= 0) ++size_;
  }
}

long long SemiMatching::completion_cost() const {
  long long cost = 0;
  for (int d : deg_b_) cost += static_cast<long long>(d) * (d + 1) / 2;
  return cost;
}

std::vector<int> SemiMatching::covered_a() const {
  std::vector<int> out;
  for (int a = 0; a < num_a(); ++a) {
    if (covers(a)) out.push_back(a);
  }
  return out;
}

std::vector<Edge> SemiMatching::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (int a = 0; a < num_a(); ++a) {
    if (covers(a)) out.push_back(Edge{a, matched_b(a)});
  }
  return out;
}

std::vector<int> SemiMatching::edge_ids_in(const BipartiteGraph& g) const {
  std::vector<int> ids;
  ids.reserve(static_cast<std::size_t>(size_));
  for (int a = 0; a < num_a(); ++a) {
    if (!covers(a)) continue;
    int id = g.find_edge(a, matched_b(a));
    if (id < 0) {
      throw ArgumentError("assigned pair (" + std::to_string(a) + ", " +
                          std::to_string(matched_b(a)) + ") missing from target graph");
    }
    ids.push_back(id);
  }
  return ids;
}

IncompleteSemiMatching::IncompleteSemiMatching(const BipartiteGraph& g,
                                               std::vector<int> assignment, int cap)
    : assignment_(std::move(assignment)), cap_(cap) {
  if (cap < 0) throw ArgumentError("degree cap must be >= 0");
  deg_b_ = degrees_from_assignment(g, assignment_);
  for (int b = 0; b < g.num_b(); ++b) {
    int d = deg_b_[static_cast<std::size_t>(b)];
    degmax_ = std::max(degmax_, d);
    if (d > cap_) {
      throw ArgumentError("B vertex " + std::to_string(b) + " has degree " + std::to_string(d) +
                          " above cap " + std::to_string(cap_));
    }
  }
  for (int b : assignment_) {
    if (b >= 0) ++size_;
  }
}

std::vector<int> IncompleteSemiMatching::covered_a() const {
  std::vector<int> out;
  for (int a = 0; a < num_a(); ++a) {
    if (covers(a)) out.push_back(a);
  }
  return out;
}

std::vector<Edge> IncompleteSemiMatching::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (int a = 0; a < num_a(); ++a) {
    if (covers(a)) out.push_back(Edge{a, matched_b(a)});
  }
  return out;
}

bool is_valid_deg_min_path(const BipartiteGraph& g, const SemiMatching& s, const DegMinPath& path,
                           std::string* why) {
  auto fail = [&](const std::string& reason) {
    if (why) *why = reason;
    return false;
  };
  const int k = static_cast<int>(path.b_nodes.size());
  if (k < 2 || static_cast<int>(path.a_nodes.size()) != k - 1) {
    return fail("path must have k >= 2 B nodes and k - 1 A nodes");
  }
  std::unordered_set<int> seen_b(path.b_nodes.begin(), path.b_nodes.end());
  if (static_cast<int>(seen_b.size()) != k) return fail("repeated B node");
  std::unordered_set<int> seen_a(path.a_nodes.begin(), path.a_nodes.end());
  if (seen_a.size() != path.a_nodes.size()) return fail("repeated A node");

  for (int i = 0; i + 1 < k; ++i) {
    int a = path.a_nodes[static_cast<std::size_t>(i)];
    int b = path.b_nodes[static_cast<std::size_t>(i)];
    int b_next = path.b_nodes[static_cast<std::size_t>(i + 1)];
    if (a < 0 || a >= s.num_a() || b < 0 || b >= s.num_b() || b_next < 0 || b_next >= s.num_b()) {
      return fail("path vertex out of range");
    }
    if (s.matched_b(a) != b) return fail("(a_i, b_i) must be a semi-matching edge");
    if (!g.has_edge(a, b_next)) return fail("(a_i, b_{i+1}) must be a graph edge");
    // matched_b(a) == b != b_next already guarantees (a_i, b_{i+1}) is outside S
  }

  auto deg = [&s](int idx) { return s.degree_of_b(idx); };
  if (k == 2) {
    if (deg(path.b_nodes[0]) < deg(path.b_nodes[1]) + 2) {
      return fail("endpoint degrees must differ by at least 2");
    }
    return true;
  }
  if (deg(path.b_nodes[0]) <= deg(path.b_nodes[1])) return fail("first step must strictly descend");
  for (int i = 1; i + 2 < k; ++i) {
    if (deg(path.b_nodes[static_cast<std::size_t>(i)]) <
        deg(path.b_nodes[static_cast<std::size_t>(i + 1)])) {
      return fail("interior degrees must be non-increasing");
    }
  }
  if (deg(path.b_nodes[static_cast<std::size_t>(k - 2)]) <=
      deg(path.b_nodes[static_cast<std::size_t>(k - 1)])) {
    return fail("last step must strictly descend");
  }
  return true;
}

}  // namespace semistream
