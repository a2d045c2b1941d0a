#pragma once

#include <string>
#include <vector>

#include "semistream/graph.hpp"

namespace semistream {

/// A semi-matching over some active subset A' of A: every a in A' is assigned
/// to exactly one neighboring b. Entries of -1 mark vertices outside A'.
/// Construction validates every assigned pair against the graph and freezes
/// the per-b degree profile.
class SemiMatching {
 public:
  SemiMatching(const BipartiteGraph& g, std::vector<int> assignment);

  int num_a() const { return static_cast<int>(assignment_.size()); }
  int num_b() const { return static_cast<int>(deg_b_.size()); }

  const std::vector<int>& assignment() const { return assignment_; }
  int matched_b(int a) const { return assignment_[static_cast<std::size_t>(a)]; }
  bool covers(int a) const { return matched_b(a) >= 0; }

  int size() const { return size_; }             // |A'|
  bool complete() const { return size_ == num_a(); }

  const std::vector<int>& degree_profile() const { return deg_b_; }
  int degree_of_b(int b) const { return deg_b_[static_cast<std::size_t>(b)]; }
  int degmax() const { return degmax_; }

  /// Sum over b of deg(deg + 1) / 2, the total completion time cost.
  long long completion_cost() const;

  std::vector<int> covered_a() const;
  std::vector<Edge> edges() const;
  /// Edge ids of the assigned pairs within the given graph (must contain them).
  std::vector<int> edge_ids_in(const BipartiteGraph& g) const;

 private:
  std::vector<int> assignment_;
  std::vector<int> deg_b_;
  int degmax_ = 0;
  int size_ = 0;
};

/// A partial assignment with a per-b degree cap d (deg_S(b) <= d for all b).
class IncompleteSemiMatching {
 public:
  IncompleteSemiMatching(const BipartiteGraph& g, std::vector<int> assignment, int cap);

  int num_a() const { return static_cast<int>(assignment_.size()); }
  int num_b() const { return static_cast<int>(deg_b_.size()); }
  int cap() const { return cap_; }

  const std::vector<int>& assignment() const { return assignment_; }
  int matched_b(int a) const { return assignment_[static_cast<std::size_t>(a)]; }
  bool covers(int a) const { return matched_b(a) >= 0; }

  int size() const { return size_; }
  const std::vector<int>& degree_profile() const { return deg_b_; }
  int degmax() const { return degmax_; }

  std::vector<int> covered_a() const;
  std::vector<Edge> edges() const;

 private:
  std::vector<int> assignment_;
  std::vector<int> deg_b_;
  int cap_ = 0;
  int degmax_ = 0;
  int size_ = 0;
};

/// A degree-minimizing path (b_1, a_1, b_2, ..., a_{k-1}, b_k):
///   (a_i, b_i) in S, (a_i, b_{i+1}) in E \ S,
///   deg(b_1) > deg(b_2) >= ... >= deg(b_{k-1}) > deg(b_k),
/// and for the length-2 case deg(b_1) >= deg(b_2) + 2 (flipping must strictly
/// reduce the completion cost). Flipping moves each a_i from b_i to b_{i+1}.
struct DegMinPath {
  std::vector<int> b_nodes;  // k >= 2 entries
  std::vector<int> a_nodes;  // k - 1 entries

  int hops() const { return static_cast<int>(a_nodes.size()); }
  int length_in_edges() const { return 2 * hops(); }
};

/// Checks all degree-minimizing-path conditions of `path` against S.
/// On failure returns false and, if `why` is non-null, stores the reason.
bool is_valid_deg_min_path(const BipartiteGraph& g, const SemiMatching& s, const DegMinPath& path,
                           std::string* why = nullptr);

}  // namespace semistream
