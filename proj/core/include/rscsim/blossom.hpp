#pragma once

#include <cstdint>
#include <vector>

namespace rscsim {

/// Exact minimum-weight perfect matching on a dense even-order graph via
/// Edmonds' blossom algorithm (primal-dual with odd-set contraction).
///
/// Weights are nonnegative 64-bit integers; internally the solver works on
/// doubled complemented weights so that every dual update stays integral and
/// every slack comparison is exact. Deterministic: identical inputs give the
/// identical matching.
class BlossomMatcher {
 public:
  /// n must be even. All pair weights default to 0.
  explicit BlossomMatcher(int n);

  /// Sets the symmetric weight of pair {u, v} (0-indexed, u != v).
  void set_weight(int u, int v, std::int64_t w);

  /// Returns mate[v] for every vertex. Every vertex is matched.
  std::vector<int> solve();

 private:
  struct Edge {
    int u = 0;
    int v = 0;
    std::int64_t w = 0;
  };

  std::int64_t delta(const Edge& e) const { return lab_[e.u] + lab_[e.v] - e.w * 2; }
  void update_slack(int u, int x);
  void set_slack(int x);
  void push_outer(int x);
  void set_st(int x, int b);
  int path_offset(int b, int xr);
  void set_match(int u, int v);
  void augment(int u, int v);
  int find_lca(int u, int v);
  void add_blossom(int u, int lca, int v);
  void expand_blossom(int b);
  bool on_found_edge(const Edge& e);
  bool grow_and_augment();

  int n_ = 0;    // original vertices, 1..n_
  int n_x_ = 0;  // highest node slot in use (vertices + blossoms)
  std::vector<std::vector<Edge>> g_;
  std::vector<std::int64_t> lab_;
  std::vector<int> match_, slack_, st_, pa_, label_, vis_;
  std::vector<std::vector<int>> flower_, flower_from_;
  std::vector<int> queue_;
  std::size_t queue_head_ = 0;
  int vis_stamp_ = 0;
};

}  // namespace rscsim
