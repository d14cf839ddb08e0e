#pragma once

#include <map>
#include <optional>
#include <vector>

#include "spanfact/cpgraph.hpp"

namespace spanfact {

/// Falling factorial n(n-1)...(n-k+1) with the out-of-bounds convention:
/// 1 when k == 0, 0 when k < 0 or n < 0 (a product crossing zero is zero
/// anyway).
long long falling_factorial(long long n, long long k);

/// Number of leaves at distance k below a tree node labeled (c, t), by the
/// two-branch recursion c*T(c-1,t+1) + (d+1-t-c)*T(c,t+1) with T(c,k) = 1.
/// Zero outside 1 <= c <= d-t+1 or t > k.
long long leaf_count_rec(int c, int t, int k, int d);

/// Same quantity in closed form: (d-t+1)_{k-t} when k-t < c <= d-t+1, and
/// (d-t+1)_{k-t} - (k-t)_c (d-t+1-c)_{k-t-c} when 1 <= c <= k-t.
long long leaf_count_closed(int c, int t, int k, int d);

/// Number of tree nodes labeled (c, t): (d+1)_{t-1} for 1 <= c <= d-t+1,
/// zero otherwise.
long long label_count_closed(int c, int t, int d);

/// Number of F_j tree edges leaving nodes labeled (c, t): equals the label
/// count when the growth rule admits F_j there (t < j <= d, or j == t with
/// c != 1), zero otherwise.
long long factor_edge_count(int j, int c, int t, int d);

/// Number of length-k words using F_j as the t-th step (1-based), via the
/// label recursion. Requires 1 <= t <= k and 1 <= j <= d.
long long step_count_rec(int j, int t, int k, int d);

/// The same count in closed form, all expanded cases.
long long step_count_closed(int j, int t, int k, int d);

/// Total occurrences of the most used factor F_d across all words of the
/// (d, D) tree: sum over k <= D and t <= k of the step counts of F_d.
long long mu_closed(int d, int D);

/// Distance-based bound ceil((1/d) * sum_k k (d+1)_{k-1} (d-k+1)) for
/// G(d, D).
long long theta_closed(int d, int D);

struct MonotoneCounterexample {
  int j = 0;
  int t = 0;
  int k = 0;
};

/// Checks step_count(j+1, t) >= step_count(j, t) for all t-1 <= j < d,
/// t <= k <= D. Returns the first violation, if any.
std::optional<MonotoneCounterexample> check_monotone(int d, int D);

/// Brute-force census of a grown tree, the independent oracle for every
/// closed form above.
struct TreeCensus {
  CpTree tree;
  /// label_nodes[(c,t)] = node ids with that label.
  std::map<std::pair<int, int>, std::vector<int>> label_nodes;
  /// descendants_at_depth[id][k] = descendants of node id at tree depth k.
  std::vector<std::vector<long long>> descendants_at_depth;
  /// words_by_length[k] = node (= word) ids at depth k.
  std::vector<std::vector<int>> words_by_length;

  /// Leaf count at distance k from (c, t) nodes; nullopt when no such node
  /// exists or the per-node counts disagree (they never should).
  std::optional<long long> leaf_count(int c, int t, int k) const;
  long long label_count(int c, int t) const;
  /// Tree edges in factor j whose tail is labeled (c, t).
  long long factor_edges_from_label(int j, int c, int t) const;
  /// Length-k words using F_j as the (1-based) t-th letter.
  long long step_count(int j, int t, int k) const;
  /// Occurrences of F_j over all (word, position) pairs.
  long long factor_occurrences(int j) const;
};

TreeCensus census_tree(CpTree tree);

}  // namespace spanfact
