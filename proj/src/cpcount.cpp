#include "spanfact/cpcount.hpp"

#include <algorithm>

namespace spanfact {

long long falling_factorial(long long n, long long k) {
  if (k == 0) return 1;
  if (k < 0 || n < 0) return 0;
  long long product = 1;
  for (long long i = 0; i < k; ++i) product *= n - i;
  return product;
}

long long leaf_count_rec(int c, int t, int k, int d) {
  if (t > k) return 0;
  if (c < 1 || c > d - t + 1) return 0;
  if (t == k) return 1;
  return c * leaf_count_rec(c - 1, t + 1, k, d) +
         (d + 1 - t - c) * leaf_count_rec(c, t + 1, k, d);
}

long long leaf_count_closed(int c, int t, int k, int d) {
  if (t > k) return 0;
  if (c < 1 || c > d - t + 1) return 0;
  if (c > k - t) return falling_factorial(d - t + 1, k - t);
  return falling_factorial(d - t + 1, k - t) -
         falling_factorial(k - t, c) *
             falling_factorial(d - t + 1 - c, k - t - c);
}

long long label_count_closed(int c, int t, int d) {
  if (t < 1 || c < 1 || c > d - t + 1) return 0;
  return falling_factorial(d + 1, t - 1);
}

long long factor_edge_count(int j, int c, int t, int d) {
  const bool present = (t < j && j <= d) || (j == t && c != 1);
  return present ? label_count_closed(c, t, d) : 0;
}

long long step_count_rec(int j, int t, int k, int d) {
  if (t < 1 || t > k || j < 1 || j > d)
    throw UsageError("step count arguments out of range");
  if (t == 1) return leaf_count_rec(j, 1, k, d);
  if (j < t - 1) return 0;
  long long sum = 0;
  for (int c = 1; c <= d - t + 1; ++c) sum += leaf_count_rec(c, t, k, d);
  sum += leaf_count_rec(j - t + 1, t, k, d);
  // j == t contributes leaf_count(0, ...) == 0, matching the exclusion of
  // F_t at nodes labeled (1, t).
  return falling_factorial(d + 1, t - 2) * sum;
}

long long step_count_closed(int j, int t, int k, int d) {
  if (t < 1 || t > k || j < 1 || j > d)
    throw UsageError("step count arguments out of range");
  if (t == 1) {
    if (j >= k) return falling_factorial(d, k - 1);
    return falling_factorial(d, k - 1) -
           falling_factorial(k - 1, j) * falling_factorial(d - j, k - j - 1);
  }
  if (j < t - 1) return 0;
  const long long scale = falling_factorial(d + 1, t - 2);
  if (j == t - 1 && t == k) return scale * (d - t + 1);
  if (j == t - 1)
    return scale * (d - k + 1) * falling_factorial(d - t + 2, k - t);
  const long long base =
      (d - k + 1) * falling_factorial(d - t + 2, k - t) +
      falling_factorial(d - t + 1, k - t);
  if (j >= k) return scale * base;
  return scale * (base - falling_factorial(k - t, j - t + 1) *
                             falling_factorial(d - j, k - j - 1));
}

long long mu_closed(int d, int D) {
  if (D < 2 || D > d) throw BadParamsError("require 2 <= D <= d");
  long long mu = 0;
  for (int k = 1; k <= D; ++k)
    for (int t = 1; t <= k; ++t) mu += step_count_closed(d, t, k, d);
  return mu;
}

long long theta_closed(int d, int D) {
  if (D < 2 || D > d) throw BadParamsError("require 2 <= D <= d");
  long long weighted = 0;
  for (int k = 1; k <= D; ++k)
    weighted += k * falling_factorial(d + 1, k - 1) * (d - k + 1);
  return ceil_div(weighted, d);
}

std::optional<MonotoneCounterexample> check_monotone(int d, int D) {
  for (int k = 1; k <= D; ++k)
    for (int t = 1; t <= k; ++t)
      for (int j = std::max(1, t - 1); j < d; ++j)
        if (step_count_closed(j + 1, t, k, d) < step_count_closed(j, t, k, d))
          return MonotoneCounterexample{j, t, k};
  return std::nullopt;
}

TreeCensus census_tree(CpTree tree) {
  TreeCensus census;
  census.tree = std::move(tree);
  const CpTree& t = census.tree;
  const int n = static_cast<int>(t.nodes.size());

  for (int id = 1; id < n; ++id)
    census.label_nodes[{t.nodes[id].c, t.nodes[id].t}].push_back(id);

  census.descendants_at_depth.assign(n, std::vector<long long>(t.D + 1, 0));
  for (int id = n - 1; id >= 0; --id) {
    census.descendants_at_depth[id][t.nodes[id].t] = 1;
    for (int ch : t.nodes[id].children)
      for (int k = 0; k <= t.D; ++k)
        census.descendants_at_depth[id][k] +=
            census.descendants_at_depth[ch][k];
  }

  census.words_by_length.assign(t.D + 1, {});
  for (int id = 0; id < n; ++id)
    census.words_by_length[t.nodes[id].t].push_back(id);
  return census;
}

std::optional<long long> TreeCensus::leaf_count(int c, int t, int k) const {
  const auto it = label_nodes.find({c, t});
  if (it == label_nodes.end()) return std::nullopt;
  long long value = -1;
  for (int id : it->second) {
    const long long here = descendants_at_depth[id][k];
    if (value < 0) value = here;
    if (here != value) return std::nullopt;  // label does not determine it
  }
  return value;
}

long long TreeCensus::label_count(int c, int t) const {
  const auto it = label_nodes.find({c, t});
  return it == label_nodes.end() ? 0
                                 : static_cast<long long>(it->second.size());
}

long long TreeCensus::factor_edges_from_label(int j, int c, int t) const {
  const auto it = label_nodes.find({c, t});
  if (it == label_nodes.end()) return 0;
  long long count = 0;
  for (int id : it->second)
    for (int ch : tree.nodes[id].children)
      if (tree.nodes[ch].letter == j) ++count;
  return count;
}

long long TreeCensus::step_count(int j, int t, int k) const {
  if (k < 0 || k >= static_cast<int>(words_by_length.size())) return 0;
  long long count = 0;
  for (int id : words_by_length[k]) {
    // The t-th letter of word id is the parent letter of its depth-t
    // ancestor.
    int cur = id;
    while (tree.nodes[cur].t > t) cur = tree.nodes[cur].parent;
    if (tree.nodes[cur].letter == j) ++count;
  }
  return count;
}

long long TreeCensus::factor_occurrences(int j) const {
  // A tree edge labeled j is crossed once by every word that descends through
  // its head, so each head contributes its subtree size.
  long long count = 0;
  for (int id = 1; id < static_cast<int>(tree.nodes.size()); ++id) {
    if (tree.nodes[id].letter != j) continue;
    for (int k = tree.nodes[id].t; k <= tree.D; ++k)
      count += descendants_at_depth[id][k];
  }
  return count;
}

}  // namespace spanfact
