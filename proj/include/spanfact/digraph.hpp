#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "spanfact/errors.hpp"

namespace spanfact {

/// Ordered pair of vertex indices. Parallel edges are allowed, self-loops are
/// not.
struct Edge {
  int tail = 0;
  int head = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable directed (multi)graph. The edge order is fixed at construction
/// and preserved by serialization, so identical constructions produce
/// byte-identical artifacts.
class Digraph {
 public:
  Digraph(int n, std::vector<Edge> edges,
          std::optional<std::vector<std::string>> vertex_labels = std::nullopt);

  int vertex_count() const { return n_; }
  long long edge_count() const { return static_cast<long long>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::optional<std::vector<std::string>>& vertex_labels() const {
    return labels_;
  }

  /// True when no (tail, head) pair occurs more than once.
  bool is_elementary() const;

  /// Heads of the out-edges of each vertex, in edge order.
  std::vector<std::vector<int>> out_adjacency() const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::optional<std::vector<std::string>> labels_;
};

/// Distance census of a strongly connected digraph: counts[k-1] is the number
/// of ordered vertex pairs at directed distance k, per_vertex[v][k] the number
/// of vertices at distance k from v (column 0 counts v itself).
struct DistanceProfile {
  int n = 0;
  int diameter = 0;
  std::vector<long long> counts;
  std::vector<std::vector<long long>> per_vertex;

  long long total_pairs() const;
  /// Sum over k of k * counts[k-1], i.e. the sum of all pairwise distances.
  long long weighted_sum() const;
};

/// Ceiling of a/b for a >= 0, b > 0 in exact integer arithmetic.
constexpr long long ceil_div(long long a, long long b) {
  return (a + b - 1) / b;
}

/// Returns d when every vertex has in-degree == out-degree == d, otherwise
/// throws NotRegularError naming the first offending vertex.
int check_regular(const Digraph& g);

/// Breadth-first distances from every source. Throws DisconnectedError when
/// some vertex is unreachable. `threads` > 1 fans the sweeps out over worker
/// threads; the result is identical to the single-threaded run.
DistanceProfile distance_profile(const Digraph& g, int threads = 1);

/// Distance-based lower bound ceil(sum_k k*N_k / (n*d)) for a regular,
/// strongly connected digraph.
long long theta(const Digraph& g);
long long theta(const DistanceProfile& profile, int d);

}  // namespace spanfact
