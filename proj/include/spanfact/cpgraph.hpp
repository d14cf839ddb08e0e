#pragma once

#include <string>
#include <vector>

#include "spanfact/digraph.hpp"
#include "spanfact/factorization.hpp"
#include "spanfact/schedule.hpp"

namespace spanfact {

/// Cycle-prefix digraph G(d, D): vertices are the length-D sequences of
/// distinct symbols from {1, ..., d+1} in lexicographic order. Out-edges from
/// x are the rotations R_k (x_k moved to the front, 2 <= k <= D) and the
/// shift-ins S_m (m prepended, last symbol dropped) for the d+1-D symbols m
/// missing from x.
Digraph build_cp(int d, int D);

/// The length-D symbol sequence of vertex `index` in build_cp(d, D).
std::vector<int> cp_vertex_sequence(int d, int D, int index);
/// Display form: concatenated digits when d+1 <= 9, else comma separated.
std::string cp_vertex_label(const std::vector<int>& seq);

/// The 1-factorization of G(d, D): F_j = R_{j+1} for j < D, and the shift-in
/// edges partitioned by the cyclic complement rule. At vertex x the missing
/// symbols are indexed y_0, y_1, ... starting from the first one after x_D in
/// the cyclic order on {1, ..., d+1}, and F_{D+j} applies S_{y_j}. Every
/// factor is verified to be a permutation.
Factorization cp_factorization(int d, int D);

/// Shortest-path tree from the base vertex 12...D with the (c, t) labels that
/// drive the growth rule: at a node labeled (c, t) with t < D there is an
/// out-edge F_j for every j >= t except j == t when c == 1, and the child
/// label is (c, t+1) when j >= t+c, else (c-1, t+1).
struct CpTree {
  struct Node {
    int vertex = 0;  // index into build_cp(d, D)
    int c = 0;       // 0 for the root
    int t = 0;
    int parent = -1;
    int letter = 0;  // 1-based factor index of the parent edge, 0 for root
    std::vector<int> children;
  };
  int d = 0;
  int D = 0;
  std::vector<Node> nodes;  // breadth-first order; nodes[0] is the root

  /// Root-to-node factor sequences, one word per node, in node order.
  WordList words() const;
  /// Number of nodes (including the root as depth 0) at each depth 0..D.
  std::vector<long long> nodes_per_depth() const;
};

CpTree grow_tree(int d, int D);

/// Minimum schedule for the cycle-prefix word list: distinct times for the
/// F_d occurrences, blocked by tree layer, and every other occurrence shares
/// the time of an F_d occurrence leaving the same tree node (k-th word below
/// the F_i child paired with the k-th word below the F_d child). The result
/// has makespan equal to the F_d occurrence count.
Schedule cp_min_schedule(int d, int D);

}  // namespace spanfact
