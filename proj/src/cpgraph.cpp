#include "spanfact/cpgraph.hpp"

#include <algorithm>
#include <map>

namespace spanfact {

namespace {

void check_cp_params(int d, int D) {
  if (D < 2 || D > d)
    throw BadParamsError("cycle-prefix parameters require 2 <= D <= d, got d=" +
                         std::to_string(d) + " D=" + std::to_string(D));
}

// All length-D sequences of distinct symbols from {1..d+1}, lexicographic.
std::vector<std::vector<int>> cp_vertices(int d, int D) {
  std::vector<std::vector<int>> out;
  std::vector<int> seq;
  std::vector<char> taken(d + 2, 0);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(seq.size()) == D) {
      out.push_back(seq);
      return;
    }
    for (int s = 1; s <= d + 1; ++s) {
      if (taken[s]) continue;
      taken[s] = 1;
      seq.push_back(s);
      self(self);
      seq.pop_back();
      taken[s] = 0;
    }
  };
  rec(rec);
  return out;
}

std::vector<int> rotate_to_front(const std::vector<int>& x, int k) {
  // R_k: x_k x_1 ... x_{k-1} x_{k+1} ... x_D (k is 1-based).
  std::vector<int> y;
  y.reserve(x.size());
  y.push_back(x[k - 1]);
  for (int i = 0; i < static_cast<int>(x.size()); ++i)
    if (i != k - 1) y.push_back(x[i]);
  return y;
}

std::vector<int> shift_in(const std::vector<int>& x, int m) {
  // S_m: m x_1 ... x_{D-1}.
  std::vector<int> y;
  y.reserve(x.size());
  y.push_back(m);
  for (int i = 0; i + 1 < static_cast<int>(x.size()); ++i) y.push_back(x[i]);
  return y;
}

// Missing symbols of x ordered cyclically starting after x_D.
std::vector<int> cyclic_complement(const std::vector<int>& x, int d) {
  std::vector<char> present(d + 2, 0);
  for (int s : x) present[s] = 1;
  std::vector<int> out;
  int s = x.back();
  for (int step = 0; step < d + 1; ++step) {
    s = s % (d + 1) + 1;
    if (!present[s]) out.push_back(s);
  }
  return out;
}

struct CpSpace {
  std::vector<std::vector<int>> vertices;
  std::map<std::vector<int>, int> index;
};

CpSpace cp_space(int d, int D) {
  CpSpace space;
  space.vertices = cp_vertices(d, D);
  for (int i = 0; i < static_cast<int>(space.vertices.size()); ++i)
    space.index[space.vertices[i]] = i;
  return space;
}

}  // namespace

std::vector<int> cp_vertex_sequence(int d, int D, int index) {
  check_cp_params(d, D);
  const auto verts = cp_vertices(d, D);
  if (index < 0 || index >= static_cast<int>(verts.size()))
    throw UsageError("vertex index out of range");
  return verts[index];
}

std::string cp_vertex_label(const std::vector<int>& seq) {
  std::string label;
  const bool csv =
      std::any_of(seq.begin(), seq.end(), [](int s) { return s > 9; });
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (csv && i > 0) label += ',';
    label += std::to_string(seq[i]);
  }
  return label;
}

Digraph build_cp(int d, int D) {
  check_cp_params(d, D);
  const CpSpace space = cp_space(d, D);
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  labels.reserve(space.vertices.size());
  for (const auto& x : space.vertices) labels.push_back(cp_vertex_label(x));
  // Out-edges in factor order: rotations R_2..R_D, then shift-ins following
  // the cyclic complement, so edge (d*v + j) belongs to factor j+1.
  for (int v = 0; v < static_cast<int>(space.vertices.size()); ++v) {
    const auto& x = space.vertices[v];
    for (int k = 2; k <= D; ++k)
      edges.push_back(Edge{v, space.index.at(rotate_to_front(x, k))});
    for (int m : cyclic_complement(x, d))
      edges.push_back(Edge{v, space.index.at(shift_in(x, m))});
  }
  return Digraph(static_cast<int>(space.vertices.size()), std::move(edges),
                 std::move(labels));
}

Factorization cp_factorization(int d, int D) {
  check_cp_params(d, D);
  const CpSpace space = cp_space(d, D);
  const int n = static_cast<int>(space.vertices.size());
  std::vector<std::vector<int>> succ(d, std::vector<int>(n, -1));
  for (int v = 0; v < n; ++v) {
    const auto& x = space.vertices[v];
    for (int k = 2; k <= D; ++k)
      succ[k - 2][v] = space.index.at(rotate_to_front(x, k));
    const auto missing = cyclic_complement(x, d);
    for (int j = 0; j <= d - D; ++j)
      succ[D - 1 + j][v] = space.index.at(shift_in(x, missing[j]));
  }
  for (int i = 0; i < d; ++i) {
    std::vector<char> seen(n, 0);
    for (int v = 0; v < n; ++v) {
      const int h = succ[i][v];
      if (h < 0 || seen[h])
        throw FactorNotPermutationError(
            "cycle-prefix factor " + std::to_string(i + 1) +
            " is not a permutation; the construction is broken");
      seen[h] = 1;
    }
  }
  return make_factorization(std::move(succ));
}

WordList CpTree::words() const {
  WordList wl;
  wl.d = d;
  wl.words.reserve(nodes.size());
  for (int id = 0; id < static_cast<int>(nodes.size()); ++id) {
    Word w;
    for (int cur = id; cur > 0; cur = nodes[cur].parent)
      w.letters.push_back(nodes[cur].letter);
    std::reverse(w.letters.begin(), w.letters.end());
    wl.words.push_back(std::move(w));
  }
  return wl;
}

std::vector<long long> CpTree::nodes_per_depth() const {
  std::vector<long long> counts(D + 1, 0);
  for (const Node& node : nodes) ++counts[node.t];
  return counts;
}

CpTree grow_tree(int d, int D) {
  check_cp_params(d, D);
  const Factorization f = cp_factorization(d, D);

  CpTree tree;
  tree.d = d;
  tree.D = D;
  tree.nodes.push_back(CpTree::Node{0, 0, 0, -1, 0, {}});
  // Breadth-first: nodes are appended layer by layer, children in factor
  // order, so node order is also word order.
  for (int cur = 0; cur < static_cast<int>(tree.nodes.size()); ++cur) {
    const int t = tree.nodes[cur].t;
    if (t >= D) continue;
    const int c = tree.nodes[cur].c;
    const int vertex = tree.nodes[cur].vertex;
    const int j_lo = t == 0 ? 1 : t;
    for (int j = j_lo; j <= d; ++j) {
      int child_c;
      if (t == 0) {
        child_c = j;
      } else {
        if (j == t && c == 1) continue;
        child_c = j >= t + c ? c : c - 1;
      }
      const int child = static_cast<int>(tree.nodes.size());
      tree.nodes.push_back(
          CpTree::Node{f.succ[j - 1][vertex], child_c, t + 1, cur, j, {}});
      tree.nodes[cur].children.push_back(child);
    }
  }
  return tree;
}

Schedule cp_min_schedule(int d, int D) {
  const CpTree tree = grow_tree(d, D);
  const int n_nodes = static_cast<int>(tree.nodes.size());

  // Word ids (== node ids) in each subtree, ascending. Node order is
  // breadth-first, so children come after parents and one reverse pass
  // suffices; the per-node lists stay sorted because child lists are merged
  // in ascending-id order.
  std::vector<std::vector<int>> subtree(n_nodes);
  for (int id = n_nodes - 1; id >= 0; --id) {
    subtree[id].push_back(id);
    for (int ch : tree.nodes[id].children)
      subtree[id].insert(subtree[id].end(), subtree[ch].begin(),
                         subtree[ch].end());
    std::sort(subtree[id].begin(), subtree[id].end());
  }

  // Distinct times for the F_d occurrences, blocked by layer: the occurrence
  // of F_d at position p of word w exists iff w descends through the F_d
  // child of its depth-p ancestor, and its layer is p+1.
  std::map<std::pair<int, int>, int> fd_time;  // (word, pos) -> time
  int next_time = 0;
  for (int layer = 1; layer <= D; ++layer) {
    // All F_d edges whose tail sits at depth layer-1.
    std::vector<std::pair<int, int>> occs;  // (word, pos)
    for (int id = 0; id < n_nodes; ++id) {
      const auto& node = tree.nodes[id];
      if (node.t != layer - 1) continue;
      for (int ch : node.children)
        if (tree.nodes[ch].letter == d)
          for (int w : subtree[ch]) occs.emplace_back(w, layer - 1);
    }
    std::sort(occs.begin(), occs.end());
    for (const auto& occ : occs) fd_time[occ] = ++next_time;
  }

  Schedule s;
  for (const auto& [occ, t] : fd_time) s.entries[occ] = t;

  // Everything else inherits: the k-th word through the F_i child of a node
  // shares the time of the k-th word through the F_d child of the same node.
  for (int id = 0; id < n_nodes; ++id) {
    const auto& node = tree.nodes[id];
    if (node.children.empty()) continue;
    int fd_child = -1;
    for (int ch : node.children)
      if (tree.nodes[ch].letter == d) fd_child = ch;
    if (fd_child < 0) throw InjectionInfeasibleError(id);
    for (int ch : node.children) {
      if (ch == fd_child) continue;
      if (subtree[ch].size() > subtree[fd_child].size())
        throw InjectionInfeasibleError(id);
      for (std::size_t k = 0; k < subtree[ch].size(); ++k) {
        const auto partner = std::pair{subtree[fd_child][k], node.t};
        s.entries[{subtree[ch][k], node.t}] = fd_time.at(partner);
      }
    }
  }
  return s;
}

}  // namespace spanfact
