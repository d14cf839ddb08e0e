#include "spanfact/factorization.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace spanfact {

namespace {

bool is_permutation_row(const std::vector<int>& row) {
  std::vector<char> seen(row.size(), 0);
  for (int v : row) {
    if (v < 0 || v >= static_cast<int>(row.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

}  // namespace

Factorization make_factorization(std::vector<std::vector<int>> succ) {
  Factorization f;
  f.d = static_cast<int>(succ.size());
  f.n = f.d == 0 ? 0 : static_cast<int>(succ[0].size());
  for (int i = 0; i < f.d; ++i) {
    if (static_cast<int>(succ[i].size()) != f.n)
      throw UsageError("factor rows have inconsistent lengths");
    if (!is_permutation_row(succ[i]))
      throw UsageError("factor " + std::to_string(i + 1) +
                       " is not a permutation of the vertex set");
    for (int v = 0; v < f.n; ++v)
      if (succ[i][v] == v)
        throw UsageError("factor " + std::to_string(i + 1) +
                         " fixes vertex " + std::to_string(v));
  }
  f.succ = std::move(succ);
  return f;
}

void validate_word_list(const WordList& wl) {
  if (wl.words.empty()) throw UsageError("word list is empty");
  if (!wl.words[0].letters.empty())
    throw UsageError("words[0] must be the empty word");
  for (const Word& w : wl.words)
    for (int letter : w.letters)
      if (letter < 1 || letter > wl.d)
        throw BadFactorIndexError("factor index " + std::to_string(letter) +
                                  " outside [1, " + std::to_string(wl.d) + "]");
}

namespace {

// One perfect matching of the remaining edges, by augmenting paths
// (tails on the left, heads on the right). Returns matched edge id per tail.
std::vector<int> perfect_matching(const Digraph& g,
                                  const std::vector<char>& used) {
  const int n = g.vertex_count();
  const auto& edges = g.edges();
  std::vector<std::vector<int>> incident(n);  // edge ids per tail
  for (int e = 0; e < static_cast<int>(edges.size()); ++e)
    if (!used[e]) incident[edges[e].tail].push_back(e);

  std::vector<int> match_tail(n, -1);  // edge id matched to a tail
  std::vector<int> match_head(n, -1);  // edge id matched to a head
  std::vector<int> stamp(n, -1);

  // Iterative DFS augmentation from `root`; stamped per phase.
  auto augment = [&](int root, int phase) {
    std::vector<std::pair<int, std::size_t>> stack;
    std::vector<int> path;  // edge ids along the alternating path
    stack.emplace_back(root, 0);
    stamp[root] = phase;
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      if (next >= incident[u].size()) {
        stack.pop_back();
        if (!path.empty()) path.pop_back();
        continue;
      }
      const int e = incident[u][next++];
      const int h = edges[e].head;
      if (match_head[h] < 0) {
        // Free head: flip the alternating path.
        path.push_back(e);
        for (int id : path) {
          match_tail[edges[id].tail] = id;
          match_head[edges[id].head] = id;
        }
        return true;
      }
      const int w = edges[match_head[h]].tail;
      if (stamp[w] != phase) {
        stamp[w] = phase;
        path.push_back(e);
        stack.emplace_back(w, 0);
      }
    }
    return false;
  };

  int phase = 0;
  for (int v = 0; v < n; ++v) {
    if (match_tail[v] >= 0) continue;
    if (!augment(v, phase++))
      throw MatchingFailedError(
          "no perfect matching extends tail vertex " + std::to_string(v) +
          "; the input cannot have been regular");
  }
  return match_tail;
}

}  // namespace

Factorization decompose_into_factors(const Digraph& g) {
  const int d = check_regular(g);
  const int n = g.vertex_count();
  std::vector<char> used(g.edges().size(), 0);
  std::vector<std::vector<int>> succ;
  succ.reserve(d);
  for (int round = 0; round < d; ++round) {
    const std::vector<int> matched = perfect_matching(g, used);
    std::vector<int> row(n);
    for (int v = 0; v < n; ++v) {
      row[v] = g.edges()[matched[v]].head;
      used[matched[v]] = 1;
    }
    succ.push_back(std::move(row));
  }
  return make_factorization(std::move(succ));
}

std::optional<std::string> check_factorization(const Digraph& g,
                                               const Factorization& f) {
  if (f.n != g.vertex_count()) return "vertex counts differ";
  std::vector<Edge> from_factors;
  from_factors.reserve(static_cast<std::size_t>(f.d) * f.n);
  for (int i = 0; i < f.d; ++i)
    for (int v = 0; v < f.n; ++v)
      from_factors.push_back(Edge{v, f.succ[i][v]});
  std::vector<Edge> from_graph = g.edges();
  if (from_factors.size() != from_graph.size())
    return "edge counts differ: factors give " +
           std::to_string(from_factors.size()) + ", graph has " +
           std::to_string(from_graph.size());
  std::sort(from_factors.begin(), from_factors.end());
  std::sort(from_graph.begin(), from_graph.end());
  for (std::size_t i = 0; i < from_graph.size(); ++i)
    if (!(from_factors[i] == from_graph[i]))
      return "edge multiset mismatch at (" +
             std::to_string(from_graph[i].tail) + ", " +
             std::to_string(from_graph[i].head) + ")";
  return std::nullopt;
}

std::vector<int> apply_word(const Factorization& f, int v, const Word& w) {
  if (v < 0 || v >= f.n) throw UsageError("start vertex out of range");
  std::vector<int> path;
  path.reserve(w.letters.size() + 1);
  path.push_back(v);
  for (int letter : w.letters) {
    if (letter < 1 || letter > f.d)
      throw BadFactorIndexError("factor index " + std::to_string(letter) +
                                " outside [1, " + std::to_string(f.d) + "]");
    path.push_back(f.succ[letter - 1][path.back()]);
  }
  return path;
}

int word_endpoint(const Factorization& f, int v, const Word& w) {
  int u = v;
  for (int letter : w.letters) {
    if (letter < 1 || letter > f.d)
      throw BadFactorIndexError("factor index " + std::to_string(letter) +
                                " outside [1, " + std::to_string(f.d) + "]");
    u = f.succ[letter - 1][u];
  }
  return u;
}

std::optional<SpanningWitness> verify_spanning(const Factorization& f,
                                               const WordList& wl) {
  validate_word_list(wl);
  if (wl.d != f.d) throw UsageError("word list and factorization disagree on d");
  const int n = f.n;
  std::vector<int> owner(n, -1);
  for (int v = 0; v < n; ++v) {
    std::fill(owner.begin(), owner.end(), -1);
    for (int i = 0; i < static_cast<int>(wl.words.size()); ++i) {
      const int end = word_endpoint(f, v, wl.words[i]);
      if (owner[end] >= 0) return SpanningWitness{v, owner[end], i};
      owner[end] = i;
    }
  }
  return std::nullopt;
}

bool is_hierarchical(const WordList& wl) {
  std::vector<std::vector<int>> words;
  words.reserve(wl.words.size());
  for (const Word& w : wl.words) words.push_back(w.letters);
  std::sort(words.begin(), words.end());
  for (const auto& w : words) {
    if (w.empty()) continue;
    std::vector<int> prefix(w.begin(), w.end() - 1);
    if (!std::binary_search(words.begin(), words.end(), prefix)) return false;
  }
  return true;
}

UsageMetrics usage_metrics(const WordList& wl, const DistanceProfile& profile,
                           int d) {
  validate_word_list(wl);
  if (wl.d != d) throw UsageError("word list and degree disagree");
  UsageMetrics m;
  m.counts.assign(d, 0);
  for (const Word& w : wl.words)
    for (int letter : w.letters) ++m.counts[letter - 1];
  m.total = std::accumulate(m.counts.begin(), m.counts.end(), 0LL);
  m.max_count = m.counts.empty() ? 0 : *std::max_element(m.counts.begin(),
                                                         m.counts.end());
  m.avg_ceiling = ceil_div(m.total, d);
  m.theta = theta(profile, d);
  m.balanced = m.max_count == m.avg_ceiling;
  m.short_factorization = m.avg_ceiling == m.theta;
  m.optimal = m.max_count == m.theta;
  m.ordered_chain = m.theta <= m.avg_ceiling && m.avg_ceiling <= m.max_count;
  return m;
}

SearchOutcome search_spanning(const Digraph& g, const Factorization& f,
                              int budget) {
  check_regular(g);
  const int n = f.n;
  SearchOutcome outcome;
  for (int attempt = 0; attempt < budget; ++attempt) {
    // Factor priority: rotate the 0-based factor order by `attempt`.
    std::vector<int> priority(f.d);
    for (int i = 0; i < f.d; ++i) priority[i] = (attempt + i) % f.d;

    WordList wl;
    wl.d = f.d;
    wl.words.assign(n, Word{});
    std::vector<char> visited(n, 0);
    std::queue<int> queue;
    visited[0] = 1;
    queue.push(0);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      for (int i : priority) {
        const int v = f.succ[i][u];
        if (!visited[v]) {
          visited[v] = 1;
          wl.words[v] = wl.words[u];
          wl.words[v].letters.push_back(i + 1);
          queue.push(v);
        }
      }
    }
    // Word slot order: words are stored by BFS layer then discovery, with the
    // root's empty word first.
    std::vector<std::pair<std::size_t, int>> order;
    order.reserve(n);
    for (int v = 0; v < n; ++v)
      order.emplace_back(wl.words[v].letters.size(), v);
    std::stable_sort(order.begin(), order.end());
    WordList sorted;
    sorted.d = f.d;
    sorted.words.reserve(n);
    for (const auto& [len, v] : order) sorted.words.push_back(wl.words[v]);

    outcome.attempts = attempt + 1;
    outcome.witness = verify_spanning(f, sorted);
    if (!outcome.witness) {
      outcome.ok = true;
      outcome.words = std::move(sorted);
      return outcome;
    }
  }
  outcome.ok = false;
  return outcome;
}

}  // namespace spanfact
