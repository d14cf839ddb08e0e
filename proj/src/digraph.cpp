#include "spanfact/digraph.hpp"

#include <algorithm>
#include <queue>
#include <thread>

namespace spanfact {

Digraph::Digraph(int n, std::vector<Edge> edges,
                 std::optional<std::vector<std::string>> vertex_labels)
    : n_(n), edges_(std::move(edges)), labels_(std::move(vertex_labels)) {
  if (n_ <= 0) throw UsageError("vertex count must be positive");
  for (const Edge& e : edges_) {
    if (e.tail < 0 || e.tail >= n_ || e.head < 0 || e.head >= n_)
      throw UsageError("edge (" + std::to_string(e.tail) + ", " +
                       std::to_string(e.head) + ") out of range");
    if (e.tail == e.head)
      throw UsageError("self-loop at vertex " + std::to_string(e.tail));
  }
  if (labels_ && static_cast<int>(labels_->size()) != n_)
    throw UsageError("vertex_labels length does not match vertex count");
}

bool Digraph::is_elementary() const {
  std::vector<Edge> sorted = edges_;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

std::vector<std::vector<int>> Digraph::out_adjacency() const {
  std::vector<std::vector<int>> adj(n_);
  for (const Edge& e : edges_) adj[e.tail].push_back(e.head);
  return adj;
}

long long DistanceProfile::total_pairs() const {
  long long sum = 0;
  for (long long c : counts) sum += c;
  return sum;
}

long long DistanceProfile::weighted_sum() const {
  long long sum = 0;
  for (std::size_t k = 0; k < counts.size(); ++k)
    sum += static_cast<long long>(k + 1) * counts[k];
  return sum;
}

int check_regular(const Digraph& g) {
  const int n = g.vertex_count();
  std::vector<int> in(n, 0), out(n, 0);
  for (const Edge& e : g.edges()) {
    ++out[e.tail];
    ++in[e.head];
  }
  const int d = out[0];
  for (int v = 0; v < n; ++v)
    if (in[v] != d || out[v] != d) throw NotRegularError(v, in[v], out[v]);
  return d;
}

namespace {

// Distances from `source`; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const std::vector<std::vector<int>>& adj,
                               int source) {
  std::vector<int> dist(adj.size(), -1);
  std::queue<int> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop();
    for (int v : adj[u]) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push(v);
      }
    }
  }
  return dist;
}

}  // namespace

DistanceProfile distance_profile(const Digraph& g, int threads) {
  const int n = g.vertex_count();
  const auto adj = g.out_adjacency();

  std::vector<std::vector<int>> dist(n);
  auto sweep = [&](int begin, int end) {
    for (int v = begin; v < end; ++v) dist[v] = bfs_distances(adj, v);
  };
  if (threads <= 1 || n < 2 * threads) {
    sweep(0, n);
  } else {
    std::vector<std::thread> workers;
    const int chunk = (n + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const int begin = t * chunk;
      const int end = std::min(n, begin + chunk);
      if (begin >= end) break;
      workers.emplace_back(sweep, begin, end);
    }
    for (auto& w : workers) w.join();
  }

  int diameter = 0;
  for (int v = 0; v < n; ++v) {
    for (int u = 0; u < n; ++u) {
      if (dist[v][u] < 0) throw DisconnectedError(v, u);
      diameter = std::max(diameter, dist[v][u]);
    }
  }

  DistanceProfile profile;
  profile.n = n;
  profile.diameter = diameter;
  profile.counts.assign(diameter, 0);
  profile.per_vertex.assign(n, std::vector<long long>(diameter + 1, 0));
  for (int v = 0; v < n; ++v) {
    for (int u = 0; u < n; ++u) {
      const int k = dist[v][u];
      ++profile.per_vertex[v][k];
      if (k > 0) ++profile.counts[k - 1];
    }
  }
  return profile;
}

long long theta(const DistanceProfile& profile, int d) {
  if (d <= 0) throw UsageError("degree must be positive");
  return ceil_div(profile.weighted_sum(),
                  static_cast<long long>(profile.n) * d);
}

long long theta(const Digraph& g) {
  const int d = check_regular(g);
  return theta(distance_profile(g), d);
}

}  // namespace spanfact
