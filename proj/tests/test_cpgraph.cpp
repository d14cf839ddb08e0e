#include <algorithm>
#include <set>

#include "doctest.h"
#include "spanfact/cpcount.hpp"
#include "spanfact/cpgraph.hpp"

using namespace spanfact;

TEST_SUITE("cpgraph") {

TEST_CASE("G(2,2) vertices and neighborhoods") {
  const Digraph g = build_cp(2, 2);
  CHECK(g.vertex_count() == 6);
  REQUIRE(g.vertex_labels().has_value());
  CHECK(*g.vertex_labels() ==
        std::vector<std::string>{"12", "13", "21", "23", "31", "32"});
  CHECK(check_regular(g) == 2);
  CHECK(g.is_elementary());

  const auto adj = g.out_adjacency();
  // out(12) = {21, 31}
  std::set<int> out0(adj[0].begin(), adj[0].end());
  CHECK(out0 == std::set<int>{2, 4});
}

TEST_CASE("vertex counts follow the falling factorial") {
  CHECK(build_cp(3, 2).vertex_count() == 12);
  CHECK(build_cp(4, 3).vertex_count() == 60);
  CHECK(check_regular(build_cp(4, 3)) == 4);
}

TEST_CASE("bad parameters are rejected") {
  CHECK_THROWS_AS(build_cp(2, 3), BadParamsError);
  CHECK_THROWS_AS(build_cp(4, 1), BadParamsError);
  CHECK_THROWS_AS(grow_tree(1, 1), BadParamsError);
}

TEST_CASE("the shift-in factor follows the cyclic complement rule") {
  const Factorization f = cp_factorization(2, 2);
  // F_2 on 12 -> 31, on 21 -> 32, on 31 -> 23
  CHECK(f.succ[1][0] == 4);
  CHECK(f.succ[1][2] == 5);
  CHECK(f.succ[1][4] == 3);
  // F_1 is the first rotation: 12 -> 21
  CHECK(f.succ[0][0] == 2);
}

TEST_CASE("factors partition the graph edges") {
  for (const auto& [d, D] : std::vector<std::pair<int, int>>{
           {2, 2}, {3, 2}, {4, 3}, {5, 3}}) {
    const Digraph g = build_cp(d, D);
    const Factorization f = cp_factorization(d, D);
    CHECK_FALSE(check_factorization(g, f).has_value());
  }
}

TEST_CASE("G(2,2) tree words and endpoints") {
  const CpTree tree = grow_tree(2, 2);
  const WordList wl = tree.words();
  REQUIRE(wl.words.size() == 6);
  CHECK(wl.words[0].letters.empty());
  CHECK(wl.words[1].letters == std::vector<int>{1});
  CHECK(wl.words[2].letters == std::vector<int>{2});
  CHECK(wl.words[3].letters == std::vector<int>{1, 2});
  CHECK(wl.words[4].letters == std::vector<int>{2, 1});
  CHECK(wl.words[5].letters == std::vector<int>{2, 2});

  std::vector<int> endpoints;
  for (const auto& node : tree.nodes) endpoints.push_back(node.vertex);
  CHECK(endpoints == std::vector<int>{0, 2, 4, 5, 1, 3});

  const Factorization f = cp_factorization(2, 2);
  CHECK_FALSE(verify_spanning(f, wl).has_value());
}

TEST_CASE("tree layer sizes match the distance counts") {
  for (int d = 2; d <= 7; ++d) {
    for (int D = 2; D <= std::min(d, 4); ++D) {
      const CpTree tree = grow_tree(d, D);
      const auto layers = tree.nodes_per_depth();
      for (int k = 1; k <= D; ++k)
        CHECK(layers[k] == falling_factorial(d + 1, k) -
                               falling_factorial(d + 1, k - 1));
      CHECK(static_cast<long long>(tree.nodes.size()) ==
            falling_factorial(d + 1, D));
    }
  }
}

TEST_CASE("labels stay in range and every value occurs") {
  for (const auto& [d, D] : std::vector<std::pair<int, int>>{
           {3, 2}, {4, 3}, {5, 4}, {7, 4}}) {
    const CpTree tree = grow_tree(d, D);
    std::set<std::pair<int, int>> labels;
    for (std::size_t id = 1; id < tree.nodes.size(); ++id) {
      const auto& node = tree.nodes[id];
      CHECK(node.c >= 1);
      CHECK(node.c <= d - node.t + 1);
      labels.insert({node.c, node.t});
    }
    for (int t = 1; t <= D; ++t)
      for (int c = 1; c <= d - t + 1; ++c)
        CHECK(labels.count({c, t}) == 1);
  }
}

TEST_CASE("depth-1 labels on G(3,2) are 1..3") {
  const CpTree tree = grow_tree(3, 2);
  std::set<int> cs;
  for (const auto& node : tree.nodes)
    if (node.t == 1) cs.insert(node.c);
  CHECK(cs == std::set<int>{1, 2, 3});
}

TEST_CASE("tree words are spanning, hierarchical and short") {
  for (const auto& [d, D] : std::vector<std::pair<int, int>>{
           {2, 2}, {3, 2}, {4, 3}, {5, 3}, {5, 4}}) {
    const Digraph g = build_cp(d, D);
    const Factorization f = cp_factorization(d, D);
    const WordList wl = grow_tree(d, D).words();
    CHECK_FALSE(verify_spanning(f, wl).has_value());
    CHECK(is_hierarchical(wl));
    const auto m = usage_metrics(wl, distance_profile(g), d);
    CHECK(m.short_factorization);
    CHECK(m.ordered_chain);
  }
}

TEST_CASE("word lengths equal graph distances") {
  const int d = 4, D = 3;
  const Digraph g = build_cp(d, D);
  const WordList wl = grow_tree(d, D).words();
  const CpTree tree = grow_tree(d, D);
  const auto profile = distance_profile(g);
  // words out of the root are the unique shortest paths from vertex 0
  for (std::size_t id = 0; id < tree.nodes.size(); ++id)
    CHECK(tree.nodes[id].t ==
          static_cast<int>(wl.words[id].letters.size()));
  for (int k = 0; k <= D; ++k)
    CHECK(tree.nodes_per_depth()[k] == profile.per_vertex[0][k]);
}

TEST_CASE("cp_min_schedule on (4,2) reaches 2d+1") {
  const WordList wl = grow_tree(4, 2).words();
  const Schedule s = cp_min_schedule(4, 2);
  const auto check = verify_schedule(wl, s);
  CHECK_FALSE(check.violation.has_value());
  CHECK(check.makespan == 9);
  CHECK(check.is_minimum);
}

TEST_CASE("cp_min_schedule agrees with the closed-form peak usage") {
  for (const auto& [d, D] : std::vector<std::pair<int, int>>{
           {2, 2}, {3, 3}, {4, 3}, {5, 4}}) {
    const WordList wl = grow_tree(d, D).words();
    const Schedule s = cp_min_schedule(d, D);
    const auto check = verify_schedule(wl, s);
    CHECK_FALSE(check.violation.has_value());
    CHECK(check.makespan == mu_closed(d, D));
    CHECK(check.is_minimum);
  }
}

TEST_CASE("cp_min_schedule simulates conflict-free on (5,4)") {
  const Digraph g = build_cp(5, 4);
  const Factorization f = cp_factorization(5, 4);
  const WordList wl = grow_tree(5, 4).words();
  const Schedule s = cp_min_schedule(5, 4);
  const auto report = simulate_exchange(g, f, wl, s);
  CHECK(report.conflicts.empty());
  CHECK(report.packets_delivered ==
        static_cast<long long>(g.vertex_count()) * (g.vertex_count() - 1));
}

TEST_CASE("vertex labels use csv beyond digit nine") {
  CHECK(cp_vertex_label({1, 2, 3}) == "123");
  CHECK(cp_vertex_label({10, 2}) == "10,2");
}

}  // TEST_SUITE
