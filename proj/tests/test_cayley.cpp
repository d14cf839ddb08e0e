#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "spanfact/cayley.hpp"
#include "spanfact/cpgraph.hpp"

using namespace spanfact;

namespace {

Perm cycle_perm(int degree, const std::vector<int>& cycle) {
  Perm p = Perm::identity(degree);
  for (std::size_t i = 0; i < cycle.size(); ++i)
    p.images[cycle[i]] = cycle[(i + 1) % cycle.size()];
  return p;
}

// Delta for the cycle-prefix coset presentation over S_{d+1}: the cycles
// (k ... 2 1) for 2 <= k <= d+1, acting on 0-based points.
std::vector<std::pair<std::string, Perm>> cp_delta(int d) {
  std::vector<std::pair<std::string, Perm>> delta;
  for (int k = 2; k <= d + 1; ++k) {
    Perm p = Perm::identity(d + 1);
    p.images[0] = k - 1;
    for (int j = 1; j < k; ++j) p.images[j] = j - 1;
    delta.emplace_back("r" + std::to_string(k), std::move(p));
  }
  return delta;
}

}  // namespace

TEST_SUITE("cayley") {

TEST_CASE("closure sizes") {
  CHECK(close_group({cycle_perm(3, {0, 1, 2})}, 3, 100).size() == 3);
  CHECK(close_group({cycle_perm(3, {0, 1}), cycle_perm(3, {0, 1, 2})}, 3, 100)
            .size() == 6);
  CHECK(close_group({cycle_perm(4, {0, 1}), cycle_perm(4, {0, 1, 2, 3})}, 4,
                    100)
            .size() == 24);
}

TEST_CASE("closure cap is enforced") {
  CHECK_THROWS_AS(
      close_group({cycle_perm(4, {0, 1}), cycle_perm(4, {0, 1, 2, 3})}, 4, 10),
      CapExceededError);
}

TEST_CASE("C_6 is a directed cycle with one factor") {
  GroupSpec gs;
  gs.degree = 6;
  gs.generators = {{"step", cycle_perm(6, {0, 1, 2, 3, 4, 5})}};
  const CayleyGraph cg = build_cayley(gs);
  CHECK(cg.graph.vertex_count() == 6);
  CHECK(cg.factors.d == 1);
  CHECK(check_regular(cg.graph) == 1);
  CHECK(distance_profile(cg.graph).diameter == 5);

  const WordList wl = cayley_words(cg);
  CHECK_FALSE(verify_spanning(cg.factors, wl).has_value());
  std::multiset<std::size_t> lengths;
  for (const Word& w : wl.words) lengths.insert(w.letters.size());
  CHECK(lengths == std::multiset<std::size_t>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("identity generators are rejected") {
  GroupSpec gs;
  gs.degree = 3;
  gs.generators = {{"e", Perm::identity(3)}};
  CHECK_THROWS_AS(build_cayley(gs), IdentityGeneratorError);
}

TEST_CASE("S_3 words are short and hierarchical") {
  GroupSpec gs;
  gs.degree = 3;
  gs.generators = {{"t", cycle_perm(3, {0, 1})},
                   {"c", cycle_perm(3, {0, 1, 2})}};
  const CayleyGraph cg = build_cayley(gs);
  CHECK(cg.graph.vertex_count() == 6);
  CHECK(cg.factors.d == 2);
  const WordList wl = cayley_words(cg);
  CHECK_FALSE(verify_spanning(cg.factors, wl).has_value());
  CHECK(is_hierarchical(wl));
  const auto m = usage_metrics(wl, distance_profile(cg.graph), 2);
  CHECK(m.short_factorization);
  // Sum of word lengths equals the distance sum from the identity.
  const auto profile = distance_profile(cg.graph);
  long long by_words = 0;
  for (const Word& w : wl.words) by_words += w.letters.size();
  long long by_distance = 0;
  for (std::size_t k = 1; k < profile.per_vertex[0].size(); ++k)
    by_distance += static_cast<long long>(k) * profile.per_vertex[0][k];
  CHECK(by_words == by_distance);
}

TEST_CASE("S_4 example: 24 elements, spanning words") {
  GroupSpec gs;
  gs.degree = 4;
  gs.generators = {{"t", cycle_perm(4, {0, 1})},
                   {"c4", cycle_perm(4, {0, 1, 2, 3})}};
  const CayleyGraph cg = build_cayley(gs);
  CHECK(cg.graph.vertex_count() == 24);
  const WordList wl = cayley_words(cg);
  CHECK_FALSE(verify_spanning(cg.factors, wl).has_value());
  CHECK(is_hierarchical(wl));
  CHECK(usage_metrics(wl, distance_profile(cg.graph), 2).short_factorization);
}

TEST_CASE("trivial subgroup reduces the coset graph to the Cayley graph") {
  CosetSpec cs;
  cs.group.degree = 3;
  cs.group.generators = {{"t", cycle_perm(3, {0, 1})},
                         {"c", cycle_perm(3, {0, 1, 2})}};
  cs.delta = cs.group.generators;
  cs.subgroup_generators = {};
  CHECK_FALSE(check_coset_conditions(cs).has_value());
  const CosetGraph coset = build_coset_graph(cs);
  const CayleyGraph cayley = build_cayley(cs.group);
  CHECK(coset.graph.vertex_count() == cayley.graph.vertex_count());
  CHECK(coset.graph.edges() == cayley.graph.edges());
}

TEST_CASE("delta overlapping H violates condition (i)") {
  CosetSpec cs;
  cs.group.degree = 4;
  cs.group.generators = {{"t", cycle_perm(4, {0, 1})},
                         {"c", cycle_perm(4, {0, 1, 2, 3})}};
  cs.delta = {{"t", cycle_perm(4, {0, 1})},
              {"c", cycle_perm(4, {0, 1, 2, 3})}};
  cs.subgroup_generators = {{"h", cycle_perm(4, {0, 1})}};
  const auto violation = check_coset_conditions(cs);
  REQUIRE(violation.has_value());
  CHECK(violation->condition == "i");
  CHECK_THROWS_AS(build_coset_graph(cs), ConditionViolatedError);
}

TEST_CASE("coset graph count |Gamma| / |H|") {
  // S_4 with H = <(2 3)> (0-based points 2,3) has 12 cosets
  CosetSpec cs;
  cs.group.degree = 4;
  cs.group.generators = cp_delta(3);
  cs.delta = cp_delta(3);
  cs.subgroup_generators = {{"h", cycle_perm(4, {2, 3})}};
  CHECK_FALSE(check_coset_conditions(cs).has_value());
  CHECK(build_coset_graph(cs).graph.vertex_count() == 12);
}

TEST_CASE("coset presentation reproduces the cycle-prefix graphs") {
  for (const auto& [d, D] :
       std::vector<std::pair<int, int>>{{3, 2}, {4, 2}}) {
    CosetSpec cs;
    cs.group.degree = d + 1;
    cs.group.generators = cp_delta(d);
    cs.delta = cp_delta(d);
    // H = pointwise stabilizer of 0..D-1, i.e. S_{d+1-D} on the tail points
    if (d + 1 - D >= 2) {
      std::vector<int> tail;
      for (int p = D; p <= d; ++p) tail.push_back(p);
      cs.subgroup_generators.emplace_back("swap",
                                          cycle_perm(d + 1, {tail[0], tail[1]}));
      cs.subgroup_generators.emplace_back("cyc", cycle_perm(d + 1, tail));
    }
    CHECK_FALSE(check_coset_conditions(cs).has_value());
    const CosetGraph coset = build_coset_graph(cs);
    const Digraph cp = build_cp(d, D);
    REQUIRE(coset.graph.vertex_count() == cp.vertex_count());

    // canonical relabeling: coset of g  ->  the sequence g(1)..g(D)
    std::map<std::string, int> cp_index;
    for (int v = 0; v < cp.vertex_count(); ++v)
      cp_index[(*cp.vertex_labels())[v]] = v;
    std::vector<int> relabel(coset.graph.vertex_count());
    for (int v = 0; v < coset.graph.vertex_count(); ++v) {
      std::vector<int> seq;
      for (int j = 0; j < D; ++j)
        seq.push_back(coset.coset_reps[v].images[j] + 1);
      relabel[v] = cp_index.at(cp_vertex_label(seq));
    }
    std::set<std::pair<int, int>> coset_edges, cp_edges;
    for (const Edge& e : coset.graph.edges())
      coset_edges.insert({relabel[e.tail], relabel[e.head]});
    for (const Edge& e : cp.edges()) cp_edges.insert({e.tail, e.head});
    CHECK(coset_edges == cp_edges);
  }
}

TEST_CASE("G(d,d) has as many vertices as the full symmetric group") {
  CHECK(build_cp(3, 3).vertex_count() ==
        static_cast<int>(
            close_group({cycle_perm(4, {0, 1}), cycle_perm(4, {0, 1, 2, 3})},
                        4, 100)
                .size()));
}

}  // TEST_SUITE
