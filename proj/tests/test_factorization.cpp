#include <numeric>
#include <random>

#include "doctest.h"
#include "spanfact/cpgraph.hpp"
#include "spanfact/factorization.hpp"
#include "spanfact/gf.hpp"
#include "spanfact/mms.hpp"

using namespace spanfact;

namespace {

Digraph directed_cycle(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.push_back(Edge{v, (v + 1) % n});
  return Digraph(n, std::move(edges));
}

Digraph complete_digraph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) edges.push_back(Edge{u, v});
  return Digraph(n, std::move(edges));
}

// d-regular random multigraph: union of d fixed-point-free permutations.
Digraph random_regular(int n, int d, std::mt19937& rng) {
  std::vector<Edge> edges;
  std::vector<int> perm(n);
  for (int round = 0; round < d; ++round) {
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int v = 0; v < n; ++v) {
      if (perm[v] != v) continue;
      const int other = (v + 1 + static_cast<int>(rng() % (n - 1))) % n;
      std::swap(perm[v], perm[other]);
      // the swap can re-fix `other`; repair pass below
    }
    for (int v = 0; v < n; ++v)
      if (perm[v] == v) std::swap(perm[v], perm[(v + 1) % n]);
    for (int v = 0; v < n; ++v) edges.push_back(Edge{v, perm[v]});
  }
  return Digraph(n, std::move(edges));
}

}  // namespace

TEST_SUITE("factorization") {

TEST_CASE("3-cycle decomposes into its own permutation") {
  const Digraph g = directed_cycle(3);
  const Factorization f = decompose_into_factors(g);
  CHECK(f.d == 1);
  CHECK(f.succ[0] == std::vector<int>{1, 2, 0});
  CHECK_FALSE(check_factorization(g, f).has_value());
}

TEST_CASE("complete digraph on 3 vertices splits into 2 factors") {
  const Digraph g = complete_digraph(3);
  const Factorization f = decompose_into_factors(g);
  CHECK(f.d == 2);
  CHECK_FALSE(check_factorization(g, f).has_value());
}

TEST_CASE("G(2,2) edges decompose") {
  const Digraph g = build_cp(2, 2);
  const Factorization f = decompose_into_factors(g);
  CHECK(f.d == 2);
  CHECK_FALSE(check_factorization(g, f).has_value());
}

TEST_CASE("decompose rejects irregular input") {
  CHECK_THROWS_AS(decompose_into_factors(
                      Digraph(3, {Edge{0, 1}, Edge{1, 2}, Edge{2, 0},
                                  Edge{0, 2}})),
                  NotRegularError);
}

TEST_CASE("multigraph edges are covered with multiplicity") {
  // two parallel 2-cycles
  const Digraph g(2, {Edge{0, 1}, Edge{0, 1}, Edge{1, 0}, Edge{1, 0}});
  const Factorization f = decompose_into_factors(g);
  CHECK(f.d == 2);
  CHECK_FALSE(check_factorization(g, f).has_value());
}

TEST_CASE("apply_word on G(2,2)") {
  // lexicographic vertex order: 12, 13, 21, 23, 31, 32
  const Factorization f = cp_factorization(2, 2);
  SUBCASE("empty word stays put") {
    CHECK(apply_word(f, 4, Word{}) == std::vector<int>{4});
  }
  SUBCASE("F_1 from 12 reaches 21") {
    CHECK(word_endpoint(f, 0, Word{{1}}) == 2);
  }
  SUBCASE("F_2 F_2 from 12 reaches 23") {
    const auto path = apply_word(f, 0, Word{{2, 2}});
    CHECK(path == std::vector<int>{0, 4, 3});  // 12 -> 31 -> 23
  }
  SUBCASE("bad factor index") {
    CHECK_THROWS_AS(apply_word(f, 0, Word{{3}}), BadFactorIndexError);
  }
}

TEST_CASE("verify_spanning on G(2,2) words") {
  const Factorization f = cp_factorization(2, 2);
  const WordList wl = grow_tree(2, 2).words();
  CHECK_FALSE(verify_spanning(f, wl).has_value());
}

TEST_CASE("duplicate words yield a witness") {
  const Factorization f = decompose_into_factors(directed_cycle(3));
  WordList wl;
  wl.d = 1;
  wl.words = {Word{}, Word{{1}}, Word{{1}}};
  const auto witness = verify_spanning(f, wl);
  REQUIRE(witness.has_value());
  CHECK(witness->word_a == 1);
  CHECK(witness->word_b == 2);
}

TEST_CASE("H_5 words span") {
  const Field F = Field::make(5);
  const Factorization f = mms_factorization(F);
  const WordList wl = mms_words(F);
  CHECK_FALSE(verify_spanning(f, wl).has_value());
}

TEST_CASE("hierarchical predicate") {
  WordList a{2, {Word{}, Word{{1}}, Word{{1, 2}}}};
  CHECK(is_hierarchical(a));
  WordList b{2, {Word{}, Word{{1, 2}}}};
  CHECK_FALSE(is_hierarchical(b));
  CHECK(is_hierarchical(grow_tree(4, 3).words()));
}

TEST_CASE("usage metrics on G(2,2)") {
  const Digraph g = build_cp(2, 2);
  const WordList wl = grow_tree(2, 2).words();
  const auto m = usage_metrics(wl, distance_profile(g), 2);
  CHECK(m.counts == std::vector<long long>{3, 5});
  CHECK(m.avg_ceiling == 4);
  CHECK(m.theta == 4);
  CHECK(m.short_factorization);
  CHECK_FALSE(m.balanced);
  CHECK_FALSE(m.optimal);
  CHECK(m.ordered_chain);
}

TEST_CASE("usage metrics on H_5: both families hit their counts") {
  const Field F = Field::make(5);
  const auto m =
      usage_metrics(mms_words(F), distance_profile(build_mms(F)), 7);
  for (int i = 0; i < 2; ++i) CHECK(m.counts[i] == 2 * 5 + 3);   // fix-r
  for (int i = 2; i < 7; ++i) CHECK(m.counts[i] == 3 * 5 - 2);   // cross-over
  CHECK(m.ordered_chain);
}

TEST_CASE("endpoints of a verified list form a permutation") {
  const Factorization f = cp_factorization(3, 2);
  const WordList wl = grow_tree(3, 2).words();
  REQUIRE_FALSE(verify_spanning(f, wl).has_value());
  for (int v = 0; v < f.n; ++v) {
    std::vector<char> hit(f.n, 0);
    for (const Word& w : wl.words) hit[word_endpoint(f, v, w)] = 1;
    CHECK(std::count(hit.begin(), hit.end(), 1) == f.n);
  }
}

TEST_CASE("search_spanning succeeds immediately on a cycle") {
  const Digraph g = directed_cycle(5);
  const auto outcome = search_spanning(g, decompose_into_factors(g), 3);
  REQUIRE(outcome.ok);
  CHECK(outcome.attempts == 1);
  CHECK(outcome.words.words[1].letters == std::vector<int>{1});
  CHECK(outcome.words.words[4].letters == std::vector<int>(4, 1));
}

TEST_CASE("search_spanning on a cycle-prefix graph") {
  const Digraph g = build_cp(3, 2);
  const auto outcome = search_spanning(g, cp_factorization(3, 2), 5);
  CHECK(outcome.ok);
  CHECK(outcome.attempts == 1);
}

TEST_CASE("search_spanning is deterministic on a scrambled factorization") {
  // Swap two H_5 factor rows so the BFS tree no longer matches the canonical
  // one; whatever the outcome, it must reproduce run to run.
  const Field F = Field::make(5);
  Factorization f = mms_factorization(F);
  std::swap(f.succ[0], f.succ[6]);
  const Digraph g = build_mms(F);
  const auto first = search_spanning(g, f, 4);
  const auto second = search_spanning(g, f, 4);
  CHECK(first.ok == second.ok);
  CHECK(first.attempts == second.attempts);
  if (first.ok) {
    CHECK(first.words == second.words);
    CHECK_FALSE(verify_spanning(f, first.words).has_value());
  }
}

TEST_CASE("random regular digraphs decompose exactly") {
  std::mt19937 rng(987654321);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 20 + static_cast<int>(rng() % 80);
    const int d = 2 + static_cast<int>(rng() % 6);
    const Digraph g = random_regular(n, d, rng);
    const Factorization f = decompose_into_factors(g);
    CHECK(f.d == d);
    CHECK_FALSE(check_factorization(g, f).has_value());
  }
}

}  // TEST_SUITE
