#include <algorithm>

#include "doctest.h"
#include "spanfact/cpcount.hpp"
#include "spanfact/cpgraph.hpp"

using namespace spanfact;

TEST_SUITE("cpcount") {

TEST_CASE("falling factorial basics and conventions") {
  CHECK(falling_factorial(5, 3) == 60);
  for (int n = 0; n <= 8; ++n) CHECK(falling_factorial(n, 0) == 1);
  CHECK(falling_factorial(3, -1) == 0);
  CHECK(falling_factorial(-2, 3) == 0);
  CHECK(falling_factorial(3, 5) == 0);  // product crosses zero
}

TEST_CASE("falling factorial convolution identity") {
  // sum_{b=1}^{p} (p)_b (a-b)_{p-b} == p * (a)_{p-1}
  for (int a = 0; a <= 12; ++a)
    for (int p = 0; p <= a; ++p) {
      long long sum = 0;
      for (int b = 1; b <= p; ++b)
        sum += falling_factorial(p, b) * falling_factorial(a - b, p - b);
      CHECK(sum == static_cast<long long>(p) * falling_factorial(a, p - 1));
    }
}

TEST_CASE("leaf counts on the G(2,2) tree") {
  CHECK(leaf_count_rec(1, 1, 2, 2) == 1);
  CHECK(leaf_count_rec(2, 1, 2, 2) == 2);
  CHECK(leaf_count_closed(1, 1, 2, 2) == 1);
  CHECK(leaf_count_closed(2, 1, 2, 2) == 2);
}

TEST_CASE("leaf count base cases") {
  for (int d = 2; d <= 6; ++d)
    for (int k = 2; k <= std::min(d, 4); ++k)
      for (int c = 1; c <= d - k + 1; ++c) {
        CHECK(leaf_count_rec(c, k, k, d) == 1);
        CHECK(leaf_count_closed(c, k, k, d) == 1);
      }
  CHECK(leaf_count_closed(4, 1, 3, 4) == 12);  // wide-c case: (4)_2
}

TEST_CASE("recursive and closed leaf counts agree with the tree") {
  for (int d = 2; d <= 7; ++d) {
    for (int D = 2; D <= std::min(d, 5); ++D) {
      const TreeCensus census = census_tree(grow_tree(d, D));
      for (int t = 1; t <= D; ++t)
        for (int c = 1; c <= d - t + 1; ++c)
          for (int k = t; k <= D; ++k) {
            const long long rec = leaf_count_rec(c, t, k, d);
            const long long closed = leaf_count_closed(c, t, k, d);
            CHECK(rec == closed);
            const auto counted = census.leaf_count(c, t, k);
            REQUIRE(counted.has_value());
            CHECK(*counted == rec);
          }
    }
  }
}

TEST_CASE("label counts match the tree") {
  CHECK(label_count_closed(1, 2, 3) == 4);
  CHECK(label_count_closed(2, 2, 3) == 4);
  CHECK(label_count_closed(3, 2, 3) == 0);
  for (int d = 2; d <= 6; ++d) {
    const int D = std::min(d, 4);
    const TreeCensus census = census_tree(grow_tree(d, D));
    for (int t = 1; t <= D; ++t) {
      for (int c = 1; c <= d + 1; ++c)
        CHECK(label_count_closed(c, t, d) == census.label_count(c, t));
      // initialization row: one node per c
      if (t == 1)
        for (int c = 1; c <= d; ++c) CHECK(census.label_count(c, 1) == 1);
    }
  }
}

TEST_CASE("factor edge counts match the tree") {
  CHECK(factor_edge_count(1, 2, 2, 3) == 0);  // j < t
  CHECK(factor_edge_count(2, 1, 2, 3) == 0);  // j == t with c == 1
  CHECK(factor_edge_count(3, 2, 2, 3) == 4);
  for (int d = 2; d <= 6; ++d) {
    const int D = std::min(d, 4);
    const TreeCensus census = census_tree(grow_tree(d, D));
    for (int t = 1; t < D; ++t)  // edges leave internal layers only
      for (int c = 1; c <= d - t + 1; ++c)
        for (int j = 1; j <= d; ++j)
          CHECK(factor_edge_count(j, c, t, d) ==
                census.factor_edges_from_label(j, c, t));
  }
}

TEST_CASE("step counts on G(2,2)") {
  CHECK(step_count_rec(1, 1, 2, 2) == 1);
  CHECK(step_count_rec(2, 1, 2, 2) == 2);
  CHECK(step_count_rec(1, 2, 2, 2) == 1);
  CHECK(step_count_rec(2, 2, 2, 2) == 2);
}

TEST_CASE("early letters vanish: j < t-1") {
  CHECK(step_count_rec(1, 3, 3, 4) == 0);
  CHECK(step_count_closed(1, 3, 3, 4) == 0);
  CHECK(step_count_closed(2, 4, 4, 6) == 0);
}

TEST_CASE("both step count forms match the tree everywhere") {
  for (int d = 2; d <= 7; ++d) {
    for (int D = 2; D <= std::min(d, 4); ++D) {
      const TreeCensus census = census_tree(grow_tree(d, D));
      for (int k = 1; k <= D; ++k)
        for (int t = 1; t <= k; ++t)
          for (int j = 1; j <= d; ++j) {
            const long long rec = step_count_rec(j, t, k, d);
            CHECK(rec == step_count_closed(j, t, k, d));
            CHECK(rec == census.step_count(j, t, k));
          }
    }
  }
}

TEST_CASE("step counts per layer sum to the distance census") {
  for (int d = 2; d <= 7; ++d)
    for (int D = 2; D <= std::min(d, 4); ++D)
      for (int k = 1; k <= D; ++k) {
        const long long n_k = falling_factorial(d + 1, k - 1) * (d + 1 - k);
        for (int t = 1; t <= k; ++t) {
          long long sum = 0;
          for (int j = 1; j <= d; ++j) sum += step_count_closed(j, t, k, d);
          CHECK(sum == n_k);
        }
      }
}

TEST_CASE("single factor word counts: (d)_2 at j=4, t=1, k=3") {
  CHECK(step_count_closed(4, 1, 3, 4) == 12);
  CHECK(step_count_rec(4, 1, 3, 4) == 12);
}

TEST_CASE("peak usage examples") {
  CHECK(mu_closed(2, 2) == 5);
  CHECK(theta_closed(2, 2) == 4);
  for (int d = 3; d <= 7; ++d) CHECK(mu_closed(d, 2) == 2 * d + 1);
  CHECK(mu_closed(4, 3) == 47);
}

TEST_CASE("peak usage triple agreement") {
  for (const auto& [d, D] : std::vector<std::pair<int, int>>{
           {2, 2}, {4, 2}, {4, 3}, {5, 3}, {5, 4}, {6, 4}}) {
    const CpTree tree = grow_tree(d, D);
    const TreeCensus census = census_tree(tree);
    const long long mu = mu_closed(d, D);
    CHECK(mu == census.factor_occurrences(d));
    const WordList wl = tree.words();
    long long counted = 0;
    for (const Word& w : wl.words)
      counted += std::count(w.letters.begin(), w.letters.end(), d);
    CHECK(mu == counted);
  }
}

TEST_CASE("closed theta matches the graph oracle") {
  for (const auto& [d, D] : std::vector<std::pair<int, int>>{
           {2, 2}, {3, 2}, {4, 3}, {5, 3}}) {
    CHECK(theta_closed(d, D) == theta(build_cp(d, D)));
  }
}

TEST_CASE("monotonicity in the factor index") {
  for (int d = 2; d <= 7; ++d)
    for (int D = 2; D <= std::min(d, 4); ++D)
      CHECK_FALSE(check_monotone(d, D).has_value());
  // consequence: F_d is a most-used factor
  for (const auto& [d, D] :
       std::vector<std::pair<int, int>>{{3, 2}, {4, 3}, {5, 4}}) {
    const TreeCensus census = census_tree(grow_tree(d, D));
    for (int j = 1; j < d; ++j)
      CHECK(census.factor_occurrences(j) <= census.factor_occurrences(d));
  }
}

TEST_CASE("peak usage dominates theta") {
  for (int d = 2; d <= 7; ++d)
    for (int D = 2; D <= std::min(d, 4); ++D)
      CHECK(mu_closed(d, D) >= theta_closed(d, D));
}

}  // TEST_SUITE
