#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spanfact/digraph.hpp"

namespace spanfact {

/// Edge-disjoint decomposition of a d-regular digraph into d 1-factors.
/// succ[i][v] is the head of the F_{i+1} edge leaving v; every row is a
/// fixed-point-free permutation of the vertex set. Factor indices are 1-based
/// everywhere outside this struct (words, serialization, reports).
struct Factorization {
  int d = 0;
  int n = 0;
  std::vector<std::vector<int>> succ;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Validates the intrinsic Factorization invariants (row count, permutation
/// rows, no fixed points). Throws UsageError on violation.
Factorization make_factorization(std::vector<std::vector<int>> succ);

/// Sequence of 1-based factor indices.
struct Word {
  std::vector<int> letters;
  friend bool operator==(const Word&, const Word&) = default;
};

/// n words, words[0] empty. Spanning is a checked property, never assumed.
struct WordList {
  int d = 0;
  std::vector<Word> words;
  friend bool operator==(const WordList&, const WordList&) = default;
};

/// Throws UsageError unless words[0] is empty and all letters lie in [1, d].
void validate_word_list(const WordList& wl);

/// Fact 1: decompose a d-regular digraph into d 1-factors by repeatedly
/// extracting perfect matchings from the bipartite tail/head graph.
/// Deterministic for a given edge order.
Factorization decompose_into_factors(const Digraph& g);

/// Checks that the factors of f exactly cover the edge multiset of g.
/// Returns a description of the first failure, or nullopt when f is a valid
/// 1-factorization of g.
std::optional<std::string> check_factorization(const Digraph& g,
                                               const Factorization& f);

/// The directed path traced by applying w at v; path[0] == v and the result
/// has |w|+1 entries.
std::vector<int> apply_word(const Factorization& f, int v, const Word& w);
int word_endpoint(const Factorization& f, int v, const Word& w);

/// Two words of wl that collide from some start vertex: that vertex, and the
/// word indices a < b with v*w_a == v*w_b.
struct SpanningWitness {
  int vertex = 0;
  int word_a = 0;
  int word_b = 0;
};

/// For every vertex v checks that the wl.words endpoints from v are pairwise
/// distinct. Returns nullopt when the word list spans.
std::optional<SpanningWitness> verify_spanning(const Factorization& f,
                                               const WordList& wl);

/// True iff every initial subword of a word in wl is also a word in wl.
bool is_hierarchical(const WordList& wl);

/// Per-factor usage census and the balanced / short / optimal predicates.
struct UsageMetrics {
  std::vector<long long> counts;  // counts[i] = occurrences of F_{i+1}
  long long total = 0;
  long long max_count = 0;
  long long avg_ceiling = 0;  // ceil(total / d)
  long long theta = 0;
  bool balanced = false;
  bool short_factorization = false;
  bool optimal = false;
  /// theta <= avg_ceiling <= max_count. Holds for every verified spanning
  /// factorization; reported rather than asserted so the metrics stay usable
  /// on exploratory word lists.
  bool ordered_chain = false;
};

UsageMetrics usage_metrics(const WordList& wl, const DistanceProfile& profile,
                           int d);

struct SearchOutcome {
  bool ok = false;
  WordList words;
  int attempts = 0;
  std::optional<SpanningWitness> witness;  // from the last failed attempt
};

/// Heuristic spanning search: breadth-first shortest-path trees rooted at
/// vertex 0, factor priority rotated by one position per attempt (attempt k
/// tries factors k+1, k+2, ..., d, 1, ..., k first). Deterministic.
SearchOutcome search_spanning(const Digraph& g, const Factorization& f,
                              int budget);

}  // namespace spanfact
