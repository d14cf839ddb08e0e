#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spanfact/digraph.hpp"
#include "spanfact/factorization.hpp"

namespace spanfact {

/// Permutation of {0..k-1} given by its image table.
struct Perm {
  std::vector<int> images;

  static Perm identity(int degree);
  int degree() const { return static_cast<int>(images.size()); }
  bool is_identity() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;
};

/// Throws UsageError unless p is a bijection on {0..degree-1}.
void validate_perm(const Perm& p);

/// a*b applies b first: (a*b)(x) = a(b(x)). Group elements multiply so that
/// the Cayley edge g -> g*delta extends the word for g by delta.
Perm mul(const Perm& a, const Perm& b);
Perm inverse(const Perm& p);

struct GroupSpec {
  int degree = 0;
  std::vector<std::pair<std::string, Perm>> generators;  // this is Delta
  long long element_cap = 100000;
};

struct CosetSpec {
  GroupSpec group;  // generators of the ambient group
  std::vector<std::pair<std::string, Perm>> subgroup_generators;
  std::vector<std::pair<std::string, Perm>> delta;
  long long element_cap = 100000;
};

/// Breadth-first closure under right multiplication starting from the
/// identity; element order is discovery order, elements[0] the identity.
std::vector<Perm> close_group(const std::vector<Perm>& generators, int degree,
                              long long cap);

struct CayleyGraph {
  Digraph graph;
  Factorization factors;  // factor j = right multiplication by generator j
  std::vector<Perm> elements;
};

/// Cayley graph on the closure of the generators, one factor per generator.
CayleyGraph build_cayley(const GroupSpec& gs);

/// Shortest-path-tree words from the identity, ties broken by smallest
/// generator index. Spanning and prefix-closed by construction; callers can
/// re-verify with verify_spanning.
WordList cayley_words(const CayleyGraph& cg);

struct CosetViolation {
  std::string condition;  // "i", "ii" or "iii"
  std::string witness;
};

/// Conditions for (Gamma, Delta, H) to define a coset graph: (i) Delta and H
/// are disjoint and together generate Gamma, (ii) H Delta H is contained in
/// Delta H, (iii) the cosets delta H are pairwise distinct.
std::optional<CosetViolation> check_coset_conditions(const CosetSpec& cs);

struct CosetGraph {
  Digraph graph;
  std::vector<Perm> coset_reps;  // canonical (first-discovered) coset members
};

/// Vertices are left cosets gH, edges (gH, g delta H). Throws
/// ConditionViolatedError when check_coset_conditions fails.
CosetGraph build_coset_graph(const CosetSpec& cs);

std::string perm_label(const Perm& p);

}  // namespace spanfact
