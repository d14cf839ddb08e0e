#include "spanfact/cayley.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace spanfact {

Perm Perm::identity(int degree) {
  Perm p;
  p.images.resize(degree);
  for (int i = 0; i < degree; ++i) p.images[i] = i;
  return p;
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images[i] != i) return false;
  return true;
}

void validate_perm(const Perm& p) {
  std::vector<char> seen(p.images.size(), 0);
  for (int v : p.images) {
    if (v < 0 || v >= p.degree() || seen[v])
      throw UsageError("not a permutation of {0.." +
                       std::to_string(p.degree() - 1) + "}");
    seen[v] = 1;
  }
}

Perm mul(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree())
    throw UsageError("permutation degrees differ");
  Perm out;
  out.images.resize(a.degree());
  for (int x = 0; x < a.degree(); ++x) out.images[x] = a.images[b.images[x]];
  return out;
}

Perm inverse(const Perm& p) {
  Perm out;
  out.images.resize(p.degree());
  for (int x = 0; x < p.degree(); ++x) out.images[p.images[x]] = x;
  return out;
}

std::vector<Perm> close_group(const std::vector<Perm>& generators, int degree,
                              long long cap) {
  for (const Perm& g : generators) {
    validate_perm(g);
    if (g.degree() != degree)
      throw UsageError("generator degree does not match the group degree");
  }
  std::vector<Perm> elements = {Perm::identity(degree)};
  std::map<Perm, int> index = {{elements[0], 0}};
  for (std::size_t at = 0; at < elements.size(); ++at) {
    for (const Perm& g : generators) {
      Perm next = mul(elements[at], g);
      if (index.emplace(next, elements.size()).second) {
        elements.push_back(std::move(next));
        if (static_cast<long long>(elements.size()) > cap)
          throw CapExceededError("group closure exceeded the element cap of " +
                                 std::to_string(cap));
      }
    }
  }
  return elements;
}

std::string perm_label(const Perm& p) {
  std::string label;
  for (int i = 0; i < p.degree(); ++i) {
    if (i > 0) label += ',';
    label += std::to_string(p.images[i]);
  }
  return label;
}

CayleyGraph build_cayley(const GroupSpec& gs) {
  if (gs.generators.empty()) throw UsageError("no generators given");
  for (const auto& [name, g] : gs.generators)
    if (g.is_identity())
      throw IdentityGeneratorError("generator '" + name +
                                   "' is the identity");
  std::vector<Perm> gens;
  gens.reserve(gs.generators.size());
  for (const auto& [name, g] : gs.generators) gens.push_back(g);

  std::vector<Perm> elements = close_group(gens, gs.degree, gs.element_cap);
  std::map<Perm, int> index;
  for (int i = 0; i < static_cast<int>(elements.size()); ++i)
    index[elements[i]] = i;

  const int n = static_cast<int>(elements.size());
  const int d = static_cast<int>(gens.size());
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * d);
  std::vector<std::vector<int>> succ(d, std::vector<int>(n));
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int v = 0; v < n; ++v) labels.push_back(perm_label(elements[v]));
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < d; ++i) {
      const int head = index.at(mul(elements[v], gens[i]));
      edges.push_back(Edge{v, head});
      succ[i][v] = head;
    }
  CayleyGraph cg{Digraph(n, std::move(edges), std::move(labels)),
                 make_factorization(std::move(succ)), std::move(elements)};
  return cg;
}

WordList cayley_words(const CayleyGraph& cg) {
  const Factorization& f = cg.factors;
  WordList wl;
  wl.d = f.d;
  wl.words.assign(f.n, Word{});
  std::vector<char> visited(f.n, 0);
  std::queue<int> queue;
  visited[0] = 1;
  queue.push(0);
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop();
    for (int i = 0; i < f.d; ++i) {
      const int v = f.succ[i][u];
      if (!visited[v]) {
        visited[v] = 1;
        wl.words[v] = wl.words[u];
        wl.words[v].letters.push_back(i + 1);
        queue.push(v);
      }
    }
  }
  return wl;
}

namespace {

struct Closure {
  std::vector<Perm> elements;
  std::map<Perm, int> index;
};

Closure closed(const std::vector<Perm>& gens, int degree, long long cap) {
  Closure c;
  c.elements = close_group(gens, degree, cap);
  for (int i = 0; i < static_cast<int>(c.elements.size()); ++i)
    c.index[c.elements[i]] = i;
  return c;
}

std::vector<Perm> named_perms(
    const std::vector<std::pair<std::string, Perm>>& named) {
  std::vector<Perm> out;
  out.reserve(named.size());
  for (const auto& [name, p] : named) out.push_back(p);
  return out;
}

}  // namespace

std::optional<CosetViolation> check_coset_conditions(const CosetSpec& cs) {
  const int degree = cs.group.degree;
  std::vector<Perm> ambient_gens = named_perms(cs.group.generators);
  const Closure gamma = closed(ambient_gens, degree, cs.element_cap);
  const std::vector<Perm> h_gens = named_perms(cs.subgroup_generators);
  const Closure subgroup = closed(h_gens, degree, cs.element_cap);

  for (const auto& [name, p] : cs.delta)
    if (!gamma.index.count(p))
      return CosetViolation{"i", "delta '" + name + "' is not in the group"};
  for (const Perm& h : subgroup.elements)
    if (!gamma.index.count(h))
      return CosetViolation{"i", "subgroup element escapes the group"};

  // (i) disjointness and joint generation
  std::map<Perm, int> h_set;
  for (int i = 0; i < static_cast<int>(subgroup.elements.size()); ++i)
    h_set[subgroup.elements[i]] = i;
  for (const auto& [name, p] : cs.delta)
    if (h_set.count(p))
      return CosetViolation{"i", "delta '" + name + "' lies in H"};
  std::vector<Perm> joint = named_perms(cs.delta);
  joint.insert(joint.end(), h_gens.begin(), h_gens.end());
  const Closure span = closed(joint, degree, cs.element_cap);
  if (span.elements.size() != gamma.elements.size())
    return CosetViolation{
        "i", "delta and H generate only " +
                 std::to_string(span.elements.size()) + " of " +
                 std::to_string(gamma.elements.size()) + " elements"};

  // (ii) H Delta H inside Delta H
  std::map<Perm, std::string> delta_h;
  for (const auto& [name, dperm] : cs.delta)
    for (const Perm& h : subgroup.elements) delta_h[mul(dperm, h)] = name;
  for (const Perm& h1 : subgroup.elements)
    for (const auto& [name, dperm] : cs.delta)
      for (const Perm& h2 : subgroup.elements)
        if (!delta_h.count(mul(mul(h1, dperm), h2)))
          return CosetViolation{
              "ii", "h1 * " + name + " * h2 escapes Delta H"};

  // (iii) pairwise distinct cosets delta H
  std::map<Perm, std::string> coset_min;
  for (const auto& [name, dperm] : cs.delta) {
    Perm least = mul(dperm, subgroup.elements[0]);
    for (const Perm& h : subgroup.elements)
      least = std::min(least, mul(dperm, h));
    const auto [it, inserted] = coset_min.emplace(least, name);
    if (!inserted)
      return CosetViolation{"iii", "delta '" + name + "' and '" + it->second +
                                       "' represent the same coset"};
  }
  return std::nullopt;
}

CosetGraph build_coset_graph(const CosetSpec& cs) {
  if (const auto violation = check_coset_conditions(cs))
    throw ConditionViolatedError(violation->condition, violation->witness);

  const int degree = cs.group.degree;
  const Closure gamma =
      closed(named_perms(cs.group.generators), degree, cs.element_cap);
  const Closure subgroup =
      closed(named_perms(cs.subgroup_generators), degree, cs.element_cap);

  // Cosets in discovery order of their least-index member.
  std::vector<int> coset_of(gamma.elements.size(), -1);
  std::vector<Perm> reps;
  for (int i = 0; i < static_cast<int>(gamma.elements.size()); ++i) {
    if (coset_of[i] >= 0) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(gamma.elements[i]);
    for (const Perm& h : subgroup.elements) {
      const int member = gamma.index.at(mul(gamma.elements[i], h));
      coset_of[member] = id;
    }
  }

  const int n = static_cast<int>(reps.size());
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const Perm& rep : reps) labels.push_back(perm_label(rep));
  for (int v = 0; v < n; ++v)
    for (const auto& [name, dperm] : cs.delta)
      edges.push_back(Edge{v, coset_of[gamma.index.at(mul(reps[v], dperm))]});

  return CosetGraph{Digraph(n, std::move(edges), std::move(labels)),
                    std::move(reps)};
}

}  // namespace spanfact
