#pragma once

#include <algorithm>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "posr/analysis.hpp"
#include "posr/constructions.hpp"
#include "posr/enumerate.hpp"
#include "posr/graph.hpp"
#include "posr/io.hpp"
#include "posr/isomorphism.hpp"
#include "posr/ring.hpp"

namespace posr {

using Witness = std::vector<Element>;

enum class Outcome { pass, fail, not_applicable };

inline const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::pass:
      return "pass";
    case Outcome::fail:
      return "fail";
    case Outcome::not_applicable:
      return "not-applicable";
  }
  return "?";
}

enum class Scope { posemiring, product_pair, ring };

inline const char* to_string(Scope s) {
  switch (s) {
    case Scope::posemiring:
      return "posemiring";
    case Scope::product_pair:
      return "product-pair";
    case Scope::ring:
      return "ring";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Per-instance facts, computed once and shared by all checks

struct PosemiringFacts {
  std::string id;
  PoSemiringTable a;
  ElementAnalysis an;
  ConditionReport cond;
  ZdGraph graph;
  GraphShape shape;
  GraphMetrics metrics;

  PosemiringFacts(std::string id_, PoSemiringTable table)
      : id(std::move(id_)),
        a(std::move(table)),
        an(analyze_elements(a)),
        cond(check_conditions(a)),
        graph(zero_divisor_graph(a)),
        shape(classify_shape(graph)),
        metrics(graph_metrics(graph)) {}

  bool c1() const { return cond.c1.holds; }
  bool c2() const { return cond.c2.holds; }
  bool c3() const { return cond.c3.holds; }
  std::size_t n() const { return a.order(); }
  std::size_t z() const { return an.zero_divisors.size(); }
};

struct PairFacts {
  std::string id;
  PosemiringFacts left, right, product;

  PairFacts(std::string id_, const PoSemiringTable& l, const PoSemiringTable& r)
      : id(std::move(id_)), left("left", l), right("right", r), product(id, direct_product(l, r)) {}
};

struct RingFacts {
  std::string id;
  FiniteRing ring;
  IdealSemiring ideals;
  PosemiringFacts semiring;
  Radicals rad;

  RingFacts(std::string id_, FiniteRing r)
      : id(std::move(id_)),
        ring(std::move(r)),
        ideals(ideal_semiring(ring)),
        semiring(id, ideals.table),
        rad(radicals(ring)) {}
};

template <class Facts>
struct TheoremCheck {
  std::string id;
  std::string statement;
  /// Hypotheses such as chain conditions hold vacuously on finite instances;
  /// such checks carry this flag so reports do not overstate them.
  bool finite_case = false;
  std::function<bool(const Facts&)> applies;
  /// Candidate witnesses; a single empty witness for global assertions.
  std::function<std::vector<Witness>(const Facts&)> domain;
  /// True when the conclusion fails at the given witness.
  std::function<bool(const Facts&, const Witness&)> bad;

  std::optional<Witness> violation(const Facts& f) const {
    for (const Witness& w : domain(f))
      if (bad(f, w)) return w;
    return std::nullopt;
  }
  bool violated_at(const Facts& f, const Witness& w) const { return bad(f, w); }
};

// ---------------------------------------------------------------------------
// Shared predicates

namespace detail {

inline std::vector<Witness> global_domain(const void*) { return {Witness{}}; }

template <class F>
std::vector<Witness> singles(const F& f) {
  std::vector<Witness> out;
  for (Element x = 0; x < f.n(); ++x) out.push_back({x});
  return out;
}

template <class F>
std::vector<Witness> pairs(const F& f) {
  std::vector<Witness> out;
  for (Element x = 0; x < f.n(); ++x)
    for (Element y = 0; y < f.n(); ++y) out.push_back({x, y});
  return out;
}

inline bool zero_square(const PoSemiringTable& a) {
  const ElementSet z = zero_divisors(a);
  for (Element x : z)
    for (Element y : z)
      if (a.mul(x, y) != a.zero()) return false;
  return true;
}

inline bool has_nonzero_nilpotent(const PoSemiringTable& a) {
  for (Element x = 1; x < a.order(); ++x)
    if (is_nilpotent(a, x)) return true;
  return false;
}

inline bool proper_interior_are_zero_divisors(const PosemiringFacts& f) {
  for (Element x = 1; x + 1 < f.n(); ++x)
    if (!f.an.zero_divisors.contains(x)) return false;
  return true;
}

inline std::optional<Element> first_non_zero_divisor(const PosemiringFacts& f) {
  for (Element x = 1; x + 1 < f.n(); ++x)
    if (!f.an.zero_divisors.contains(x)) return x;
  return std::nullopt;
}

/// All (e, f) with e, f idempotent, e + f = 1, ef = 0.
inline std::vector<std::pair<Element, Element>> complementary_pairs(const PoSemiringTable& a) {
  std::vector<std::pair<Element, Element>> out;
  for (Element e = 0; e < a.order(); ++e) {
    if (!is_idempotent(a, e)) continue;
    for (Element f : orthogonal_complements(a, e)) out.emplace_back(e, f);
  }
  return out;
}

inline bool is_boolean_power(const PoSemiringTable& a) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < a.order()) ++k;
  if ((std::size_t{1} << k) != a.order() || k == 0 || k > 6) return false;
  return isomorphic(a, boolean_power(static_cast<unsigned>(k)));
}

inline bool minimals_square_zero(const PosemiringFacts& f) {
  for (Element c : f.an.minimals)
    if (f.a.mul(c, c) != f.a.zero()) return false;
  return true;
}

inline bool nilpotent_or_zero(const PoSemiringTable& a, Element x) { return x == a.zero() || is_nilpotent(a, x); }

inline bool has_complement(const PoSemiringTable& a, Element e) { return !orthogonal_complements(a, e).empty(); }

inline bool acyclic_nonempty(const PosemiringFacts& f) {
  return f.graph.vertices().size() > 0 && is_acyclic(f.graph);
}

/// Stars including K_{1,0} (an isolated vertex) and K_{1,1}.
inline bool star_tree(const GraphShape& s) { return s.is<shape::SingleVertex>() || is_star_like(s); }

inline bool star_or_two_star_one(const GraphShape& s) { return star_tree(s) || is_two_star_one(s); }

/// A isomorphic to {0,1} x S with |Z(S)| = 1, found through the idempotent
/// minimal element e and its complement v. Returns S's order when it holds.
inline std::optional<std::size_t> boolean_times_single_z(const PoSemiringTable& a, Element e, Element v) {
  if (!is_idempotent(a, e) || !is_minimal(a, e)) return std::nullopt;
  const auto comps = orthogonal_complements(a, e);
  if (v == a.zero() || std::find(comps.begin(), comps.end(), v) == comps.end()) return std::nullopt;
  SubInstance s = sub_instance(a, lower_set(a, v), v);
  if (zero_divisors(s.table).size() != 1) return std::nullopt;
  if (!isomorphic(direct_product(trivial_posemiring(), s.table), a)) return std::nullopt;
  return s.table.order();
}

inline std::vector<Witness> idempotent_minimal_complement_pairs(const PosemiringFacts& f) {
  std::vector<Witness> out;
  for (Element e : f.an.minimals & f.an.idempotents)
    for (Element v : orthogonal_complements(f.a, e)) out.push_back({e, v});
  return out;
}

/// Whether the two zero divisors {c,u} fit the incomparable pattern.
inline bool lemma_case_incomparable(const PoSemiringTable& a, Element c, Element u) {
  if (!is_minimal(a, c) || !is_minimal(a, u)) return false;
  for (Element x = 1; x < a.order(); ++x) {
    if (x == c || x == u) continue;
    if (!a.less(c, x) || !a.less(u, x)) return false;
  }
  return is_idempotent(a, c) && is_idempotent(a, u) && is_prime(a, c) && is_prime(a, u);
}

/// Whether c is least nonzero with c^2 = 0, u prime and below every other prime.
inline bool lemma_case_chain(const PoSemiringTable& a, Element c, Element u) {
  if (least_nonzero(a) != std::optional<Element>(c) || a.mul(c, c) != a.zero() || !is_prime(a, u)) return false;
  for (Element p = 0; p < a.order(); ++p)
    if (p != c && p != u && is_prime(a, p) && !a.less(u, p)) return false;
  return true;
}

template <class T>
bool holds_rebuild(const SmallZRecognition& r, const PoSemiringTable& expected_a1) {
  if (!std::holds_alternative<Decomposition>(r)) return false;
  const Decomposition& d = std::get<Decomposition>(r);
  if (!d.is<T>()) return false;
  return isomorphic(d.as<T>().a1, expected_a1);
}

template <class T>
bool recognized_as(const PoSemiringTable& a) {
  try {
    auto r = recognize_small_z(a);
    return std::holds_alternative<Decomposition>(r) && std::get<Decomposition>(r).is<T>();
  } catch (const Counterexample&) {
    return false;
  } catch (const NotApplicable&) {
    return false;
  }
}

/// Isomorphism from the given example into a, if a is a copy of it.
inline std::optional<std::vector<Element>> copy_of(const PoSemiringTable& example, const PoSemiringTable& a) {
  if (example.order() != a.order()) return std::nullopt;
  return find_isomorphism(example, a);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Catalog

inline std::vector<TheoremCheck<PosemiringFacts>> posemiring_checks() {
  using F = PosemiringFacts;
  using namespace detail;
  auto always = [](const F&) { return true; };
  auto global = [](const F&) { return std::vector<Witness>{Witness{}}; };
  auto c1_or_c2 = [](const F& f) { return f.c1() || f.c2(); };
  std::vector<TheoremCheck<F>> out;

  out.push_back({"P2.1a", "every maximal element is prime", false, always, singles<F>,
                 [](const F& f, const Witness& w) { return is_maximal(f.a, w[0]) && !is_prime(f.a, w[0]); }});

  out.push_back({"P2.1b", "for maximal m with mb = 0: m^2 = m or b^2 = 0", false, always, pairs<F>,
                 [](const F& f, const Witness& w) {
                   const Element m = w[0], b = w[1];
                   return is_maximal(f.a, m) && f.a.mul(m, b) == 0 && f.a.mul(m, m) != m && f.a.mul(b, b) != 0;
                 }});

  out.push_back({"P2.1c", "for complementary idempotent pairs, e1 > e2 implies f1 < f2", false, always,
                 [](const F& f) {
                   std::vector<Witness> ws;
                   const auto cp = complementary_pairs(f.a);
                   for (auto [e1, f1] : cp)
                     for (auto [e2, f2] : cp) ws.push_back({e1, f1, e2, f2});
                   return ws;
                 },
                 [](const F& f, const Witness& w) { return f.a.less(w[2], w[0]) && !f.a.less(w[1], w[3]); }});

  out.push_back({"T2.2", "under C1 or C2 every element other than 0 and 1 is a zero divisor", true, c1_or_c2,
                 singles<F>,
                 [](const F& f, const Witness& w) {
                   return w[0] != 0 && w[0] + 1 != f.n() && !f.an.zero_divisors.contains(w[0]);
                 }});

  out.push_back({"T2.2-tail",
                 "under C1 or C2 each c outside {0,1} is nilpotent or has c^n = c^n e for a nontrivial complemented "
                 "idempotent e",
                 true, c1_or_c2, singles<F>, [](const F& f, const Witness& w) {
                   const Element c = w[0];
                   if (c == 0 || c + 1 == f.n() || is_nilpotent(f.a, c)) return false;
                   for (unsigned k = 1; k <= f.n(); ++k) {
                     const Element ck = f.a.power(c, k);
                     for (Element e : f.an.idempotents) {
                       if (e == 0 || e + 1 == f.n() || !has_complement(f.a, e)) continue;
                       if (f.a.mul(ck, e) == ck) return false;
                     }
                   }
                   return true;
                 }});

  out.push_back({"T2.3",
                 "under C2 every idempotent has a complement, nontrivial idempotents are zero divisors, and nonzero "
                 "idempotents are sums of orthogonal primitive idempotents",
                 true, [](const F& f) { return f.c2(); }, singles<F>, [](const F& f, const Witness& w) {
                   const Element e = w[0];
                   if (!is_idempotent(f.a, e)) return false;
                   if (!has_complement(f.a, e)) return true;
                   if (e != 0 && e + 1 != f.n() && !f.an.zero_divisors.contains(e)) return true;
                   if (e == 0) return false;
                   const auto parts = primitive_decomposition(f.a, e);
                   Element sum = 0;
                   for (std::size_t i = 0; i < parts.size(); ++i) {
                     if (!is_primitive_idempotent(f.a, parts[i])) return true;
                     for (std::size_t j = i + 1; j < parts.size(); ++j)
                       if (f.a.mul(parts[i], parts[j]) != 0) return true;
                     sum = f.a.add(sum, parts[i]);
                   }
                   return sum != e;
                 }});

  out.push_back({"T2.7", "under C1 or C2 every prime element is maximal", true, c1_or_c2, singles<F>,
                 [](const F& f, const Witness& w) {
                   return f.an.primes.contains(w[0]) && !f.an.maximals.contains(w[0]);
                 }});

  out.push_back({"T2.9",
                 "when every element other than 0 and 1 is a zero divisor, the maximal elements m1..mk satisfy "
                 "m1...mj + m(j+1) = 1 and give a strictly ascending chain of annihilators",
                 true, [](const F& f) { return proper_interior_are_zero_divisors(f); },
                 [](const F& f) {
                   std::vector<Witness> ws;
                   for (std::size_t j = 1; j < f.an.maximals.size(); ++j) ws.push_back({static_cast<Element>(j)});
                   return ws;
                 },
                 [](const F& f, const Witness& w) {
                   const auto ms = f.an.maximals.to_vector();
                   if (w[0] == 0 || w[0] >= ms.size()) return false;
                   Element prefix = f.a.one();
                   for (Element j = 0; j < w[0]; ++j) prefix = f.a.mul(prefix, ms[j]);
                   const Element next = f.a.mul(prefix, ms[w[0]]);
                   if (f.a.add(prefix, ms[w[0]]) != f.a.one()) return true;
                   const ElementSet lo = annihilator_set(f.a, prefix), hi = annihilator_set(f.a, next);
                   return !(lo.is_subset_of(hi) && lo.size() < hi.size());
                 }});

  out.push_back({"C2.10",
                 "under C2 the prime elements are exactly the maximal elements and every element other than 0 and 1 "
                 "is a zero divisor",
                 true, [](const F& f) { return f.c2(); }, singles<F>, [](const F& f, const Witness& w) {
                   const Element x = w[0];
                   if (f.an.primes.contains(x) != f.an.maximals.contains(x)) return true;
                   return x != 0 && x + 1 != f.n() && !f.an.zero_divisors.contains(x);
                 }});

  out.push_back({"C2.11", "under C1 there are finitely many maximal elements, and a unique one is nilpotent", true,
                 [](const F& f) { return f.c1(); }, global, [](const F& f, const Witness&) {
                   if (f.an.maximals.size() > f.n()) return true;
                   return f.an.maximals.size() == 1 && !nilpotent_or_zero(f.a, f.an.maximals.front());
                 }});

  out.push_back({"P2.13",
                 "u <= v iff <u> is contained in <v> (strictly iff strictly), and every hereditary ideal is a lower "
                 "principal ideal",
                 true, always,
                 [](const F& f) {
                   auto ws = pairs(f);
                   ws.push_back({});
                   return ws;
                 },
                 [](const F& f, const Witness& w) {
                   if (w.empty()) {
                     for (const auto& ideal : enumerate_ideals(f.a)) {
                       if (!ideal.hereditary) continue;
                       Element sum = 0;
                       for (Element x : ideal.members) sum = f.a.add(sum, x);
                       if (!(lower_set(f.a, sum) == ideal.members)) return true;
                     }
                     return false;
                   }
                   const ElementSet lu = lower_set(f.a, w[0]), lv = lower_set(f.a, w[1]);
                   if (f.a.leq(w[0], w[1]) != lu.is_subset_of(lv)) return true;
                   return f.a.less(w[0], w[1]) != (lu.is_subset_of(lv) && lu.size() < lv.size());
                 }});

  out.push_back({"P2.16", "p is prime iff <p> is a prime ideal", false, always, singles<F>,
                 [](const F& f, const Witness& w) {
                   return is_prime(f.a, w[0]) != lower_ideal(f.a, w[0]).prime;
                 }});

  out.push_back({"T3.1", "for non-integral A under C1 or C2 the graph has |A| - 2 vertices", true,
                 [](const F& f) { return f.z() > 0 && (f.c1() || f.c2()); }, global,
                 [](const F& f, const Witness&) { return f.graph.vertices().size() + 2 != f.n(); }});

  out.push_back({"L3.4a", "the middle of a path a-u-b in no triangle and no quadrilateral is minimal", false,
                 [](const F& f) { return f.z() > 0; },
                 [](const F& f) {
                   std::vector<Witness> ws;
                   const auto& g = f.graph;
                   for (std::size_t u = 0; u < g.vertices().size(); ++u)
                     for (std::size_t a : g.neighbors(u))
                       for (std::size_t b : g.neighbors(u))
                         if (a < b) ws.push_back({g.element(a), g.element(u), g.element(b)});
                   return ws;
                 },
                 [](const F& f, const Witness& w) {
                   const auto& g = f.graph;
                   const auto ia = g.index_of(w[0]), iu = g.index_of(w[1]), ib = g.index_of(w[2]);
                   if (!ia || !iu || !ib || !g.adjacent(*ia, *iu) || !g.adjacent(*iu, *ib) || *ia == *ib) return false;
                   if (g.adjacent(*ia, *ib)) return false;
                   for (std::size_t d = 0; d < g.vertices().size(); ++d)
                     if (d != *iu && d != *ia && d != *ib && g.adjacent(d, *ia) && g.adjacent(d, *ib)) return false;
                   return !is_minimal(f.a, w[1]);
                 }});

  out.push_back({"L3.4b",
                 "each minimal element is a zero divisor and the clique number is at least the number of minimal "
                 "elements",
                 false, [](const F& f) { return f.z() > 0; },
                 [](const F& f) {
                   auto ws = singles(f);
                   ws.push_back({});
                   return ws;
                 },
                 [](const F& f, const Witness& w) {
                   if (w.empty()) return f.metrics.clique_number < f.an.minimals.size();
                   return is_minimal(f.a, w[0]) && !f.an.zero_divisors.contains(w[0]);
                 }});

  out.push_back({"L3.4c",
                 "a minimal element is within distance 2 of every vertex, and every clique lies in its "
                 "neighbourhood up to one vertex",
                 false, [](const F& f) { return f.z() > 0; },
                 [](const F& f) {
                   std::vector<Witness> ws;
                   for (Element u : f.an.minimals) {
                     for (Element x : f.graph.vertices()) ws.push_back({u, x});
                     for (const auto& clique : maximal_cliques(f.graph)) {
                       Witness w{u, static_cast<Element>(f.n())};  // marker: clique follows
                       for (std::size_t i : clique) w.push_back(f.graph.element(i));
                       ws.push_back(std::move(w));
                     }
                   }
                   return ws;
                 },
                 [](const F& f, const Witness& w) {
                   const auto& g = f.graph;
                   const auto iu = g.index_of(w[0]);
                   if (!is_minimal(f.a, w[0])) return false;
                   if (!iu) return true;
                   if (w.size() == 2 && w[1] < f.n()) {
                     const auto ix = g.index_of(w[1]);
                     if (!ix) return false;
                     return bfs_distances(g, *iu)[*ix] > 2;
                   }
                   std::size_t outside = 0;
                   for (std::size_t k = 2; k < w.size(); ++k) {
                     const auto iv = g.index_of(w[k]);
                     if (!iv) return false;
                     if (!g.adjacent(*iu, *iv)) ++outside;
                   }
                   return outside > 1;
                 }});

  out.push_back({"T3.5a", "under C3 a nonempty cycle-free graph is a star or a two-star K1+K1+K1+D_r", false,
                 [](const F& f) { return f.c3() && acyclic_nonempty(f); }, global,
                 [](const F& f, const Witness&) { return !star_or_two_star_one(f.shape); }});

  out.push_back({"T3.5b", "under C3 the graph is K1+K1+K1+D_r iff A = {0,1} x S with |Z(S)| = 1 and r = |S| - 2",
                 false, [](const F& f) { return f.c3(); },
                 [](const F& f) {
                   auto ws = idempotent_minimal_complement_pairs(f);
                   ws.insert(ws.begin(), Witness{});
                   return ws;
                 },
                 [](const F& f, const Witness& w) {
                   if (w.empty()) {
                     if (!is_two_star_one(f.shape)) return false;
                     const auto d = split_two_star(f.a);
                     return !d || d->as<TwoStarSplitParts>().r + 2 != d->as<TwoStarSplitParts>().s.order();
                   }
                   const auto s = boolean_times_single_z(f.a, w[0], w[1]);
                   return s && !is_two_star_one(f.shape, *s - 2);
                 }});

  out.push_back({"C3.8",
                 "under C1 a nonempty cycle-free graph is a star or K1+K1+K1+K1, and the latter occurs iff A = {0,1} "
                 "x {0,a,1} with a^2 = 0",
                 true, [](const F& f) { return f.c1(); }, global, [](const F& f, const Witness&) {
                   if (acyclic_nonempty(f) && !star_tree(f.shape) && !is_two_star_one(f.shape, 1)) return true;
                   const bool k1111 = is_two_star_one(f.shape, 1);
                   static const PoSemiringTable target = direct_product(trivial_posemiring(), adjoin_z1(trivial_posemiring()));
                   return k1111 != (f.n() == target.order() && isomorphic(f.a, target));
                 }});

  out.push_back({"L4.1a", "if Z = {c} then c^2 = 0 and c is the least nonzero element and prime", false,
                 [](const F& f) { return f.z() == 1; }, global, [](const F& f, const Witness&) {
                   const Element c = f.an.zero_divisors.front();
                   return f.a.mul(c, c) != 0 || least_nonzero(f.a) != std::optional<Element>(c) || !is_prime(f.a, c);
                 }});

  out.push_back({"L4.1b", "if |Z| = 2 exactly one of the incomparable-idempotent and chain patterns holds", false,
                 [](const F& f) { return f.z() == 2; }, global, [](const F& f, const Witness&) {
                   const auto zs = f.an.zero_divisors.to_vector();
                   const Element c = zs[0], u = zs[1];
                   const bool first = lemma_case_incomparable(f.a, c, u);
                   const bool second = lemma_case_chain(f.a, c, u) || lemma_case_chain(f.a, u, c);
                   return first == second;
                 }});

  out.push_back({"T4.2a",
                 "|Z| = 1 iff A is an integral po-semiring with one element c adjoined below it (both directions)",
                 false, [](const F& f) { return f.z() == 1 || (f.z() == 0 && f.n() < kMaxOrder); }, global,
                 [](const F& f, const Witness&) {
                   try {
                     if (f.z() == 1) {
                       auto r = recognize_small_z(f.a);
                       return !std::holds_alternative<Decomposition>(r) || !std::get<Decomposition>(r).is<Z1Parts>();
                     }
                     const PoSemiringTable b = adjoin_z1(f.a);
                     return zero_divisors(b).size() != 1 || !holds_rebuild<Z1Parts>(recognize_small_z(b), f.a);
                   } catch (const Counterexample&) {
                     return true;
                   }
                 }});

  out.push_back({"T4.2b",
                 "|Z| = 2 with Z^2 != 0 iff A arises from an integral po-semiring by one of the two-element "
                 "extensions (both directions)",
                 false,
                 [](const F& f) { return (f.z() == 2 && !zero_square(f.a)) || (f.z() == 0 && f.n() + 2 <= kMaxOrder); },
                 global, [](const F& f, const Witness&) {
                   try {
                     if (f.z() == 2) {
                       auto r = recognize_small_z(f.a);
                       if (!std::holds_alternative<Decomposition>(r)) return true;
                       const auto& d = std::get<Decomposition>(r);
                       return !d.is<Z2IncomparableParts>() && !d.is<Z2ChainParts>();
                     }
                     for (USquare us : {USquare::c, USquare::u}) {
                       const PoSemiringTable b = adjoin_z2_chain(f.a, us);
                       if (zero_divisors(b).size() != 2 || zero_square(b)) return true;
                       auto r = recognize_small_z(b);
                       if (!holds_rebuild<Z2ChainParts>(r, f.a)) return true;
                       if (std::get<Decomposition>(r).as<Z2ChainParts>().u_square != us) return true;
                     }
                     if (least_nonzero(f.a)) {
                       const PoSemiringTable b = adjoin_z2_incomparable(f.a);
                       if (zero_divisors(b).size() != 2 || zero_square(b)) return true;
                       if (!holds_rebuild<Z2IncomparableParts>(recognize_small_z(b), f.a)) return true;
                     }
                     return false;
                   } catch (const Counterexample&) {
                     return true;
                   }
                 }});

  out.push_back({"C4.3",
                 "C3 with |Z| = 2 and Z^2 != 0 iff A = {0,1}x{0,1} or the chain extension; C3 with |Z| = 2 and no "
                 "nilpotents iff A = {0,1}x{0,1}",
                 false, always, global, [](const F& f, const Witness&) {
                   static const PoSemiringTable square = boolean_power(2);
                   const bool is_square = f.n() == 4 && isomorphic(f.a, square);
                   const bool lhs1 = f.c3() && f.z() == 2 && !zero_square(f.a);
                   const bool rhs1 = is_square || recognized_as<Z2ChainParts>(f.a);
                   const bool lhs2 = f.c3() && f.z() == 2 && !has_nonzero_nilpotent(f.a);
                   return lhs1 != rhs1 || lhs2 != is_square;
                 }});

  out.push_back({"P4.5",
                 "under C3 with |Z| = 2 and Z^2 = 0, A \\ Z is an integral sub-po-semiring and the listed "
                 "extension conditions hold",
                 false, [](const F& f) { return f.c3() && f.z() == 2 && zero_square(f.a); }, global,
                 [](const F& f, const Witness&) {
                   try {
                     auto r = recognize_small_z(f.a);
                     return !std::holds_alternative<ZeroSquarePairReport>(r) ||
                            !std::get<ZeroSquarePairReport>(r).all_hold();
                   } catch (const Counterexample&) {
                     return true;
                   }
                 }});

  out.push_back({"P4.8",
                 "under C3, A = {0,1}^(n) x A1 (or A = A1) where every minimal element of A1 squares to 0, or A1 = "
                 "{0,1}",
                 true, [](const F& f) { return f.c3(); }, global, [](const F& f, const Witness&) {
                   try {
                     const Decomposition d = peel_boolean(f.a);
                     const PoSemiringTable& a1 = d.as<BooleanPeelParts>().a1;
                     if (a1.order() == 2) return false;
                     for (Element c : analyze_elements(a1).minimals)
                       if (a1.mul(c, c) != 0) return true;
                     return false;
                   } catch (const Counterexample&) {
                     return true;
                   }
                 }});

  out.push_back({"E2.6",
                 "the chain with a^2 = a b_i = 0 and b_i b_j = b_min: Z = A \\ {0,1}, a and b_i prime, C2 fails, C3 "
                 "holds",
                 false, [](const F& f) { return f.n() >= 4 && copy_of(example_2_6(static_cast<unsigned>(f.n() - 3)), f.a); },
                 global, [](const F& f, const Witness&) {
                   const PoSemiringTable ex = example_2_6(static_cast<unsigned>(f.n() - 3));
                   const auto iso = *copy_of(ex, f.a);
                   if (!proper_interior_are_zero_divisors(f) || f.c2() || !f.c3()) return true;
                   for (Element x = 1; x + 1 < f.n(); ++x)
                     if (!is_prime(f.a, iso[x])) return true;
                   return false;
                 }});

  out.push_back({"E3.2", "the chain with a^2 = 0 and min otherwise: Z = {a}, an isolated vertex, C2 fails, C3 holds",
                 false, [](const F& f) { return f.n() >= 4 && copy_of(example_3_2(static_cast<unsigned>(f.n() - 3)), f.a); },
                 global, [](const F& f, const Witness&) {
                   const auto iso = *copy_of(example_3_2(static_cast<unsigned>(f.n() - 3)), f.a);
                   return !(f.an.zero_divisors == ElementSet{iso[1]}) || !f.shape.is<shape::SingleVertex>() ||
                          f.c2() || !f.c3();
                 }});

  out.push_back({"E4.6", "the chain 0 < c < u < b_i with cu = 0: |Z| = 2 for every u^2, and Z^2 = 0 when u^2 = 0", false,
                 [](const F& f) {
                   if (f.n() < 5) return false;
                   for (USquare us : {USquare::zero, USquare::c, USquare::u})
                     if (copy_of(example_4_6(static_cast<unsigned>(f.n() - 4), us), f.a)) return true;
                   return false;
                 },
                 global, [](const F& f, const Witness&) {
                   if (f.z() != 2) return true;
                   const bool zero_variant = copy_of(example_4_6(static_cast<unsigned>(f.n() - 4), USquare::zero), f.a).has_value();
                   return zero_variant && !zero_square(f.a);
                 }});

  out.push_back({"E4.7",
                 "the threshold example: |Z| = 2, Z^2 = 0, C3 holds, u is incomparable with b_i for i < n and below "
                 "every other prime",
                 false,
                 [](const F& f) {
                   if (f.n() < 6) return false;
                   const auto k = static_cast<unsigned>(f.n() - 4);
                   for (unsigned m = 2; m <= k; ++m)
                     if (copy_of(example_4_7(k, m), f.a)) return true;
                   return false;
                 },
                 global, [](const F& f, const Witness&) {
                   const auto k = static_cast<unsigned>(f.n() - 4);
                   bool ok = false;
                   for (unsigned m = 2; m <= k && !ok; ++m) {
                     const auto iso = copy_of(example_4_7(k, m), f.a);
                     if (!iso) continue;
                     if (f.z() != 2 || !zero_square(f.a) || !f.c3()) return true;
                     const Element u = (*iso)[2];
                     bool good = true;
                     for (unsigned i = 1; i < m; ++i) {
                       const Element bi = (*iso)[i + 2];
                       if (f.a.leq(u, bi) || f.a.leq(bi, u)) good = false;
                     }
                     for (Element p : f.an.primes)
                       if (p != (*iso)[1] && p != u && !f.a.less(u, p)) good = false;
                     ok = good;
                   }
                   return !ok;
                 }});
  return out;
}

inline std::vector<TheoremCheck<PairFacts>> pair_checks() {
  using F = PairFacts;
  using namespace detail;
  auto global = [](const F&) { return std::vector<Witness>{Witness{}}; };
  auto always = [](const F&) { return true; };
  auto small_z = [](const PosemiringFacts& p) { return p.z() <= 1; };
  std::vector<TheoremCheck<F>> out;

  out.push_back({"L3.3a",
                 "the product graph has no triangle iff one factor is integral and the other has at most one zero "
                 "divisor",
                 false, always, global, [=](const F& f, const Witness&) {
                   const bool rhs = (f.left.z() == 0 && small_z(f.right)) || (f.right.z() == 0 && small_z(f.left));
                   return !has_triangle(f.product.graph) != rhs;
                 }});

  out.push_back({"L3.3b",
                 "the product graph has no cycle iff one factor is {0,1} and the other has at most one zero divisor",
                 false, always, global, [=](const F& f, const Witness&) {
                   const bool rhs = (f.left.n() == 2 && small_z(f.right)) || (f.right.n() == 2 && small_z(f.left));
                   return is_acyclic(f.product.graph) != rhs;
                 }});

  out.push_back({"L3.3c",
                 "the product graph has no quadrilateral iff one factor is {0,1} and the other has at most one zero "
                 "divisor, or two and no nilpotents",
                 false, always, global, [=](const F& f, const Witness&) {
                   auto other_ok = [&](const PosemiringFacts& p) {
                     return p.z() <= 1 || (p.z() == 2 && !has_nonzero_nilpotent(p.a));
                   };
                   const bool rhs = (f.left.n() == 2 && other_ok(f.right)) || (f.right.n() == 2 && other_ok(f.left));
                   return !has_quadrilateral(f.product.graph) != rhs;
                 }});

  out.push_back({"P4.8-converse",
                 "{0,1}^(n) x A1 satisfies C3 when every minimal element of A1 squares to 0", true,
                 [](const F& f) { return is_boolean_power(f.left.a) && minimals_square_zero(f.right); }, global,
                 [](const F& f, const Witness&) { return !f.product.c3(); }});

  out.push_back({"E3.6", "{0,1} x S with |Z(S)| = 1 satisfies C3 and has graph K1+K1+K1+D_r with r = |S| - 2", false,
                 [](const F& f) { return f.left.n() == 2 && f.right.z() == 1; }, global,
                 [](const F& f, const Witness&) {
                   return !f.product.c3() || !is_two_star_one(f.product.shape, f.right.n() - 2);
                 }});
  return out;
}

inline std::vector<TheoremCheck<RingFacts>> ring_checks() {
  using F = RingFacts;
  using namespace detail;
  auto global = [](const F&) { return std::vector<Witness>{Witness{}}; };
  auto always = [](const F&) { return true; };
  auto ideal_indices = [](const F& f) {
    std::vector<Witness> ws;
    for (Element i = 0; i < f.semiring.n(); ++i) ws.push_back({i});
    return ws;
  };
  std::vector<TheoremCheck<F>> out;

  out.push_back({"P1.2", "I(R) satisfies C3, C2 and C1, and J(R) = N(R)", true, always, global,
                 [](const F& f, const Witness&) {
                   return !f.semiring.c3() || !f.semiring.c2() || !f.semiring.c1() ||
                          !(f.rad.jacobson == f.rad.nilradical);
                 }});

  out.push_back({"C2.5",
                 "every nontrivial idempotent ideal is an annihilating ideal and every nonzero one is a sum of ideals "
                 "Re_i for orthogonal primitive idempotents e_i",
                 true, always, ideal_indices, [](const F& f, const Witness& w) {
                   const PoSemiringTable& a = f.semiring.a;
                   const Element i = w[0];
                   if (i == 0 || !is_idempotent(a, i)) return false;
                   if (i + 1 != a.order() && !f.semiring.an.zero_divisors.contains(i)) return true;
                   Element sum = 0;
                   const auto parts = primitive_decomposition(a, i);
                   for (std::size_t x = 0; x < parts.size(); ++x) {
                     for (std::size_t y = x + 1; y < parts.size(); ++y)
                       if (a.mul(parts[x], parts[y]) != 0) return true;
                     sum = a.add(sum, parts[x]);
                     bool generated = false;
                     for (Element e = 0; e < f.ring.order() && !generated; ++e)
                       generated = f.ring.mul(e, e) == e && principal_ideal(f.ring, e) == f.ideals.ideals[parts[x]];
                     if (!generated) return true;
                   }
                   return sum != i;
                 }});

  out.push_back({"C2.8", "every prime ideal of R is maximal, and the prime elements of I(R) are maximal", true, always,
                 ideal_indices, [](const F& f, const Witness& w) {
                   const Element i = w[0];
                   const Ideal& ideal = f.ideals.ideals[i];
                   bool ring_prime = ideal.size() != f.ring.order();
                   for (Element x = 0; x < f.ring.order() && ring_prime; ++x)
                     for (Element y = 0; y < f.ring.order() && ring_prime; ++y)
                       if (ideal.contains(f.ring.mul(x, y)) && !ideal.contains(x) && !ideal.contains(y)) ring_prime = false;
                   const bool maximal = f.semiring.an.maximals.contains(i);
                   return (ring_prime && !maximal) || (f.semiring.an.primes.contains(i) && !maximal) ||
                          ring_prime != f.semiring.an.primes.contains(i);
                 }});

  out.push_back({"C4.4",
                 "AG(R) = K2 iff R is a product of two fields or local with two nontrivial ideals iff R is a product "
                 "of two fields or local with J = R alpha, alpha^3 = 0 != alpha^2",
                 false, always, global, [](const F& f, const Witness&) {
                   const K2Characterization k = characterize_k2(f.ring);
                   return k.statement1() != k.statement2() || k.statement2() != k.statement3();
                 }});

  out.push_back({"T3.5a-ring", "a nonempty cycle-free zero-divisor graph of a ring is a star or a two-star K1+K1+K1+D_r",
                 false, always, global, [](const F& f, const Witness&) {
                   const GraphResult g = ring_zdgraph(f.ring);
                   if (g.graph.vertices().empty() || !is_acyclic(g.graph)) return false;
                   return !star_or_two_star_one(g.shape);
                 }});

  out.push_back({"E3.7-AG", "a nonempty cycle-free AG(R) is a star or K1+K1+K1+K1", false, always, global,
                 [](const F& f, const Witness&) {
                   if (f.semiring.graph.vertices().empty() || !is_acyclic(f.semiring.graph)) return false;
                   return !detail::star_tree(f.semiring.shape) && !is_two_star_one(f.semiring.shape, 1);
                 }});
  return out;
}

struct NotCovered {
  std::string id;
  std::string reason;
};

/// Numbered results without a catalog predicate, with the reason.
inline std::vector<NotCovered> not_covered() {
  return {
      {"C2.4", "infinite exchange-ring hypotheses; the finite content is C2.5 and C2.8"},
      {"C2.12", "noetherian ring statement with no finite content beyond T2.9"},
      {"C2.14", "subsumed by the finite form of P2.13"},
      {"C2.15", "subsumed by the finite form of P2.13"},
      {"R3.9", "census-level claim, checked by the enumeration counts rather than per instance"},
  };
}

// ---------------------------------------------------------------------------
// Corpora

struct NamedInstance {
  std::string id;
  PoSemiringTable table;
};

struct NamedPair {
  std::string id;
  PoSemiringTable left, right;
};

struct Corpus {
  std::vector<NamedInstance> posemirings;
  std::vector<NamedPair> pairs;
  std::vector<NamedRing> rings;
};

inline std::vector<NamedInstance> census_corpus(std::size_t max_order) {
  std::vector<NamedInstance> out;
  for (std::size_t n = 2; n <= max_order; ++n) {
    const CensusResult r = enumerate_posemirings(n);
    for (std::size_t i = 0; i < r.instances.size(); ++i)
      out.push_back({"census:" + std::to_string(n) + "#" + std::to_string(i), r.instances[i]});
  }
  return out;
}

/// Construction specs for every example constructor over k <= max_k.
inline std::vector<std::string> construction_grid_specs(unsigned max_k = 3) {
  std::vector<std::string> specs{"trivial"};
  for (unsigned k = 1; k <= max_k; ++k) {
    const std::string ks = std::to_string(k);
    specs.push_back("chain:k=" + ks);
    specs.push_back("example-2.6:k=" + ks);
    specs.push_back("example-3.2:k=" + ks);
    for (const char* us : {"0", "c", "u"}) specs.push_back("example-4.6:k=" + ks + ",u2=" + us);
    for (unsigned n = 2; n <= k; ++n) specs.push_back("example-4.7:k=" + ks + ",n=" + std::to_string(n));
    specs.push_back("bool:n=" + ks);
  }
  std::vector<std::string> bases{"trivial"};
  for (unsigned k = 1; k <= max_k; ++k) bases.push_back("chain:k=" + std::to_string(k));
  for (const auto& b : bases) {
    specs.push_back("adjoin-z1(" + b + ")");
    specs.push_back("adjoin-z2-incomparable(" + b + ")");
    specs.push_back("adjoin-z2-chain(" + b + "):u2=c");
    specs.push_back("adjoin-z2-chain(" + b + "):u2=u");
  }
  for (unsigned k = 1; k <= max_k; ++k) specs.push_back("product(trivial,example-3.2:k=" + std::to_string(k) + ")");
  return specs;
}

inline std::vector<NamedInstance> construction_grid(unsigned max_k = 3) {
  std::vector<NamedInstance> out;
  for (const auto& s : construction_grid_specs(max_k)) out.push_back({s, construct(s)});
  return out;
}

/// Ordered pairs of census instances up to the given order.
inline std::vector<NamedPair> pair_corpus(std::size_t max_order = 3) {
  const auto base = census_corpus(max_order);
  std::vector<NamedPair> out;
  for (const auto& a : base)
    for (const auto& b : base) out.push_back({a.id + " x " + b.id, a.table, b.table});
  return out;
}

/// Every .psr file in a directory, sorted by file name.
inline std::vector<NamedInstance> file_corpus(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw ParseError(dir, 0, "not a directory");
  std::vector<std::string> paths;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".psr") paths.push_back(entry.path().string());
  std::sort(paths.begin(), paths.end());
  std::vector<NamedInstance> out;
  for (const auto& p : paths) {
    try {
      out.push_back({fs::path(p).filename().string(), read_psr_file(p)});
    } catch (const InvalidInstance& e) {
      throw StructuralError("corpus instance " + p + " is invalid: " + e.what());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Running

struct ReportEntry {
  std::string check;
  std::string instance;
  Scope scope;
  Outcome result;
  std::vector<std::string> witness;
  bool finite_case = false;
};

struct CheckTally {
  std::string check;
  Scope scope;
  bool finite_case = false;
  std::size_t pass = 0, fail = 0, not_applicable = 0;
};

struct TheoremReport {
  std::vector<ReportEntry> entries;
  std::vector<CheckTally> tallies;

  std::vector<ReportEntry> failures() const {
    std::vector<ReportEntry> out;
    for (const auto& e : entries)
      if (e.result == Outcome::fail) out.push_back(e);
    return out;
  }
  std::size_t failure_count() const { return failures().size(); }
  const CheckTally* tally(const std::string& id) const {
    for (const auto& t : tallies)
      if (t.check == id) return &t;
    return nullptr;
  }
};

/// Ids of every catalog check, in catalog order.
inline std::vector<std::string> catalog_ids() {
  std::vector<std::string> ids;
  for (const auto& c : posemiring_checks()) ids.push_back(c.id);
  for (const auto& c : pair_checks()) ids.push_back(c.id);
  for (const auto& c : ring_checks()) ids.push_back(c.id);
  return ids;
}

namespace detail {

template <class Facts>
void run_scope(const std::vector<TheoremCheck<Facts>>& checks, const std::vector<Facts>& facts, Scope scope,
               const std::set<std::string>& selected, const std::function<std::string(const Facts&, Element)>& label,
               TheoremReport& report) {
  for (const auto& check : checks) {
    if (!selected.empty() && !selected.count(check.id)) continue;
    CheckTally tally{check.id, scope, check.finite_case};
    for (const auto& f : facts) {
      ReportEntry e{check.id, f.id, scope, Outcome::not_applicable, {}, check.finite_case};
      if (check.applies(f)) {
        if (auto w = check.violation(f)) {
          e.result = Outcome::fail;
          for (Element x : *w) e.witness.push_back(label(f, x));
        } else {
          e.result = Outcome::pass;
        }
      }
      switch (e.result) {
        case Outcome::pass:
          ++tally.pass;
          break;
        case Outcome::fail:
          ++tally.fail;
          break;
        case Outcome::not_applicable:
          ++tally.not_applicable;
          break;
      }
      report.entries.push_back(std::move(e));
    }
    report.tallies.push_back(tally);
  }
}

inline std::string safe_label(const PoSemiringTable& a, Element x) {
  return x < a.order() ? a.name(x) : std::string("|");
}

}  // namespace detail

/// Evaluates the selected checks (all when empty) over every corpus member
/// of the matching scope. Throws DomainError for unknown check ids.
inline TheoremReport run_catalog(const Corpus& corpus, const std::vector<std::string>& checks = {}) {
  const auto known = catalog_ids();
  for (const auto& id : checks)
    if (std::find(known.begin(), known.end(), id) == known.end()) throw DomainError("unknown check id '" + id + "'");
  const std::set<std::string> selected(checks.begin(), checks.end());

  std::vector<PosemiringFacts> ps;
  for (const auto& inst : corpus.posemirings) ps.emplace_back(inst.id, inst.table);
  std::vector<PairFacts> pairs;
  for (const auto& p : corpus.pairs) pairs.emplace_back(p.id, p.left, p.right);
  std::vector<RingFacts> rings;
  for (const auto& r : corpus.rings) rings.emplace_back(r.spec, r.ring);

  TheoremReport report;
  detail::run_scope<PosemiringFacts>(
      posemiring_checks(), ps, Scope::posemiring, selected,
      [](const PosemiringFacts& f, Element x) { return detail::safe_label(f.a, x); }, report);
  detail::run_scope<PairFacts>(
      pair_checks(), pairs, Scope::product_pair, selected,
      [](const PairFacts& f, Element x) { return detail::safe_label(f.product.a, x); }, report);
  detail::run_scope<RingFacts>(
      ring_checks(), rings, Scope::ring, selected,
      [](const RingFacts& f, Element x) { return detail::safe_label(f.semiring.a, x); }, report);
  return report;
}

/// One line per check, then one line per failure.
inline std::string format_report_text(const TheoremReport& r) {
  std::string out;
  for (const auto& t : r.tallies) {
    out += t.check + " [" + to_string(t.scope) + "] pass=" + std::to_string(t.pass) + " fail=" + std::to_string(t.fail) +
           " not-applicable=" + std::to_string(t.not_applicable) + (t.finite_case ? " (finite-case)" : "") + "\n";
  }
  for (const auto& e : r.failures()) {
    out += "FAIL " + e.check + " on " + e.instance;
    if (!e.witness.empty()) {
      out += " witness=";
      for (std::size_t i = 0; i < e.witness.size(); ++i) out += (i ? "," : "") + e.witness[i];
    }
    out += "\n";
  }
  out += "total failures=" + std::to_string(r.failure_count()) + "\n";
  return out;
}

}  // namespace posr
