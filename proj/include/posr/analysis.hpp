#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "posr/element_set.hpp"
#include "posr/errors.hpp"
#include "posr/table.hpp"

namespace posr {

// ---------------------------------------------------------------------------
// Elements

inline bool is_idempotent(const PoSemiringTable& a, Element x) { return a.mul(x, x) == x; }

/// Nonzero x with xy = 0 for some nonzero y.
inline bool is_zero_divisor(const PoSemiringTable& a, Element x) {
  if (x == a.zero()) return false;
  for (Element y = 1; y < a.order(); ++y)
    if (a.mul(x, y) == a.zero()) return true;
  return false;
}

inline ElementSet zero_divisors(const PoSemiringTable& a) {
  ElementSet z;
  for (Element x = 1; x < a.order(); ++x)
    if (is_zero_divisor(a, x)) z.insert(x);
  return z;
}

/// Least k >= 1 with x^k = 0, if any. Undefined (DomainError) for x = 0.
inline std::optional<unsigned> nilpotency_index(const PoSemiringTable& a, Element x) {
  check_element(a, x);
  if (x == a.zero()) throw DomainError("nilpotency index is not defined for 0");
  Element p = x;
  // Powers of x cycle within order() steps.
  for (unsigned k = 1; k <= a.order(); ++k) {
    if (p == a.zero()) return k;
    p = a.mul(p, x);
  }
  return std::nullopt;
}

inline bool is_nilpotent(const PoSemiringTable& a, Element x) {
  return x == a.zero() || nilpotency_index(a, x).has_value();
}

/// p != 1 and xy <= p implies x <= p or y <= p. Zero qualifies exactly when
/// the instance is integral.
inline bool is_prime(const PoSemiringTable& a, Element p) {
  if (p == a.one()) return false;
  const auto n = static_cast<Element>(a.order());
  for (Element x = 0; x < n; ++x) {
    if (a.leq(x, p)) continue;
    for (Element y = 0; y < n; ++y)
      if (a.leq(a.mul(x, y), p) && !a.leq(y, p)) return false;
  }
  return true;
}

/// m != 1 and m <= x < 1 implies x = m.
inline bool is_maximal(const PoSemiringTable& a, Element m) {
  if (m == a.one()) return false;
  for (Element x = 0; x < a.order(); ++x)
    if (x != a.one() && a.less(m, x)) return false;
  return true;
}

/// x != 0 and 0 < y <= x implies y = x.
inline bool is_minimal(const PoSemiringTable& a, Element x) {
  if (x == a.zero()) return false;
  for (Element y = 1; y < a.order(); ++y)
    if (a.less(y, x)) return false;
  return true;
}

/// All idempotents v with w + v = 1 and wv = 0, in index order. Complements
/// are unique when they exist, but the full list is kept.
inline std::vector<Element> orthogonal_complements(const PoSemiringTable& a, Element w) {
  std::vector<Element> out;
  for (Element v = 0; v < a.order(); ++v)
    if (is_idempotent(a, v) && a.add(w, v) == a.one() && a.mul(w, v) == a.zero()) out.push_back(v);
  return out;
}

/// Least-index orthogonal idempotent complement of a nonzero idempotent w.
inline std::optional<Element> orthogonal_complement(const PoSemiringTable& a, Element w) {
  check_element(a, w);
  if (w == a.zero() || !is_idempotent(a, w))
    throw DomainError("'" + a.name(w) + "' is not a nonzero idempotent");
  auto all = orthogonal_complements(a, w);
  if (all.empty()) return std::nullopt;
  return all.front();
}

/// Nonzero idempotent that is not f + g for nonzero orthogonal idempotents f, g.
/// Unlike ElementAnalysis::primitive_idempotents this admits 1.
inline bool is_primitive_idempotent(const PoSemiringTable& a, Element e) {
  if (e == a.zero() || !is_idempotent(a, e)) return false;
  const auto n = static_cast<Element>(a.order());
  for (Element f = 1; f < n; ++f) {
    if (!is_idempotent(a, f)) continue;
    for (Element g = f; g < n; ++g)
      if (is_idempotent(a, g) && a.mul(f, g) == a.zero() && a.add(f, g) == e) return false;
  }
  return true;
}

struct ElementAnalysis {
  ElementSet zero_divisors;
  /// Indexed by element; slot 0 is always empty.
  std::vector<std::optional<unsigned>> nilpotency;
  ElementSet idempotents;
  ElementSet primitive_idempotents;
  ElementSet primes;
  ElementSet maximals;
  ElementSet minimals;

  bool integral() const { return zero_divisors.empty(); }
};

inline ElementAnalysis analyze_elements(const PoSemiringTable& a) {
  ElementAnalysis r;
  const auto n = static_cast<Element>(a.order());
  r.nilpotency.assign(n, std::nullopt);
  for (Element x = 0; x < n; ++x) {
    if (x != a.zero()) {
      r.nilpotency[x] = nilpotency_index(a, x);
      if (is_zero_divisor(a, x)) r.zero_divisors.insert(x);
      if (is_idempotent(a, x)) r.idempotents.insert(x);
      if (x != a.one() && is_primitive_idempotent(a, x)) r.primitive_idempotents.insert(x);
    }
    if (is_prime(a, x)) r.primes.insert(x);
    if (is_maximal(a, x)) r.maximals.insert(x);
    if (is_minimal(a, x)) r.minimals.insert(x);
  }
  return r;
}

/// The element below every nonzero element, if one exists.
inline std::optional<Element> least_nonzero(const PoSemiringTable& a) {
  for (Element c = 1; c < a.order(); ++c) {
    bool below_all = true;
    for (Element x = 1; x < a.order() && below_all; ++x) below_all = a.leq(c, x);
    if (below_all) return c;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Ideals

struct IdealSubset {
  ElementSet members;
  bool hereditary = false;
  bool prime = false;
  bool principal_annihilating = false;
  std::optional<Element> lower_principal;

  friend bool operator==(const IdealSubset&, const IdealSubset&) = default;
};

/// Contains 0, closed under addition, absorbs multiplication.
inline bool is_ideal(const PoSemiringTable& a, ElementSet s) {
  if (!s.contains(a.zero()) || !s.is_subset_of(a.all())) return false;
  for (Element i : s) {
    for (Element j : s)
      if (!s.contains(a.add(i, j))) return false;
    for (Element x = 0; x < a.order(); ++x)
      if (!s.contains(a.mul(i, x))) return false;
  }
  return true;
}

inline ElementSet lower_set(const PoSemiringTable& a, Element u) {
  ElementSet s;
  for (Element x = 0; x < a.order(); ++x)
    if (a.leq(x, u)) s.insert(x);
  return s;
}

inline ElementSet annihilator_set(const PoSemiringTable& a, Element u) {
  ElementSet s;
  for (Element x = 0; x < a.order(); ++x)
    if (a.mul(x, u) == a.zero()) s.insert(x);
  return s;
}

/// Fills in the flags of an ideal. Throws DomainError if s is not an ideal.
inline IdealSubset describe_ideal(const PoSemiringTable& a, ElementSet s) {
  if (!is_ideal(a, s)) throw DomainError("subset " + format_set(a, s) + " is not an ideal");
  IdealSubset r;
  r.members = s;
  r.hereditary = true;
  for (Element u : s)
    if (!lower_set(a, u).is_subset_of(s)) {
      r.hereditary = false;
      break;
    }
  r.prime = s != a.all();
  for (Element x = 0; x < a.order() && r.prime; ++x)
    for (Element y = 0; y < a.order() && r.prime; ++y)
      if (s.contains(a.mul(x, y)) && !s.contains(x) && !s.contains(y)) r.prime = false;
  for (Element v = 0; v < a.order(); ++v)
    if (annihilator_set(a, v) == s) {
      r.principal_annihilating = true;
      break;
    }
  Element top = a.zero();
  for (Element u : s) top = a.add(top, u);
  if (lower_set(a, top) == s) r.lower_principal = top;
  return r;
}

inline IdealSubset annihilator(const PoSemiringTable& a, Element u) {
  check_element(a, u);
  return describe_ideal(a, annihilator_set(a, u));
}

inline IdealSubset lower_ideal(const PoSemiringTable& a, Element u) {
  check_element(a, u);
  return describe_ideal(a, lower_set(a, u));
}

/// Smallest ideal containing s.
inline ElementSet ideal_closure(const PoSemiringTable& a, ElementSet s) {
  s.insert(a.zero());
  bool grew = true;
  while (grew) {
    grew = false;
    for (Element i : s) {
      for (Element j : s) {
        Element k = a.add(i, j);
        if (!s.contains(k)) {
          s.insert(k);
          grew = true;
        }
      }
      for (Element x = 0; x < a.order(); ++x) {
        Element k = a.mul(i, x);
        if (!s.contains(k)) {
          s.insert(k);
          grew = true;
        }
      }
    }
  }
  return s;
}

/// Every ideal, ordered by size and then member list. Ideals are reached by
/// closing an ideal together with one more element, starting from {0}.
inline std::vector<IdealSubset> enumerate_ideals(const PoSemiringTable& a) {
  std::set<ElementSet> found;
  std::vector<ElementSet> frontier{ideal_closure(a, {})};
  found.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<ElementSet> next;
    for (ElementSet s : frontier)
      for (Element x = 0; x < a.order(); ++x) {
        if (s.contains(x)) continue;
        ElementSet t = s;
        t.insert(x);
        t = ideal_closure(a, t);
        if (found.insert(t).second) next.push_back(t);
      }
    frontier = std::move(next);
  }
  std::vector<IdealSubset> out;
  out.reserve(found.size());
  for (ElementSet s : found) out.push_back(describe_ideal(a, s));
  return out;
}

// ---------------------------------------------------------------------------
// Conditions C1, C2, C3

struct ConditionOutcome {
  bool holds = true;
  std::optional<Element> counterexample;
  /// Element u -> (w, v): w <= u nonzero idempotent, v its complement.
  std::map<Element, std::pair<Element, Element>> witnesses;
};

struct ConditionReport {
  ConditionOutcome c1;
  ConditionOutcome c2;
  ConditionOutcome c3;
};

namespace detail {

inline std::optional<std::pair<Element, Element>> dominated_split(const PoSemiringTable& a, Element u) {
  for (Element w = 1; w < a.order(); ++w) {
    if (!is_idempotent(a, w) || !a.leq(w, u)) continue;
    auto comps = orthogonal_complements(a, w);
    if (!comps.empty()) return std::pair{w, comps.front()};
  }
  return std::nullopt;
}

template <class Domain, class Witness>
ConditionOutcome evaluate_condition(const PoSemiringTable& a, Domain in_domain, Witness witness) {
  ConditionOutcome out;
  for (Element u = 0; u < a.order(); ++u) {
    if (!in_domain(u)) continue;
    auto w = witness(u);
    if (!w) {
      out.holds = false;
      out.counterexample = u;
      out.witnesses.clear();
      return out;
    }
    out.witnesses.emplace(u, *w);
  }
  return out;
}

}  // namespace detail

inline ConditionReport check_conditions(const PoSemiringTable& a) {
  ConditionReport r;
  auto split = [&](Element u) { return detail::dominated_split(a, u); };
  r.c1 = detail::evaluate_condition(
      a, [&](Element u) { return !is_nilpotent(a, u); }, split);
  r.c2 = detail::evaluate_condition(
      a, [&](Element u) { return u != a.zero() && is_idempotent(a, u); }, split);
  r.c3 = detail::evaluate_condition(
      a, [&](Element u) { return is_minimal(a, u) && is_idempotent(a, u); },
      [&](Element u) -> std::optional<std::pair<Element, Element>> {
        auto comps = orthogonal_complements(a, u);
        if (comps.empty()) return std::nullopt;
        return std::pair{u, comps.front()};
      });
  return r;
}

/// Splits a nonzero idempotent into pairwise orthogonal primitive idempotents,
/// taking the least-index primitive summand first.
inline std::vector<Element> primitive_decomposition(const PoSemiringTable& a, Element e) {
  check_element(a, e);
  if (e == a.zero() || !is_idempotent(a, e))
    throw DomainError("'" + a.name(e) + "' is not a nonzero idempotent");
  if (!check_conditions(a).c2.holds) throw NotApplicable("condition C2 does not hold");

  std::vector<Element> parts;
  Element rest = e;
  while (!is_primitive_idempotent(a, rest)) {
    std::optional<std::pair<Element, Element>> step;
    for (Element p = 1; p < a.order() && !step; ++p) {
      if (p == rest || !is_primitive_idempotent(a, p)) continue;
      for (Element q = 1; q < a.order(); ++q)
        if (is_idempotent(a, q) && a.mul(p, q) == a.zero() && a.add(p, q) == rest) {
          step = std::pair{p, q};
          break;
        }
    }
    if (!step) throw Counterexample("no primitive summand of '" + a.name(rest) + "'", {rest});
    parts.push_back(step->first);
    rest = step->second;
  }
  parts.push_back(rest);
  return parts;
}

}  // namespace posr
