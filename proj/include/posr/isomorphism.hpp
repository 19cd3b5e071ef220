#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "posr/analysis.hpp"
#include "posr/table.hpp"

namespace posr {

/// Isomorphism-invariant fingerprint of one element.
using ElementInvariant = std::array<unsigned, 8>;

inline std::vector<ElementInvariant> element_invariants(const PoSemiringTable& a) {
  const auto n = static_cast<Element>(a.order());
  std::vector<ElementInvariant> out(n);
  for (Element x = 0; x < n; ++x) {
    ElementInvariant& inv = out[x];
    inv.fill(0);
    for (Element y = 0; y < n; ++y) {
      if (a.leq(y, x)) ++inv[0];
      if (a.leq(x, y)) ++inv[1];
      if (y != a.zero() && a.mul(x, y) == a.zero()) ++inv[2];
      if (a.mul(x, y) == x) ++inv[3];
      if (a.add(x, y) == a.one()) ++inv[4];
    }
    if (x == a.zero()) {
      inv[5] = 1;
    } else {
      auto k = nilpotency_index(a, x);
      inv[5] = k ? *k : 0;
    }
    inv[6] = is_idempotent(a, x) ? 1 : 0;
    const Element sq = a.mul(x, x);
    for (Element y = 0; y < n; ++y)
      if (a.leq(y, sq)) ++inv[7];
  }
  return out;
}

namespace detail {

class IsoSearch {
 public:
  IsoSearch(const PoSemiringTable& a, const PoSemiringTable& b)
      : a_(a), b_(b), ia_(element_invariants(a)), ib_(element_invariants(b)), n_(a.order()) {}

  std::optional<std::vector<Element>> run() {
    if (b_.order() != n_) return std::nullopt;
    auto sa = ia_;
    auto sb = ib_;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
    fwd_.assign(n_, kUnset);
    inv_.assign(n_, kUnset);
    if (!assign(a_.zero(), b_.zero()) || !assign(a_.one(), b_.one())) return std::nullopt;
    if (!solve()) return std::nullopt;
    return fwd_;
  }

 private:
  static constexpr Element kUnset = ~Element{0};

  bool assign(Element x, Element y) {
    std::vector<Element> queue;
    auto bind = [&](Element p, Element q) {
      if (fwd_[p] != kUnset) return fwd_[p] == q;
      if (inv_[q] != kUnset || ia_[p] != ib_[q]) return false;
      fwd_[p] = q;
      inv_[q] = p;
      trail_.push_back(p);
      queue.push_back(p);
      return true;
    };
    if (!bind(x, y)) return false;
    while (!queue.empty()) {
      Element p = queue.back();
      queue.pop_back();
      for (Element z = 0; z < n_; ++z) {
        if (fwd_[z] == kUnset) continue;
        if (!bind(a_.add(p, z), b_.add(fwd_[p], fwd_[z]))) return false;
        if (!bind(a_.mul(p, z), b_.mul(fwd_[p], fwd_[z]))) return false;
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      Element p = trail_.back();
      trail_.pop_back();
      inv_[fwd_[p]] = kUnset;
      fwd_[p] = kUnset;
    }
  }

  bool solve() {
    // Branch on the unassigned element with the fewest candidates.
    Element pick = kUnset;
    std::vector<Element> best;
    for (Element x = 0; x < n_; ++x) {
      if (fwd_[x] != kUnset) continue;
      std::vector<Element> cands;
      for (Element y = 0; y < n_; ++y)
        if (inv_[y] == kUnset && ia_[x] == ib_[y]) cands.push_back(y);
      if (pick == kUnset || cands.size() < best.size()) {
        pick = x;
        best = std::move(cands);
      }
    }
    if (pick == kUnset) return true;
    for (Element y : best) {
      const std::size_t mark = trail_.size();
      if (assign(pick, y) && solve()) return true;
      undo(mark);
    }
    return false;
  }

  const PoSemiringTable& a_;
  const PoSemiringTable& b_;
  std::vector<ElementInvariant> ia_, ib_;
  std::size_t n_;
  std::vector<Element> fwd_, inv_, trail_;
};

}  // namespace detail

/// True iff perm (indices of a -> indices of b) is a bijection fixing 0 and 1
/// that carries both tables of a onto those of b.
inline bool transports(const PoSemiringTable& a, const PoSemiringTable& b, const std::vector<Element>& perm) {
  const auto n = static_cast<Element>(a.order());
  if (b.order() != n || perm.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (Element p : perm) {
    if (p >= n || hit[p]) return false;
    hit[p] = true;
  }
  if (perm[a.zero()] != b.zero() || perm[a.one()] != b.one()) return false;
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (perm[a.add(x, y)] != b.add(perm[x], perm[y]) || perm[a.mul(x, y)] != b.mul(perm[x], perm[y]))
        return false;
  return true;
}

/// An isomorphism a -> b (as an index map), or nothing.
inline std::optional<std::vector<Element>> find_isomorphism(const PoSemiringTable& a, const PoSemiringTable& b) {
  auto perm = detail::IsoSearch(a, b).run();
  if (perm && !transports(a, b, *perm)) return std::nullopt;
  return perm;
}

inline bool isomorphic(const PoSemiringTable& a, const PoSemiringTable& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace posr
