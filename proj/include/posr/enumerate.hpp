#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "posr/axioms.hpp"
#include "posr/errors.hpp"
#include "posr/isomorphism.hpp"
#include "posr/table.hpp"

namespace posr {

// ---------------------------------------------------------------------------
// Canonical forms

struct CanonicalOptions {
  /// Upper bound on the number of labelings tried.
  std::uint64_t max_labelings = 5'000'000;
};

struct Canonical {
  /// Byte string: order, then the add rows, then the mul rows, relabeled.
  std::string form;
  /// The instance relabeled into canonical index order (labels travel along).
  PoSemiringTable table;
  /// Number of automorphisms fixing 0 and 1.
  std::uint64_t automorphisms;
};

namespace detail {

/// Visits every bijection new-index -> old-index that keeps 0 and 1 in place
/// and lists the middle elements grouped by invariant class in class order.
template <class Visit>
void for_each_class_labeling(const std::vector<ElementInvariant>& inv, std::uint64_t cap, Visit&& visit) {
  const auto n = static_cast<Element>(inv.size());
  std::vector<Element> middle(n - 2);
  std::iota(middle.begin(), middle.end(), Element{1});
  std::stable_sort(middle.begin(), middle.end(), [&](Element x, Element y) { return inv[x] < inv[y]; });
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < middle.size();) {
    std::size_t j = i;
    while (j < middle.size() && inv[middle[j]] == inv[middle[i]]) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  std::uint64_t total = 1;
  for (auto [b, e] : blocks)
    for (std::size_t k = 2; k <= e - b; ++k) {
      total *= k;
      if (total > cap) throw CapExceeded("canonical form needs more than " + std::to_string(cap) + " labelings");
    }
  std::vector<Element> order(n);
  order[0] = 0;
  order[n - 1] = n - 1;
  // Odometer over the per-block permutations.
  for (auto [b, e] : blocks) std::sort(middle.begin() + static_cast<long>(b), middle.begin() + static_cast<long>(e));
  while (true) {
    std::copy(middle.begin(), middle.end(), order.begin() + 1);
    visit(order);
    std::size_t bi = 0;
    for (; bi < blocks.size(); ++bi) {
      auto [b, e] = blocks[bi];
      if (std::next_permutation(middle.begin() + static_cast<long>(b), middle.begin() + static_cast<long>(e))) break;
    }
    if (bi == blocks.size()) return;
  }
}

/// Serialization of tables relabeled by `order` (new -> old).
inline std::string serialize_relabeled(const std::vector<const std::vector<Element>*>& tables, std::size_t n,
                                       const std::vector<Element>& order) {
  std::vector<Element> back(n);
  for (Element i = 0; i < n; ++i) back[order[i]] = i;
  std::string s;
  s.reserve(1 + tables.size() * n * n);
  s.push_back(static_cast<char>(n));
  for (const auto* t : tables)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s.push_back(static_cast<char>(back[(*t)[order[i] * n + order[j]]]));
  return s;
}

/// Invariants of a single commutative table with 0 at index 0 and the top
/// at n-1, read as a join: (down-set size, up-set size).
inline std::vector<ElementInvariant> join_invariants(const std::vector<Element>& join, std::size_t n) {
  std::vector<ElementInvariant> inv(n);
  for (std::size_t x = 0; x < n; ++x) {
    inv[x].fill(0);
    for (std::size_t y = 0; y < n; ++y) {
      if (join[y * n + x] == x) ++inv[x][0];
      if (join[x * n + y] == y) ++inv[x][1];
    }
  }
  return inv;
}

}  // namespace detail

inline Canonical canonicalize(const PoSemiringTable& a, CanonicalOptions opts = {}) {
  const std::size_t n = a.order();
  const auto inv = element_invariants(a);
  std::string best;
  std::vector<Element> best_order;
  std::uint64_t ties = 0;
  detail::for_each_class_labeling(inv, opts.max_labelings, [&](const std::vector<Element>& order) {
    std::string s = detail::serialize_relabeled({&a.add_table(), &a.mul_table()}, n, order);
    if (best_order.empty() || s < best) {
      best = std::move(s);
      best_order = order;
      ties = 1;
    } else if (s == best) {
      ++ties;
    }
  });
  RawTables t;
  t.add.assign(n, std::vector<Element>(n));
  t.mul.assign(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i) {
    t.names.push_back(a.name(best_order[i]));
    for (std::size_t j = 0; j < n; ++j) {
      t.add[i][j] = static_cast<Element>(static_cast<unsigned char>(best[1 + i * n + j]));
      t.mul[i][j] = static_cast<Element>(static_cast<unsigned char>(best[1 + n * n + i * n + j]));
    }
  }
  return Canonical{best, PoSemiringTable(t), ties};
}

/// Equal for two instances iff they are isomorphic.
inline std::string canonical_form(const PoSemiringTable& a, CanonicalOptions opts = {}) {
  return canonicalize(a, opts).form;
}

/// Canonical form of a single join table (used for lattices).
inline std::string canonical_join_form(const std::vector<Element>& join, std::size_t n, CanonicalOptions opts = {}) {
  const auto inv = detail::join_invariants(join, n);
  std::string best;
  bool first = true;
  detail::for_each_class_labeling(inv, opts.max_labelings, [&](const std::vector<Element>& order) {
    std::string s = detail::serialize_relabeled({&join}, n, order);
    if (first || s < best) best = std::move(s);
    first = false;
  });
  return best;
}

/// Short stable hash of a canonical form (FNV-1a, 64 bit), as hex.
inline std::string form_hash(const std::string& form) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : form) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = digits[h & 15];
  return out;
}

// ---------------------------------------------------------------------------
// Bounded lattices

/// Join table (flat, n*n) of a lattice on {0..n-1} with bottom 0, top n-1.
struct LatticeTable {
  std::size_t order;
  std::vector<Element> join;
  bool leq(Element x, Element y) const { return join[x * order + y] == y; }
};

/// All lattices of order n up to isomorphism, sorted by canonical form.
inline std::vector<LatticeTable> bounded_lattices(std::size_t n) {
  if (n < 2) throw DomainError("lattice order must be at least 2");
  if (n > 8) throw CapExceeded("bounded lattices are generated up to order 8");
  const std::size_t m = n - 2;
  std::vector<std::pair<Element, Element>> pairs;
  for (Element i = 1; i <= m; ++i)
    for (Element j = i + 1; j <= m; ++j) pairs.emplace_back(i, j);
  std::uint64_t combos = 1;
  for (std::size_t k = 0; k < pairs.size(); ++k) combos *= 3;

  std::map<std::string, LatticeTable> found;
  std::vector<char> le(n * n);
  for (std::uint64_t code = 0; code < combos; ++code) {
    std::fill(le.begin(), le.end(), 0);
    for (std::size_t x = 0; x < n; ++x) {
      le[x * n + x] = 1;
      le[0 * n + x] = 1;
      le[x * n + n - 1] = 1;
    }
    std::uint64_t c = code;
    for (auto [i, j] : pairs) {
      const auto r = c % 3;
      c /= 3;
      if (r == 1) le[i * n + j] = 1;
      if (r == 2) le[j * n + i] = 1;
    }
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t y = 0; y < n && ok; ++y)
        if (le[x * n + y])
          for (std::size_t z = 0; z < n; ++z)
            if (le[y * n + z] && !le[x * n + z]) {
              ok = false;
              break;
            }
    if (!ok) continue;
    LatticeTable lat{n, std::vector<Element>(n * n)};
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t y = x; y < n && ok; ++y) {
        std::optional<Element> least;
        for (Element u = 0; u < n; ++u) {
          if (!le[x * n + u] || !le[y * n + u]) continue;
          if (!least || le[u * n + *least]) least = u;
        }
        for (Element u = 0; u < n && ok; ++u)
          if (le[x * n + u] && le[y * n + u] && !le[*least * n + u]) ok = false;
        lat.join[x * n + y] = lat.join[y * n + x] = *least;
      }
    if (!ok) continue;
    std::string form = canonical_join_form(lat.join, n);
    found.emplace(std::move(form), std::move(lat));
  }
  std::vector<LatticeTable> out;
  for (auto& [form, lat] : found) out.push_back(std::move(lat));
  return out;
}

// ---------------------------------------------------------------------------
// Census

enum class EnumerationMode { fast, naive };

struct EnumerationOptions {
  EnumerationMode mode = EnumerationMode::fast;
  std::size_t fast_cap = 6;
  std::size_t naive_cap = 4;
};

struct CensusResult {
  std::size_t order = 0;
  std::size_t count_up_to_iso = 0;
  std::uint64_t count_labeled = 0;
  /// Canonical representatives, sorted by canonical form.
  std::vector<PoSemiringTable> instances;
  std::vector<std::string> canonical_forms;
  double seconds = 0;
};

namespace detail {

inline std::vector<std::string> census_names(std::size_t n) {
  std::vector<std::string> names{"0"};
  for (std::size_t i = 1; i + 1 < n; ++i)
    names.push_back(n <= 27 ? std::string(1, static_cast<char>('a' + i - 1)) : "x" + std::to_string(i));
  names.push_back("1");
  return names;
}

inline std::uint64_t factorial(std::size_t k) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= i;
  return f;
}

class CensusCollector {
 public:
  explicit CensusCollector(std::size_t n) : n_(n) {}

  void add(const RawTables& raw) {
    Canonical c = canonicalize(PoSemiringTable(raw));
    if (classes_.count(c.form)) return;
    labeled_ += factorial(n_ - 2) / c.automorphisms;
    classes_.emplace(std::move(c.form), std::move(c.table));
  }

  void add_labeled(const RawTables& raw) {
    ++direct_labeled_;
    Canonical c = canonicalize(PoSemiringTable(raw));
    classes_.emplace(std::move(c.form), std::move(c.table));
  }

  CensusResult finish(bool direct, double seconds) const {
    CensusResult r;
    r.order = n_;
    r.count_up_to_iso = classes_.size();
    r.count_labeled = direct ? direct_labeled_ : labeled_;
    for (const auto& [form, table] : classes_) {
      r.canonical_forms.push_back(form);
      r.instances.push_back(table.renamed(census_names(n_)));
    }
    r.seconds = seconds;
    return r;
  }

 private:
  std::size_t n_;
  std::map<std::string, PoSemiringTable> classes_;
  std::uint64_t labeled_ = 0;
  std::uint64_t direct_labeled_ = 0;
};

inline RawTables blank_tables(std::size_t n) {
  RawTables t;
  t.names = census_names(n);
  t.add.assign(n, std::vector<Element>(n));
  t.mul.assign(n, std::vector<Element>(n));
  const auto top = static_cast<Element>(n - 1);
  for (Element x = 0; x < n; ++x) {
    t.add[0][x] = t.add[x][0] = x;
    t.add[top][x] = t.add[x][top] = top;
    t.mul[0][x] = t.mul[x][0] = 0;
    t.mul[top][x] = t.mul[x][top] = x;
  }
  t.mul[0][top] = t.mul[top][0] = 0;
  return t;
}

/// Backtracking over multiplication tables on a fixed lattice.
class MulSearch {
 public:
  MulSearch(const LatticeTable& lat, CensusCollector& out) : lat_(lat), n_(lat.order), out_(out) {
    for (Element i = 1; i + 1 < n_; ++i)
      for (Element j = i; j + 1 < n_; ++j) cells_.emplace_back(i, j);
    mul_.assign(n_ * n_, kUnset);
    const auto top = static_cast<Element>(n_ - 1);
    for (Element x = 0; x < n_; ++x) {
      set(0, x, 0);
      set(top, x, x);
    }
    set(0, top, 0);
  }

  void run() { solve(0); }

 private:
  static constexpr Element kUnset = ~Element{0};

  void set(Element x, Element y, Element v) { mul_[x * n_ + y] = mul_[y * n_ + x] = v; }
  Element get(Element x, Element y) const { return mul_[x * n_ + y]; }
  Element join(Element x, Element y) const { return lat_.join[x * n_ + y]; }

  bool consistent() const {
    for (Element x = 1; x + 1 < n_; ++x)
      for (Element y = 1; y + 1 < n_; ++y) {
        const Element xy = get(x, y);
        for (Element z = 1; z + 1 < n_; ++z) {
          if (xy != kUnset) {
            const Element l = get(xy, z), yz = get(y, z);
            if (l != kUnset && yz != kUnset) {
              const Element r = get(x, yz);
              if (r != kUnset && l != r) return false;
            }
            // Monotone in the first argument.
            if (lat_.leq(x, z)) {
              const Element zy = get(z, y);
              if (zy != kUnset && !lat_.leq(xy, zy)) return false;
            }
          }
          const Element s = get(x, join(y, z)), p = get(x, z);
          if (s != kUnset && xy != kUnset && p != kUnset && s != join(xy, p)) return false;
        }
      }
    return true;
  }

  void solve(std::size_t k) {
    if (k == cells_.size()) {
      RawTables t = blank_tables(n_);
      for (Element x = 0; x < n_; ++x)
        for (Element y = 0; y < n_; ++y) {
          t.add[x][y] = join(x, y);
          t.mul[x][y] = get(x, y);
        }
      out_.add(t);
      return;
    }
    auto [i, j] = cells_[k];
    for (Element v = 0; v + 1 < n_; ++v) {
      if (!lat_.leq(v, i) || !lat_.leq(v, j)) continue;
      set(i, j, v);
      if (consistent()) solve(k + 1);
    }
    set(i, j, kUnset);
  }

  const LatticeTable& lat_;
  std::size_t n_;
  CensusCollector& out_;
  std::vector<std::pair<Element, Element>> cells_;
  std::vector<Element> mul_;
};

inline void naive_census(std::size_t n, CensusCollector& out) {
  const std::size_t m = n - 2;
  std::vector<std::pair<Element, Element>> cells;
  for (Element i = 1; i <= m; ++i)
    for (Element j = i; j <= m; ++j) cells.emplace_back(i, j);
  std::uint64_t per_table = 1;
  for (std::size_t k = 0; k < cells.size(); ++k) per_table *= n;
  RawTables t = blank_tables(n);
  auto fill = [&](std::vector<std::vector<Element>>& tab, std::uint64_t code) {
    for (auto [i, j] : cells) {
      tab[i][j] = tab[j][i] = static_cast<Element>(code % n);
      code /= n;
    }
  };
  for (std::uint64_t a = 0; a < per_table; ++a) {
    fill(t.add, a);
    for (std::uint64_t b = 0; b < per_table; ++b) {
      fill(t.mul, b);
      if (verify_axioms(t).valid) out.add_labeled(t);
    }
  }
}

}  // namespace detail

/// All po-semirings of order n up to isomorphism.
///
/// Fast mode runs a multiplication search over each lattice; naive mode
/// tries every table pair whose 0 and 1 rows are the forced ones and keeps
/// those passing verify_axioms.
inline CensusResult enumerate_posemirings(std::size_t n, EnumerationOptions opts = {}) {
  if (n < 2) throw DomainError("order must be at least 2");
  const bool naive = opts.mode == EnumerationMode::naive;
  const std::size_t cap = naive ? opts.naive_cap : opts.fast_cap;
  if (n > cap)
    throw CapExceeded("order " + std::to_string(n) + " exceeds the " + (naive ? "naive" : "fast") + " cap of " +
                      std::to_string(cap));
  const auto start = std::chrono::steady_clock::now();
  detail::CensusCollector out(n);
  if (naive) {
    detail::naive_census(n, out);
  } else {
    for (const auto& lat : bounded_lattices(n)) detail::MulSearch(lat, out).run();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out.finish(naive, secs);
}

}  // namespace posr
