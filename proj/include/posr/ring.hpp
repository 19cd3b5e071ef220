#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "posr/errors.hpp"
#include "posr/graph.hpp"
#include "posr/lexer.hpp"
#include "posr/table.hpp"

namespace posr {

/// Raw ring tables: zero at index 0, identity at index `one`.
struct RawRing {
  std::vector<std::string> names;
  std::vector<std::vector<Element>> add, mul;
  Element one = 1;
  std::size_t order() const { return names.size(); }
};

struct RingOptions {
  std::size_t max_order = 512;
  std::size_t max_ideals = 64;
};

/// A finite commutative ring with identity, verified on construction.
class FiniteRing {
 public:
  explicit FiniteRing(const RawRing& raw, RingOptions opts = {}) {
    const std::size_t n = raw.order();
    if (n < 2) throw StructuralError("ring order must be at least 2");
    if (n > opts.max_order) throw CapExceeded("ring order " + std::to_string(n) + " exceeds " + std::to_string(opts.max_order));
    if (raw.add.size() != n || raw.mul.size() != n) throw StructuralError("ring tables must have n rows");
    for (std::size_t i = 0; i < n; ++i) {
      if (raw.add[i].size() != n || raw.mul[i].size() != n) throw StructuralError("ring tables must have n columns");
      for (std::size_t j = 0; j < n; ++j)
        if (raw.add[i][j] >= n || raw.mul[i][j] >= n) throw StructuralError("ring table entry out of range");
    }
    if (raw.one >= n) throw StructuralError("identity index out of range");
    n_ = n;
    one_ = raw.one;
    names_ = raw.names;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        add_.push_back(raw.add[i][j]);
        mul_.push_back(raw.mul[i][j]);
      }
    verify();
  }

  std::size_t order() const noexcept { return n_; }
  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return one_; }
  Element add(Element x, Element y) const { return add_[x * n_ + y]; }
  Element mul(Element x, Element y) const { return mul_[x * n_ + y]; }
  Element neg(Element x) const {
    for (Element y = 0; y < n_; ++y)
      if (add(x, y) == 0) return y;
    throw InvalidInstance("element without additive inverse");
  }
  const std::string& name(Element x) const { return names_.at(x); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<Element>& add_table() const noexcept { return add_; }
  const std::vector<Element>& mul_table() const noexcept { return mul_; }

  RawRing raw() const {
    RawRing r;
    r.names = names_;
    r.one = one_;
    r.add.assign(n_, std::vector<Element>(n_));
    r.mul.assign(n_, std::vector<Element>(n_));
    for (Element x = 0; x < n_; ++x)
      for (Element y = 0; y < n_; ++y) {
        r.add[x][y] = add(x, y);
        r.mul[x][y] = mul(x, y);
      }
    return r;
  }

 private:
  void fail(const std::string& axiom, std::initializer_list<Element> w) const {
    std::string msg = "ring axiom '" + axiom + "' fails at (";
    bool first = true;
    for (Element x : w) {
      msg += (first ? "" : ",") + names_[x];
      first = false;
    }
    throw InvalidInstance(msg + ")");
  }

  void verify() const {
    for (Element x = 0; x < n_; ++x) {
      if (add(0, x) != x) fail("add-identity", {x});
      if (mul(one_, x) != x) fail("mul-identity", {x});
      bool inverse = false;
      for (Element y = 0; y < n_; ++y) {
        if (add(x, y) != add(y, x)) fail("add-commutative", {x, y});
        if (mul(x, y) != mul(y, x)) fail("mul-commutative", {x, y});
        inverse = inverse || add(x, y) == 0;
      }
      if (!inverse) fail("add-inverse", {x});
    }
    for (Element x = 0; x < n_; ++x)
      for (Element y = 0; y < n_; ++y) {
        const Element xy_s = add(x, y), xy_p = mul(x, y);
        for (Element z = 0; z < n_; ++z) {
          if (add(xy_s, z) != add(x, add(y, z))) fail("add-associative", {x, y, z});
          if (mul(xy_p, z) != mul(x, mul(y, z))) fail("mul-associative", {x, y, z});
          if (mul(x, add(y, z)) != add(xy_p, mul(x, z))) fail("distributive", {x, y, z});
        }
      }
    names_ok();
  }

  void names_ok() const {
    std::set<std::string> seen;
    for (const auto& s : names_) {
      if (s.empty()) throw StructuralError("empty element label");
      for (unsigned char ch : s)
        if (std::isspace(ch)) throw StructuralError("label '" + s + "' contains whitespace");
      if (!seen.insert(s).second) throw StructuralError("duplicate label '" + s + "'");
    }
  }

  std::size_t n_ = 0;
  Element one_ = 1;
  std::vector<std::string> names_;
  std::vector<Element> add_, mul_;
};

// ---------------------------------------------------------------------------
// Ring builders

inline bool is_prime_number(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// Integers modulo n.
inline FiniteRing zn_ring(unsigned n, RingOptions opts = {}) {
  if (n < 2) throw DomainError("zn needs N >= 2");
  if (n > opts.max_order) throw CapExceeded("zn:" + std::to_string(n) + " exceeds the ring order cap");
  RawRing r;
  r.one = 1;
  r.add.assign(n, std::vector<Element>(n));
  r.mul.assign(n, std::vector<Element>(n));
  for (Element x = 0; x < n; ++x) {
    r.names.push_back(std::to_string(x));
    for (Element y = 0; y < n; ++y) {
      r.add[x][y] = (x + y) % n;
      r.mul[x][y] = static_cast<Element>((static_cast<unsigned long>(x) * y) % n);
    }
  }
  return FiniteRing(r, opts);
}

/// Z_p[x]/(x^2 + c1 x + c0); a + b x sits at index a + p b.
inline FiniteRing zpx_ring(unsigned p, unsigned c1, unsigned c0, RingOptions opts = {}) {
  if (!is_prime_number(p)) throw DomainError("zpx needs a prime p, got " + std::to_string(p));
  if (p > 13) throw DomainError("zpx supports p <= 13");
  if (c1 >= p || c0 >= p) throw DomainError("zpx coefficients must lie in [0, p)");
  const unsigned n = p * p;
  auto label = [p](unsigned a, unsigned b) {
    if (b == 0) return std::to_string(a);
    std::string xb = b == 1 ? "x" : std::to_string(b) + "x";
    return a == 0 ? xb : std::to_string(a) + "+" + xb;
  };
  RawRing r;
  r.one = 1;
  r.add.assign(n, std::vector<Element>(n));
  r.mul.assign(n, std::vector<Element>(n));
  for (unsigned i = 0; i < n; ++i) {
    const unsigned a = i % p, b = i / p;
    r.names.push_back(label(a, b));
    for (unsigned j = 0; j < n; ++j) {
      const unsigned c = j % p, d = j / p;
      r.add[i][j] = (a + c) % p + p * ((b + d) % p);
      // x^2 = -c1 x - c0
      const unsigned bd = b * d % p;
      const unsigned k0 = (a * c + p * p - bd * c0 % p) % p;
      const unsigned k1 = (a * d + b * c + p * p - bd * c1 % p) % p;
      r.mul[i][j] = k0 + p * k1;
    }
  }
  return FiniteRing(r, opts);
}

inline FiniteRing ring_product(const FiniteRing& a, const FiniteRing& b, RingOptions opts = {}) {
  const std::size_t na = a.order(), nb = b.order();
  if (na * nb > opts.max_order) throw CapExceeded("ring product exceeds the ring order cap");
  const auto n = static_cast<Element>(na * nb);
  RawRing r;
  r.one = static_cast<Element>(a.one() * nb + b.one());
  r.add.assign(n, std::vector<Element>(n));
  r.mul.assign(n, std::vector<Element>(n));
  for (Element i = 0; i < na; ++i)
    for (Element j = 0; j < nb; ++j) r.names.push_back("(" + a.name(i) + "," + b.name(j) + ")");
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const Element xi = x / nb, xj = x % nb, yi = y / nb, yj = y % nb;
      r.add[x][y] = static_cast<Element>(a.add(xi, yi) * nb + b.add(xj, yj));
      r.mul[x][y] = static_cast<Element>(a.mul(xi, yi) * nb + b.mul(xj, yj));
    }
  return FiniteRing(r, opts);
}

/// Parses the `ring 1` text format; `source` names the input in errors.
inline FiniteRing parse_ring(std::string_view text, const std::string& source = "<input>", RingOptions opts = {}) {
  detail::LineReader in(source, text);
  const auto& magic = in.keyword("ring", 1);
  if (magic.tokens[1] != "1") in.fail(magic.number, "unsupported ring format version " + magic.tokens[1]);
  const auto& ord = in.keyword("order", 1);
  const unsigned n = in.number(ord, ord.tokens[1]);
  if (n < 2 || n > opts.max_order) in.fail(ord.number, "order must lie in [2, " + std::to_string(opts.max_order) + "]");
  const auto& one = in.keyword("one", 1);
  RawRing raw;
  raw.one = in.number(one, one.tokens[1]);
  if (raw.one >= n) in.fail(one.number, "identity index out of range");
  const auto& names = in.keyword("names", n);
  raw.names.assign(names.tokens.begin() + 1, names.tokens.end());
  in.keyword("add", 0);
  raw.add = in.matrix(n, n, n, "add");
  in.keyword("mul", 0);
  raw.mul = in.matrix(n, n, n, "mul");
  in.finish();
  try {
    return FiniteRing(raw, opts);
  } catch (const Error& e) {
    in.fail(names.number, e.what());
  }
}

inline FiniteRing read_ring_file(const std::string& path, RingOptions opts = {}) {
  return parse_ring(detail::slurp(path), path, opts);
}

inline std::string format_ring(const FiniteRing& r) {
  const RawRing raw = r.raw();
  std::string out = "ring 1\norder " + std::to_string(r.order()) + "\none " + std::to_string(r.one()) + "\nnames";
  for (const auto& s : r.names()) out += " " + s;
  out += "\nadd\n" + detail::format_rows(raw.add) + "mul\n" + detail::format_rows(raw.mul);
  return out;
}

namespace detail {

class RingSpecParser {
 public:
  RingSpecParser(std::string_view s, RingOptions opts) : s_(s), opts_(opts) {}

  FiniteRing parse_all() {
    FiniteRing r = parse();
    if (pos_ != s_.size()) fail("trailing characters");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("ring spec '" + std::string(s_) + "' at offset " + std::to_string(pos_) + ": " + what);
  }
  bool starts(std::string_view w) const { return s_.substr(pos_, w.size()) == w; }
  void expect(char ch) {
    if (pos_ >= s_.size() || s_[pos_] != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }
  unsigned number() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    if (pos_ - start > 6) fail("number too large");
    return static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
  }

  FiniteRing parse() {
    if (starts("zn:")) {
      pos_ += 3;
      return zn_ring(number(), opts_);
    }
    if (starts("zpx:")) {
      pos_ += 4;
      const unsigned p = number();
      expect(':');
      const unsigned c1 = number();
      expect(':');
      const unsigned c0 = number();
      return zpx_ring(p, c1, c0, opts_);
    }
    if (starts("prod(")) {
      pos_ += 5;
      FiniteRing a = parse();
      expect(',');
      FiniteRing b = parse();
      expect(')');
      return ring_product(a, b, opts_);
    }
    if (starts("file:")) {
      std::string path(s_.substr(pos_ + 5));
      pos_ = s_.size();
      return read_ring_file(path, opts_);
    }
    fail("unknown ring constructor");
  }

  std::string_view s_;
  RingOptions opts_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `zn:N`, `zpx:p:c1:c0`, `prod(<spec>,<spec>)` or `file:<path>`.
inline FiniteRing make_ring(std::string_view spec, RingOptions opts = {}) {
  return detail::RingSpecParser(spec, opts).parse_all();
}

// ---------------------------------------------------------------------------
// Ideals

struct Ideal {
  /// Sorted element indices.
  std::vector<Element> members;
  /// A generating set found greedily in index order.
  std::vector<Element> generators;

  std::size_t size() const { return members.size(); }
  bool contains(Element x) const { return std::binary_search(members.begin(), members.end(), x); }
  bool is_subset_of(const Ideal& o) const {
    return std::includes(o.members.begin(), o.members.end(), members.begin(), members.end());
  }
  friend bool operator==(const Ideal& a, const Ideal& b) { return a.members == b.members; }
  friend bool operator<(const Ideal& a, const Ideal& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members < b.members;
  }
};

namespace detail {

inline std::vector<Element> sorted_members(const std::vector<char>& in) {
  std::vector<Element> out;
  for (Element x = 0; x < in.size(); ++x)
    if (in[x]) out.push_back(x);
  return out;
}

inline std::vector<char> mask_of(const FiniteRing& r, const std::vector<Element>& members) {
  std::vector<char> m(r.order(), 0);
  for (Element x : members) m[x] = 1;
  return m;
}

/// Additive closure of a set containing 0.
inline std::vector<Element> additive_closure(const FiniteRing& r, std::vector<char> in) {
  in[0] = 1;
  std::vector<Element> frontier = sorted_members(in);
  std::vector<Element> all = frontier;
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (Element x : frontier)
      for (Element y : std::vector<Element>(all)) {
        const Element s = r.add(x, y);
        if (!in[s]) {
          in[s] = 1;
          next.push_back(s);
          all.push_back(s);
        }
      }
    frontier = std::move(next);
  }
  return sorted_members(in);
}

inline std::vector<Element> principal_members(const FiniteRing& r, Element a) {
  std::vector<char> in(r.order(), 0);
  for (Element x = 0; x < r.order(); ++x) in[r.mul(x, a)] = 1;
  return sorted_members(in);
}

inline std::vector<Element> sum_members(const FiniteRing& r, const std::vector<Element>& i, const std::vector<Element>& j) {
  std::vector<char> in(r.order(), 0);
  for (Element x : i)
    for (Element y : j) in[r.add(x, y)] = 1;
  return sorted_members(in);
}

inline std::vector<Element> greedy_generators(const FiniteRing& r, const std::vector<Element>& members) {
  std::vector<Element> gens;
  std::vector<Element> span{0};
  for (Element x : members) {
    if (std::binary_search(span.begin(), span.end(), x)) continue;
    gens.push_back(x);
    span = sum_members(r, span, principal_members(r, x));
  }
  return gens;
}

}  // namespace detail

inline Ideal make_ideal(const FiniteRing& r, std::vector<Element> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Ideal out{members, detail::greedy_generators(r, members)};
  return out;
}

inline Ideal principal_ideal(const FiniteRing& r, Element a) { return make_ideal(r, detail::principal_members(r, a)); }

inline Ideal ideal_sum(const FiniteRing& r, const Ideal& i, const Ideal& j) {
  return make_ideal(r, detail::sum_members(r, i.members, j.members));
}

/// Additive closure of all pairwise products.
inline Ideal ideal_product(const FiniteRing& r, const Ideal& i, const Ideal& j) {
  std::vector<char> in(r.order(), 0);
  for (Element x : i.members)
    for (Element y : j.members) in[r.mul(x, y)] = 1;
  return make_ideal(r, detail::additive_closure(r, std::move(in)));
}

/// "(g1,g2)" from the greedy generators; "(0)" for the zero ideal.
inline std::string ideal_name(const FiniteRing& r, const Ideal& i) {
  if (i.generators.empty()) return "(" + r.name(0) + ")";
  std::string out = "(";
  for (std::size_t k = 0; k < i.generators.size(); ++k) out += (k ? "," : "") + r.name(i.generators[k]);
  return out + ")";
}

/// Every ideal, sorted by (size, members).
inline std::vector<Ideal> enumerate_ring_ideals(const FiniteRing& r) {
  std::set<std::vector<Element>> seen;
  std::vector<std::vector<Element>> family;
  for (Element a = 0; a < r.order(); ++a) {
    auto m = detail::principal_members(r, a);
    if (seen.insert(m).second) family.push_back(std::move(m));
  }
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      auto m = detail::sum_members(r, family[i], family[j]);
      if (seen.insert(m).second) family.push_back(std::move(m));
    }
  std::vector<Ideal> out;
  for (auto& m : family) out.push_back(make_ideal(r, std::move(m)));
  std::sort(out.begin(), out.end());
  return out;
}

struct IdealSemiring {
  PoSemiringTable table;
  /// Element index -> ideal.
  std::vector<Ideal> ideals;
};

/// The po-semiring I(R) of ideals under sum and product.
inline IdealSemiring ideal_semiring(const FiniteRing& r, RingOptions opts = {}) {
  std::vector<Ideal> ideals = enumerate_ring_ideals(r);
  if (ideals.size() > opts.max_ideals)
    throw CapExceeded("ring has " + std::to_string(ideals.size()) + " ideals, above the cap of " +
                      std::to_string(opts.max_ideals));
  std::map<std::vector<Element>, Element> index;
  for (Element i = 0; i < ideals.size(); ++i) index.emplace(ideals[i].members, i);
  const auto n = static_cast<Element>(ideals.size());
  RawTables t;
  t.add.assign(n, std::vector<Element>(n));
  t.mul.assign(n, std::vector<Element>(n));
  for (Element i = 0; i < n; ++i) {
    t.names.push_back(ideal_name(r, ideals[i]));
    for (Element j = 0; j < n; ++j) {
      t.add[i][j] = index.at(ideal_sum(r, ideals[i], ideals[j]).members);
      t.mul[i][j] = index.at(ideal_product(r, ideals[i], ideals[j]).members);
    }
  }
  return IdealSemiring{PoSemiringTable(t), std::move(ideals)};
}

struct GraphResult {
  ZdGraph graph;
  GraphShape shape;
};

struct AnnihilatingIdealGraph {
  IdealSemiring semiring;
  ZdGraph graph;
  GraphShape shape;
};

/// AG(R): the zero-divisor graph of I(R).
inline AnnihilatingIdealGraph annihilating_ideal_graph(const FiniteRing& r, RingOptions opts = {}) {
  IdealSemiring s = ideal_semiring(r, opts);
  ZdGraph g = zero_divisor_graph(s.table);
  GraphShape sh = classify_shape(g);
  return {std::move(s), std::move(g), std::move(sh)};
}

/// Zero-divisor graph of the multiplicative semigroup of R.
inline GraphResult ring_zdgraph(const FiniteRing& r) {
  ZdGraph g = build_zdgraph(r.mul_table(), r.order(), {}, SourceKind::ring);
  GraphShape sh = classify_shape(g);
  return {std::move(g), std::move(sh)};
}

struct Radicals {
  Ideal nilradical;
  Ideal jacobson;
  std::vector<Element> idempotents;
};

inline bool is_ring_nilpotent(const FiniteRing& r, Element x) {
  Element p = x;
  for (std::size_t k = 0; k <= r.order(); ++k) {
    if (p == 0) return true;
    p = r.mul(p, x);
  }
  return false;
}

/// Maximal proper ideals, from the inclusion order on all ideals.
inline std::vector<Ideal> maximal_ideals(const std::vector<Ideal>& ideals, std::size_t ring_order) {
  std::vector<Ideal> out;
  for (const auto& i : ideals) {
    if (i.size() == ring_order) continue;
    bool maximal = true;
    for (const auto& j : ideals)
      if (j.size() != ring_order && j.size() > i.size() && i.is_subset_of(j)) maximal = false;
    if (maximal) out.push_back(i);
  }
  return out;
}

inline Radicals radicals(const FiniteRing& r) {
  std::vector<Element> nil, idem;
  for (Element x = 0; x < r.order(); ++x) {
    if (is_ring_nilpotent(r, x)) nil.push_back(x);
    if (r.mul(x, x) == x) idem.push_back(x);
  }
  const auto ideals = enumerate_ring_ideals(r);
  std::vector<char> in(r.order(), 1);
  for (const auto& m : maximal_ideals(ideals, r.order()))
    for (Element x = 0; x < r.order(); ++x)
      if (!m.contains(x)) in[x] = 0;
  return Radicals{make_ideal(r, nil), make_ideal(r, detail::sorted_members(in)), idem};
}

// ---------------------------------------------------------------------------
// Structure tests used for the K2 characterization

inline bool is_local_ring(const FiniteRing& r) {
  return maximal_ideals(enumerate_ring_ideals(r), r.order()).size() == 1;
}

inline std::size_t nontrivial_ideal_count(const FiniteRing& r) {
  return enumerate_ring_ideals(r).size() - 2;
}

/// Nontrivial idempotent e with Re and R(1-e) both fields, if any.
inline std::optional<Element> two_field_splitting(const FiniteRing& r) {
  const auto ideals = enumerate_ring_ideals(r);
  auto only_trivial_below = [&](const Ideal& top) {
    std::size_t below = 0;
    for (const auto& i : ideals)
      if (i.is_subset_of(top)) ++below;
    return below == 2;
  };
  for (Element e = 1; e < r.order(); ++e) {
    if (e == r.one() || r.mul(e, e) != e) continue;
    const Element f = r.add(r.one(), r.neg(e));
    if (only_trivial_below(principal_ideal(r, e)) && only_trivial_below(principal_ideal(r, f))) return e;
  }
  return std::nullopt;
}

/// Local ring whose maximal ideal is R alpha with alpha^3 = 0 != alpha^2.
inline std::optional<Element> cube_radical_generator(const FiniteRing& r) {
  const auto ms = maximal_ideals(enumerate_ring_ideals(r), r.order());
  if (ms.size() != 1) return std::nullopt;
  for (Element a : ms.front().members) {
    const Element a2 = r.mul(a, a);
    if (a2 == 0 || r.mul(a2, a) != 0) continue;
    if (principal_ideal(r, a) == ms.front()) return a;
  }
  return std::nullopt;
}

struct K2Characterization {
  bool two_fields = false;
  bool local = false;
  std::size_t nontrivial_ideals = 0;
  std::optional<Element> alpha;
  bool ag_complete_two = false;

  bool statement1() const { return two_fields || (local && nontrivial_ideals == 2); }
  bool statement2() const { return ag_complete_two; }
  bool statement3() const { return two_fields || (local && alpha.has_value()); }
};

inline K2Characterization characterize_k2(const FiniteRing& r, RingOptions opts = {}) {
  K2Characterization out;
  out.two_fields = two_field_splitting(r).has_value();
  out.local = is_local_ring(r);
  out.nontrivial_ideals = nontrivial_ideal_count(r);
  out.alpha = cube_radical_generator(r);
  const auto ag = annihilating_ideal_graph(r, opts);
  out.ag_complete_two = ag.shape.is<shape::Complete>() && ag.shape.as<shape::Complete>().n == 2;
  return out;
}

struct NamedRing {
  std::string spec;
  FiniteRing ring;
};

/// Z_n for 2 <= n <= 64, every Z_p[x]/(x^2 + c1 x + c0) for p in {2,3,5},
/// and the product of every unordered pair of those rings of order <= 8.
inline std::vector<NamedRing> default_ring_corpus() {
  std::vector<NamedRing> out;
  std::vector<std::string> small;
  for (unsigned n = 2; n <= 64; ++n) {
    std::string s = "zn:" + std::to_string(n);
    out.push_back({s, zn_ring(n)});
    if (n <= 8) small.push_back(s);
  }
  for (unsigned p : {2u, 3u, 5u})
    for (unsigned c1 = 0; c1 < p; ++c1)
      for (unsigned c0 = 0; c0 < p; ++c0) {
        std::string s = "zpx:" + std::to_string(p) + ":" + std::to_string(c1) + ":" + std::to_string(c0);
        out.push_back({s, zpx_ring(p, c1, c0)});
        if (p * p <= 8) small.push_back(s);
      }
  for (std::size_t i = 0; i < small.size(); ++i)
    for (std::size_t j = i; j < small.size(); ++j) {
      std::string s = "prod(" + small[i] + "," + small[j] + ")";
      out.push_back({s, make_ring(s)});
    }
  return out;
}

}  // namespace posr
