#pragma once

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "posr/analysis.hpp"
#include "posr/errors.hpp"
#include "posr/graph.hpp"
#include "posr/isomorphism.hpp"
#include "posr/table.hpp"

namespace posr {

/// Value of u^2 in the constructions where u is the larger of two zero
/// divisors.
enum class USquare { zero, c, u };

inline std::string to_string(USquare s) {
  switch (s) {
    case USquare::zero:
      return "0";
    case USquare::c:
      return "c";
    case USquare::u:
      return "u";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Table builders

namespace detail {

/// Tables over a chain whose order is the index order (addition = max).
inline PoSemiringTable chain_instance(std::vector<std::string> names,
                                      const std::function<Element(Element, Element)>& mul) {
  const auto n = static_cast<Element>(names.size());
  RawTables t;
  t.names = std::move(names);
  t.add.assign(n, std::vector<Element>(n));
  t.mul.assign(n, std::vector<Element>(n));
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      t.add[x][y] = std::max(x, y);
      t.mul[x][y] = (x == 0 || y == 0) ? 0 : x == n - 1 ? y : y == n - 1 ? x : mul(x, y);
    }
  return PoSemiringTable(t);
}

inline std::vector<std::string> b_names(unsigned k) {
  std::vector<std::string> out;
  for (unsigned i = 1; i <= k; ++i) out.push_back("b" + std::to_string(i));
  return out;
}

/// `base` with primes appended until it is not among `taken`.
inline std::string fresh_name(std::string base, const std::vector<std::string>& taken) {
  while (std::find(taken.begin(), taken.end(), base) != taken.end()) base += "'";
  return base;
}

inline std::string product_label(const std::string& a, const std::string& b) {
  auto wrap = [](const std::string& s) {
    return s.find("×") == std::string::npos ? s : "(" + s + ")";
  };
  return wrap(a) + "×" + wrap(b);
}

inline void require_k(unsigned k, unsigned min, const char* what) {
  if (k < min) throw DomainError(std::string(what) + " needs k >= " + std::to_string(min));
  if (k > kMaxOrder - 4) throw CapExceeded(std::string(what) + ": k too large");
}

}  // namespace detail

/// The two-element po-semiring {0,1}.
inline PoSemiringTable trivial_posemiring() {
  return detail::chain_instance({"0", "1"}, [](Element, Element) { return Element{0}; });
}

/// Integral chain 0 < b1 < ... < bk < 1 with min as multiplication.
inline PoSemiringTable chain_lattice(unsigned k) {
  detail::require_k(k, 1, "chain");
  auto names = detail::b_names(k);
  names.insert(names.begin(), "0");
  names.push_back("1");
  return detail::chain_instance(names, [](Element x, Element y) { return std::min(x, y); });
}

/// 0 < a < b1 < ... < bk < 1, max addition, a^2 = 0, a bi = 0, bi bj = b_min(i,j).
inline PoSemiringTable example_2_6(unsigned k) {
  detail::require_k(k, 1, "example-2.6");
  auto names = detail::b_names(k);
  names.insert(names.begin(), {"0", "a"});
  names.push_back("1");
  return detail::chain_instance(names, [](Element x, Element y) { return (x == 1 || y == 1) ? 0 : std::min(x, y); });
}

/// Same chain, a^2 = 0 and min for every other pair of nonzero elements.
inline PoSemiringTable example_3_2(unsigned k) {
  detail::require_k(k, 1, "example-3.2");
  auto names = detail::b_names(k);
  names.insert(names.begin(), {"0", "a"});
  names.push_back("1");
  return detail::chain_instance(names, [](Element x, Element y) { return (x == 1 && y == 1) ? 0 : std::min(x, y); });
}

/// 0 < c < u < b1 < ... < bk < 1, max addition, c^2 = cu = 0, u^2 as given,
/// min otherwise.
inline PoSemiringTable example_4_6(unsigned k, USquare u_square) {
  detail::require_k(k, 1, "example-4.6");
  auto names = detail::b_names(k);
  names.insert(names.begin(), {"0", "c", "u"});
  names.push_back("1");
  const Element c = 1, u = 2;
  return detail::chain_instance(names, [=](Element x, Element y) -> Element {
    if (x == c && (y == c || y == u)) return 0;
    if (y == c && x == u) return 0;
    if (x == u && y == u) return u_square == USquare::zero ? 0 : u_square == USquare::c ? c : u;
    return std::min(x, y);
  });
}

/// A1 = chain 0 < b1 < ... < bk < 1 with bi bj = b1, extended by c < u < b_n;
/// u + bi = b_n for i < n, u bi = c, Z^2 = 0.
inline PoSemiringTable example_4_7(unsigned k, unsigned n) {
  detail::require_k(k, 2, "example-4.7");
  if (n < 2) throw DomainError("example-4.7 needs n > 1");
  if (n > k) throw DomainError("example-4.7 needs n <= k so that b_n exists");
  const auto size = static_cast<Element>(k + 4);
  const Element zero = 0, c = 1, u = 2, one = size - 1;
  auto b = [](unsigned i) { return static_cast<Element>(i + 2); };  // index of b_i
  RawTables t;
  t.names = {"0", "c", "u"};
  for (auto& s : detail::b_names(k)) t.names.push_back(s);
  t.names.push_back("1");
  t.add.assign(size, std::vector<Element>(size));
  t.mul.assign(size, std::vector<Element>(size));
  for (Element x = 0; x < size; ++x)
    for (Element y = 0; y < size; ++y) {
      Element s;
      if (x == zero) s = y;
      else if (y == zero) s = x;
      else if (x == one || y == one) s = one;
      else if (x == c) s = y;
      else if (y == c) s = x;
      else if (x == u && y == u) s = u;
      else if (x == u || y == u) {
        const Element other = x == u ? y : x;
        s = other < b(n) ? b(n) : other;
      } else s = std::max(x, y);
      t.add[x][y] = s;

      Element p;
      if (x == zero || y == zero) p = zero;
      else if (x == one) p = y;
      else if (y == one) p = x;
      else if ((x == c || x == u) && (y == c || y == u)) p = zero;
      else if (x == c || y == c || x == u || y == u) p = c;
      else p = b(1);
      t.mul[x][y] = p;
    }
  return PoSemiringTable(t);
}

inline PoSemiringTable direct_product(const PoSemiringTable& a, const PoSemiringTable& b) {
  const std::size_t na = a.order(), nb = b.order();
  if (na * nb > kMaxOrder) throw CapExceeded("direct product would exceed order 64");
  const auto n = static_cast<Element>(na * nb);
  RawTables t;
  t.add.assign(n, std::vector<Element>(n));
  t.mul.assign(n, std::vector<Element>(n));
  auto idx = [nb](Element i, Element j) { return static_cast<Element>(i * nb + j); };
  for (Element i = 0; i < na; ++i)
    for (Element j = 0; j < nb; ++j) t.names.push_back(detail::product_label(a.name(i), b.name(j)));
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const Element xi = x / nb, xj = x % nb, yi = y / nb, yj = y % nb;
      t.add[x][y] = idx(a.add(xi, yi), b.add(xj, yj));
      t.mul[x][y] = idx(a.mul(xi, yi), b.mul(xj, yj));
    }
  return PoSemiringTable(t);
}

struct BooleanPowerOptions {
  unsigned cap = 6;
};

/// {0,1}^(n), built as ((({0,1} x {0,1}) x {0,1}) ...).
inline PoSemiringTable boolean_power(unsigned n, BooleanPowerOptions opts = {}) {
  if (n < 1) throw DomainError("boolean power needs n >= 1");
  if (n > opts.cap) throw CapExceeded("boolean power " + std::to_string(n) + " exceeds cap " + std::to_string(opts.cap));
  PoSemiringTable out = trivial_posemiring();
  for (unsigned i = 1; i < n; ++i) out = direct_product(out, trivial_posemiring());
  if (n == 1) return out;
  // Tuple labels, first coordinate most significant.
  std::vector<std::string> names;
  for (std::size_t x = 0; x < out.order(); ++x) {
    std::string label = "(";
    for (unsigned bit = n; bit-- > 0;) label += std::string((x >> bit) & 1U ? "1" : "0") + (bit ? "," : ")");
    names.push_back(label);
  }
  return out.renamed(std::move(names));
}

// ---------------------------------------------------------------------------
// Extensions of integral po-semirings by one or two zero divisors

namespace detail {

/// Raw tables of `base` shifted up by `extra` slots inserted after 0.
inline RawTables widened(const PoSemiringTable& base, const std::vector<std::string>& extra_names) {
  const auto extra = static_cast<Element>(extra_names.size());
  const auto n = static_cast<Element>(base.order() + extra);
  auto lift = [extra](Element x) { return x == 0 ? Element{0} : x + extra; };
  RawTables t;
  t.names.push_back(base.name(0));
  for (const auto& s : extra_names) t.names.push_back(s);
  for (Element x = 1; x < base.order(); ++x) t.names.push_back(base.name(x));
  t.add.assign(n, std::vector<Element>(n, 0));
  t.mul.assign(n, std::vector<Element>(n, 0));
  for (Element x = 0; x < base.order(); ++x)
    for (Element y = 0; y < base.order(); ++y) {
      t.add[lift(x)][lift(y)] = lift(base.add(x, y));
      t.mul[lift(x)][lift(y)] = lift(base.mul(x, y));
    }
  return t;
}

inline void require_integral(const PoSemiringTable& a, const char* what) {
  if (!zero_divisors(a).empty()) throw DomainError(std::string(what) + " needs an integral po-semiring");
}

}  // namespace detail

/// A1 plus a new element c with 0 < c < A1*, c^2 = 0 and cy = c for y in A1*.
inline PoSemiringTable adjoin_z1(const PoSemiringTable& a1) {
  detail::require_integral(a1, "adjoin-z1");
  if (a1.order() + 1 > kMaxOrder) throw CapExceeded("adjoin-z1 would exceed order 64");
  const std::string c_name = detail::fresh_name("c", a1.names());
  RawTables t = detail::widened(a1, {c_name});
  const auto n = static_cast<Element>(t.order());
  const Element c = 1;
  for (Element y = 0; y < n; ++y) {
    const Element sum = (y == 0 || y == c) ? c : y;
    const Element prod = (y == 0 || y == c) ? 0 : c;
    t.add[c][y] = t.add[y][c] = sum;
    t.mul[c][y] = t.mul[y][c] = prod;
  }
  return PoSemiringTable(t);
}

/// A1 with least nonzero a0, plus incomparable idempotents c, u with
/// c + u = a0, cu = 0, and xy = x for x in {c,u}, y in A1*.
inline PoSemiringTable adjoin_z2_incomparable(const PoSemiringTable& a1) {
  detail::require_integral(a1, "adjoin-z2-incomparable");
  auto a0 = least_nonzero(a1);
  if (!a0) throw DomainError("adjoin-z2-incomparable needs a least nonzero element");
  if (a1.order() + 2 > kMaxOrder) throw CapExceeded("adjoin-z2-incomparable would exceed order 64");
  const std::string c_name = detail::fresh_name("c", a1.names());
  const std::string u_name = detail::fresh_name("u", a1.names());
  RawTables t = detail::widened(a1, {c_name, u_name});
  const auto n = static_cast<Element>(t.order());
  const Element c = 1, u = 2, a0_lifted = *a0 + 2;
  for (Element x : {c, u})
    for (Element y = 0; y < n; ++y) {
      Element sum, prod;
      if (y == 0) sum = x, prod = 0;
      else if (y == x) sum = x, prod = x;
      else if (y == c || y == u) sum = a0_lifted, prod = 0;
      else sum = y, prod = x;
      t.add[x][y] = t.add[y][x] = sum;
      t.mul[x][y] = t.mul[y][x] = prod;
    }
  return PoSemiringTable(t);
}

/// A1 plus a chain 0 < c < u < A1*, c^2 = cu = 0, u^2 in {c, u}, xy = x for
/// x in {c,u}, y in A1*.
inline PoSemiringTable adjoin_z2_chain(const PoSemiringTable& a1, USquare u_square) {
  detail::require_integral(a1, "adjoin-z2-chain");
  if (u_square == USquare::zero) throw DomainError("adjoin-z2-chain needs u^2 in {c, u}");
  if (a1.order() + 2 > kMaxOrder) throw CapExceeded("adjoin-z2-chain would exceed order 64");
  const std::string c_name = detail::fresh_name("c", a1.names());
  const std::string u_name = detail::fresh_name("u", a1.names());
  RawTables t = detail::widened(a1, {c_name, u_name});
  const auto n = static_cast<Element>(t.order());
  const Element c = 1, u = 2;
  for (Element x : {c, u})
    for (Element y = 0; y < n; ++y) {
      Element sum, prod;
      if (y == 0) sum = x, prod = 0;
      else if (y == c || y == u) {
        sum = std::max(x, y);
        prod = (x == u && y == u) ? (u_square == USquare::c ? c : u) : 0;
      } else sum = y, prod = x;
      t.add[x][y] = t.add[y][x] = sum;
      t.mul[x][y] = t.mul[y][x] = prod;
    }
  return PoSemiringTable(t);
}

// ---------------------------------------------------------------------------
// Construction specs

enum class ConstructionKind {
  trivial,
  chain_lattice,
  example_2_6,
  example_3_2,
  example_4_6,
  example_4_7,
  adjoin_z1,
  adjoin_z2_incomparable,
  adjoin_z2_chain,
  product,
  boolean_power,
};

struct ConstructionSpec {
  ConstructionKind kind = ConstructionKind::trivial;
  unsigned k = 1;
  unsigned n = 2;
  USquare u_square = USquare::u;
  std::vector<ConstructionSpec> bases;
};

inline PoSemiringTable construct(const ConstructionSpec& spec) {
  auto need_bases = [&](std::size_t count) {
    if (spec.bases.size() != count)
      throw DomainError("construction expects " + std::to_string(count) + " base instance(s)");
  };
  switch (spec.kind) {
    case ConstructionKind::trivial:
      return trivial_posemiring();
    case ConstructionKind::chain_lattice:
      return chain_lattice(spec.k);
    case ConstructionKind::example_2_6:
      return example_2_6(spec.k);
    case ConstructionKind::example_3_2:
      return example_3_2(spec.k);
    case ConstructionKind::example_4_6:
      return example_4_6(spec.k, spec.u_square);
    case ConstructionKind::example_4_7:
      return example_4_7(spec.k, spec.n);
    case ConstructionKind::adjoin_z1:
      need_bases(1);
      return adjoin_z1(construct(spec.bases[0]));
    case ConstructionKind::adjoin_z2_incomparable:
      need_bases(1);
      return adjoin_z2_incomparable(construct(spec.bases[0]));
    case ConstructionKind::adjoin_z2_chain:
      need_bases(1);
      return adjoin_z2_chain(construct(spec.bases[0]), spec.u_square);
    case ConstructionKind::product:
      need_bases(2);
      return direct_product(construct(spec.bases[0]), construct(spec.bases[1]));
    case ConstructionKind::boolean_power:
      return boolean_power(spec.n);
  }
  throw DomainError("unknown construction kind");
}

namespace detail {

struct KindName {
  ConstructionKind kind;
  const char* name;
};
inline constexpr KindName kKindNames[] = {
    {ConstructionKind::trivial, "trivial"},
    {ConstructionKind::chain_lattice, "chain"},
    {ConstructionKind::example_2_6, "example-2.6"},
    {ConstructionKind::example_3_2, "example-3.2"},
    {ConstructionKind::example_4_6, "example-4.6"},
    {ConstructionKind::example_4_7, "example-4.7"},
    {ConstructionKind::adjoin_z1, "adjoin-z1"},
    {ConstructionKind::adjoin_z2_incomparable, "adjoin-z2-incomparable"},
    {ConstructionKind::adjoin_z2_chain, "adjoin-z2-chain"},
    {ConstructionKind::product, "product"},
    {ConstructionKind::boolean_power, "bool"},
};

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : s_(text) {}

  ConstructionSpec parse_all() {
    ConstructionSpec spec = parse();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing characters");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("construction spec '" + std::string(s_) + "' at offset " + std::to_string(pos_) + ": " + what);
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char ch) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string word() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '-' ||
                                s_[pos_] == '.' || s_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail("expected a name");
    return std::string(s_.substr(start, pos_ - start));
  }
  /// A ',' that starts another key=value pair, not the next product operand.
  bool eat_param_comma() {
    const std::size_t save = pos_;
    if (eat(',')) {
      skip_ws();
      std::size_t p = pos_;
      while (p < s_.size() && std::isalnum(static_cast<unsigned char>(s_[p]))) ++p;
      while (p < s_.size() && std::isspace(static_cast<unsigned char>(s_[p]))) ++p;
      if (p > pos_ && p < s_.size() && s_[p] == '=') return true;
    }
    pos_ = save;
    return false;
  }
  unsigned number(const std::string& key) {
    std::string w = word();
    if (w.empty() || !std::all_of(w.begin(), w.end(), [](unsigned char ch) { return std::isdigit(ch); }))
      fail("parameter " + key + " must be a non-negative integer");
    if (w.size() > 6) fail("parameter " + key + " too large");
    return static_cast<unsigned>(std::stoul(w));
  }

  ConstructionSpec parse() {
    const std::string name = word();
    ConstructionSpec spec;
    bool known = false;
    for (const auto& kn : kKindNames)
      if (name == kn.name) {
        spec.kind = kn.kind;
        known = true;
      }
    if (!known) fail("unknown construction '" + name + "'");
    // Per-kind defaults.
    if (spec.kind == ConstructionKind::example_4_7) spec.k = 2;
    if (spec.kind == ConstructionKind::boolean_power) spec.n = 1;
    if (eat('(')) {
      do {
        spec.bases.push_back(parse());
      } while (eat(','));
      if (!eat(')')) fail("expected ')'");
    }
    if (eat(':')) {
      do {
        const std::string key = word();
        if (!eat('=')) fail("expected '=' after " + key);
        if (key == "k") {
          spec.k = number(key);
        } else if (key == "n") {
          spec.n = number(key);
        } else if (key == "u2") {
          const std::string v = word();
          if (v == "0" || v == "zero") spec.u_square = USquare::zero;
          else if (v == "c") spec.u_square = USquare::c;
          else if (v == "u") spec.u_square = USquare::u;
          else fail("u2 must be one of 0, c, u");
        } else {
          fail("unknown parameter '" + key + "'");
        }
      } while (eat_param_comma());
    }
    return spec;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses e.g. "example-2.6:k=2", "example-4.6:k=1,u2=u", "bool:n=3",
/// "adjoin-z1(chain:k=2)", "product(trivial,example-3.2:k=2)".
inline ConstructionSpec parse_construction(std::string_view text) { return detail::SpecParser(text).parse_all(); }

inline std::string to_string(const ConstructionSpec& spec) {
  std::string out;
  for (const auto& kn : detail::kKindNames)
    if (kn.kind == spec.kind) out = kn.name;
  if (!spec.bases.empty()) {
    out += "(";
    for (std::size_t i = 0; i < spec.bases.size(); ++i) out += (i ? "," : "") + to_string(spec.bases[i]);
    out += ")";
  }
  switch (spec.kind) {
    case ConstructionKind::chain_lattice:
    case ConstructionKind::example_2_6:
    case ConstructionKind::example_3_2:
      out += ":k=" + std::to_string(spec.k);
      break;
    case ConstructionKind::example_4_6:
      out += ":k=" + std::to_string(spec.k) + ",u2=" + to_string(spec.u_square);
      break;
    case ConstructionKind::example_4_7:
      out += ":k=" + std::to_string(spec.k) + ",n=" + std::to_string(spec.n);
      break;
    case ConstructionKind::adjoin_z2_chain:
      out += ":u2=" + to_string(spec.u_square);
      break;
    case ConstructionKind::boolean_power:
      out += ":n=" + std::to_string(spec.n);
      break;
    default:
      break;
  }
  return out;
}

inline PoSemiringTable construct(std::string_view text) { return construct(parse_construction(text)); }

// ---------------------------------------------------------------------------
// Sub-instances and decompositions

struct SubInstance {
  PoSemiringTable table;
  /// New index -> index in the parent.
  std::vector<Element> embedding;
};

/// The subset `members` as a po-semiring in its own right with identity
/// `top`. Throws InvalidInstance if it is not one.
inline SubInstance sub_instance(const PoSemiringTable& a, ElementSet members, Element top) {
  if (!members.contains(a.zero()) || !members.contains(top))
    throw DomainError("sub-instance must contain 0 and its top");
  std::vector<Element> order{a.zero()};
  for (Element x : members)
    if (x != a.zero() && x != top) order.push_back(x);
  order.push_back(top);
  std::vector<Element> back(a.order(), ~Element{0});
  for (Element i = 0; i < order.size(); ++i) back[order[i]] = i;
  RawTables t;
  const auto m = static_cast<Element>(order.size());
  t.add.assign(m, std::vector<Element>(m));
  t.mul.assign(m, std::vector<Element>(m));
  for (Element i = 0; i < m; ++i) {
    t.names.push_back(a.name(order[i]));
    for (Element j = 0; j < m; ++j) {
      const Element s = a.add(order[i], order[j]);
      const Element p = a.mul(order[i], order[j]);
      if (!members.contains(s) || !members.contains(p))
        throw InvalidInstance("subset is not closed under the operations at (" + a.name(order[i]) + "," +
                              a.name(order[j]) + ")");
      t.add[i][j] = back[s];
      t.mul[i][j] = back[p];
    }
  }
  return {PoSemiringTable(t), order};
}

struct Z1Parts {
  PoSemiringTable a1;
};
struct Z2IncomparableParts {
  PoSemiringTable a1;
  /// Least nonzero element of a1 (index in a1), equal to c + u.
  Element a0;
};
struct Z2ChainParts {
  PoSemiringTable a1;
  USquare u_square;
};
struct BooleanPeelParts {
  unsigned n;
  PoSemiringTable a1;
  /// The (idempotent minimal, complement) pair split off at each step,
  /// as labels of the instance being peeled at that step.
  std::vector<std::pair<std::string, std::string>> steps;
};
struct TwoStarSplitParts {
  PoSemiringTable s;
  std::size_t r;
};

struct Decomposition {
  std::variant<Z1Parts, Z2IncomparableParts, Z2ChainParts, BooleanPeelParts, TwoStarSplitParts> parts;
  /// The instance rebuilt from the parts by the matching constructor.
  PoSemiringTable rebuilt;
  /// Isomorphism rebuilt -> original.
  std::vector<Element> isomorphism;

  template <class T>
  bool is() const {
    return std::holds_alternative<T>(parts);
  }
  template <class T>
  const T& as() const {
    return std::get<T>(parts);
  }
};

struct ConditionCheck {
  std::string id;
  bool holds = true;
  std::vector<Element> witness;
};

/// Necessary conditions for |Z| = 2 with Z^2 = 0, evaluated verbatim.
struct ZeroSquarePairReport {
  Element c;
  Element u;
  PoSemiringTable a1;
  std::vector<ConditionCheck> checks;

  bool all_hold() const {
    return std::all_of(checks.begin(), checks.end(), [](const ConditionCheck& ch) { return ch.holds; });
  }
};

namespace detail {

inline Decomposition rebuild(const PoSemiringTable& original, PoSemiringTable rebuilt,
                             decltype(Decomposition::parts) parts) {
  auto iso = find_isomorphism(rebuilt, original);
  if (!iso) throw Counterexample("rebuilt instance is not isomorphic to the original", {});
  return Decomposition{std::move(parts), std::move(rebuilt), std::move(*iso)};
}

inline SubInstance nonzero_divisor_part(const PoSemiringTable& a, ElementSet z) {
  const ElementSet rest = a.all() - z;
  for (Element x : rest)
    for (Element y : rest) {
      if (z.contains(a.add(x, y)) || z.contains(a.mul(x, y)))
        throw Counterexample("A \\ Z(A) is not closed at (" + a.name(x) + "," + a.name(y) + ")", {x, y});
    }
  return sub_instance(a, rest, a.one());
}

inline ZeroSquarePairReport zero_square_report(const PoSemiringTable& a, Element c, Element u, SubInstance a1) {
  ZeroSquarePairReport rep{c, u, a1.table, {}};
  const auto& emb = a1.embedding;
  std::vector<Element> a1_star(emb.begin() + 1, emb.end());
  auto add_check = [&](std::string id, std::optional<std::vector<Element>> witness) {
    rep.checks.push_back({std::move(id), !witness.has_value(), witness.value_or(std::vector<Element>{})});
  };
  const Element zero = a.zero(), one = a.one();
  std::vector<Element> all;
  for (Element x = 0; x < a.order(); ++x) all.push_back(x);

  add_check("A1-integral", [&]() -> std::optional<std::vector<Element>> {
    if (!zero_divisors(a1.table).empty()) return std::vector<Element>{emb[zero_divisors(a1.table).front()]};
    return std::nullopt;
  }());
  // (1)
  add_check("1:zero-identity", [&]() -> std::optional<std::vector<Element>> {
    for (Element x : {c, u})
      if (a.add(zero, x) != x) return std::vector<Element>{x};
    return std::nullopt;
  }());
  add_check("1:c-least", [&]() -> std::optional<std::vector<Element>> {
    for (Element y : all)
      if (y != zero && a.add(c, y) != y) return std::vector<Element>{y};
    return std::nullopt;
  }());
  add_check("1:u-bounded-idempotent", [&]() -> std::optional<std::vector<Element>> {
    if (a.add(u, one) != one || a.add(u, u) != u) return std::vector<Element>{u};
    return std::nullopt;
  }());
  add_check("1:u-associative", [&]() -> std::optional<std::vector<Element>> {
    for (Element x : a1_star)
      for (Element y : a1_star) {
        if (a.add(u, a.add(x, y)) != a.add(a.add(u, x), y)) return std::vector<Element>{x, y};
        if (a.add(u, a.add(u, x)) != a.add(u, x)) return std::vector<Element>{x};
      }
    return std::nullopt;
  }());
  // (3)
  add_check("3:zero-products", [&]() -> std::optional<std::vector<Element>> {
    for (Element x : {c, u}) {
      if (a.mul(zero, x) != zero) return std::vector<Element>{x};
      for (Element y : {c, u})
        if (a.mul(x, y) != zero) return std::vector<Element>{x, y};
    }
    for (Element x : a1_star) {
      if (a.mul(c, x) != c) return std::vector<Element>{c, x};
      if (a.mul(u, x) == zero) return std::vector<Element>{u, x};
    }
    return std::nullopt;
  }());
  // (4)
  add_check("4:fixers-multiplicative", [&]() -> std::optional<std::vector<Element>> {
    for (Element x : emb)
      for (Element y : emb)
        if (a.mul(x, u) == u && a.mul(y, u) == u && a.mul(a.mul(x, y), u) != u) return std::vector<Element>{x, y};
    return std::nullopt;
  }());
  // (5)
  add_check("5:fixers-upward", [&]() -> std::optional<std::vector<Element>> {
    for (Element x : emb)
      for (Element y : emb)
        if (a.leq(y, x) && a.mul(y, u) == u && a.mul(x, u) != u) return std::vector<Element>{x, y};
    return std::nullopt;
  }());
  // (6)
  add_check("6:distributive-over-u", [&]() -> std::optional<std::vector<Element>> {
    for (Element x : emb)
      for (Element y : emb)
        if (a.mul(x, a.add(y, u)) != a.add(a.mul(x, y), a.mul(x, u))) return std::vector<Element>{x, y};
    return std::nullopt;
  }());
  add_check("6:c-sums", [&]() -> std::optional<std::vector<Element>> {
    for (Element y : emb)
      for (Element z : emb)
        if (a.mul(u, y) == c && a.mul(u, z) == c && a.mul(u, a.add(y, z)) != c) return std::vector<Element>{y, z};
    return std::nullopt;
  }());
  return rep;
}

}  // namespace detail

using SmallZRecognition = std::variant<Decomposition, ZeroSquarePairReport>;

/// For |Z(A)| in {1, 2}: splits off A1 = A \ Z(A), identifies which
/// extension of A1 produced A, and rebuilds it. When |Z| = 2 and Z^2 = 0 the
/// necessary conditions are reported instead.
///
/// Throws NotApplicable for other |Z|, Counterexample if A1 is not closed or
/// the rebuild is not isomorphic.
inline SmallZRecognition recognize_small_z(const PoSemiringTable& a) {
  const ElementSet z = zero_divisors(a);
  if (z.size() != 1 && z.size() != 2)
    throw NotApplicable("|Z(A)| = " + std::to_string(z.size()) + " is not 1 or 2");
  SubInstance a1 = detail::nonzero_divisor_part(a, z);
  if (!zero_divisors(a1.table).empty())
    throw Counterexample("A \\ Z(A) is not integral", {a1.embedding[zero_divisors(a1.table).front()]});

  if (z.size() == 1) {
    PoSemiringTable rebuilt = adjoin_z1(a1.table);
    return detail::rebuild(a, rebuilt, Z1Parts{a1.table});
  }
  Element c = z.front();
  Element u = (z - ElementSet{c}).front();
  if (a.less(u, c)) std::swap(c, u);
  bool squares_zero = true;
  for (Element x : z)
    for (Element y : z) squares_zero = squares_zero && a.mul(x, y) == a.zero();
  if (squares_zero) {
    if (!a.less(c, u)) throw Counterexample("Z(A)^2 = 0 but the zero divisors are incomparable", {c, u});
    return detail::zero_square_report(a, c, u, a1);
  }
  if (!a.leq(c, u) && !a.leq(u, c)) {
    auto a0 = least_nonzero(a1.table);
    if (!a0) throw Counterexample("A1 has no least nonzero element", {c, u});
    if (a1.embedding[*a0] != a.add(c, u)) throw Counterexample("c + u is not the least nonzero element of A1", {c, u});
    PoSemiringTable rebuilt = adjoin_z2_incomparable(a1.table);
    return detail::rebuild(a, rebuilt, Z2IncomparableParts{a1.table, *a0});
  }
  const Element sq = a.mul(u, u);
  if (sq != c && sq != u) throw Counterexample("u^2 is not in {c, u}", {u});
  const USquare us = sq == c ? USquare::c : USquare::u;
  PoSemiringTable rebuilt = adjoin_z2_chain(a1.table, us);
  return detail::rebuild(a, rebuilt, Z2ChainParts{a1.table, us});
}

/// Splits off {0,1} factors along idempotent minimal elements until none
/// remain or the remainder is {0,1}. Requires condition C3.
inline Decomposition peel_boolean(const PoSemiringTable& a) {
  if (!check_conditions(a).c3.holds) throw NotApplicable("condition C3 does not hold");
  PoSemiringTable cur = a;
  BooleanPeelParts parts{0, a, {}};
  while (cur.order() > 2) {
    const ElementAnalysis an = analyze_elements(cur);
    const ElementSet candidates = an.minimals & an.idempotents;
    if (candidates.empty()) break;
    const Element e = candidates.front();
    const auto comps = orthogonal_complements(cur, e);
    if (comps.empty()) throw Counterexample("idempotent minimal element without complement", {e});
    const Element f = comps.front();
    parts.steps.emplace_back(cur.name(e), cur.name(f));
    cur = sub_instance(cur, lower_set(cur, f), f).table;
    ++parts.n;
  }
  parts.a1 = cur;
  PoSemiringTable rebuilt = parts.n == 0 ? cur : direct_product(boolean_power(parts.n), cur);
  return detail::rebuild(a, rebuilt, std::move(parts));
}

/// For Gamma(A) = K1+K1+K1+D_r under C3: finds S with |Z(S)| = 1 and
/// A = {0,1} x S. Returns nothing if no such split exists.
inline std::optional<Decomposition> split_two_star(const PoSemiringTable& a) {
  if (!check_conditions(a).c3.holds) throw NotApplicable("condition C3 does not hold");
  const GraphShape sh = classify_shape(zero_divisor_graph(a));
  if (!is_two_star_one(sh)) throw NotApplicable("zero-divisor graph is not a two-star K1+K1+K1+D_r");
  const std::size_t r = sh.as<shape::TwoStar>().s;
  const auto& ts = sh.as<shape::TwoStar>();
  for (Element e : {ts.center_r, ts.center_s}) {
    if (!is_idempotent(a, e) || !is_minimal(a, e)) continue;
    const auto comps = orthogonal_complements(a, e);
    if (comps.empty()) continue;
    SubInstance s = sub_instance(a, lower_set(a, comps.front()), comps.front());
    if (zero_divisors(s.table).size() != 1 || s.table.order() - 2 != r) continue;
    PoSemiringTable rebuilt = direct_product(trivial_posemiring(), s.table);
    auto iso = find_isomorphism(rebuilt, a);
    if (!iso) continue;
    return Decomposition{TwoStarSplitParts{s.table, r}, std::move(rebuilt), std::move(*iso)};
  }
  return std::nullopt;
}

}  // namespace posr
