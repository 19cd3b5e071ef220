#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "posr/axioms.hpp"
#include "posr/element_set.hpp"
#include "posr/errors.hpp"

namespace posr {

/// A finite po-semiring given by its addition and multiplication tables.
/// Index 0 is the zero, index order()-1 the identity. The partial order is
/// not stored: x <= y iff x + y = y.
///
/// Construction validates the axioms, so every live instance is valid.
class PoSemiringTable {
 public:
  explicit PoSemiringTable(const RawTables& raw) {
    AxiomReport report = verify_axioms(raw);
    if (!report.valid) {
      const Violation& v = report.violations.front();
      std::string msg = "axiom '" + v.axiom + "' fails at (";
      for (std::size_t i = 0; i < v.witness.size(); ++i)
        msg += (i ? "," : "") + raw.names[v.witness[i]];
      throw InvalidInstance(msg + ")");
    }
    n_ = raw.order();
    names_ = raw.names;
    add_.reserve(n_ * n_);
    mul_.reserve(n_ * n_);
    for (std::size_t x = 0; x < n_; ++x)
      for (std::size_t y = 0; y < n_; ++y) {
        add_.push_back(raw.add[x][y]);
        mul_.push_back(raw.mul[x][y]);
      }
  }

  std::size_t order() const noexcept { return n_; }
  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return static_cast<Element>(n_ - 1); }

  Element add(Element x, Element y) const { return add_[x * n_ + y]; }
  Element mul(Element x, Element y) const { return mul_[x * n_ + y]; }
  bool leq(Element x, Element y) const { return add(x, y) == y; }
  bool less(Element x, Element y) const { return x != y && leq(x, y); }

  Element power(Element x, unsigned k) const {
    Element p = one();
    for (unsigned i = 0; i < k; ++i) p = mul(p, x);
    return p;
  }

  const std::string& name(Element x) const { return names_.at(x); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  /// Element carrying the given label; throws DomainError if absent.
  Element find(std::string_view label) const {
    for (std::size_t i = 0; i < n_; ++i)
      if (names_[i] == label) return static_cast<Element>(i);
    throw DomainError("no element labelled '" + std::string(label) + "'");
  }

  ElementSet all() const { return ElementSet::full(n_); }

  RawTables raw() const {
    RawTables t;
    t.names = names_;
    t.add.assign(n_, std::vector<Element>(n_));
    t.mul.assign(n_, std::vector<Element>(n_));
    for (std::size_t x = 0; x < n_; ++x)
      for (std::size_t y = 0; y < n_; ++y) {
        t.add[x][y] = add_[x * n_ + y];
        t.mul[x][y] = mul_[x * n_ + y];
      }
    return t;
  }

  /// Same tables, new labels.
  PoSemiringTable renamed(std::vector<std::string> names) const {
    RawTables t = raw();
    t.names = std::move(names);
    return PoSemiringTable(t);
  }

  const std::vector<Element>& add_table() const noexcept { return add_; }
  const std::vector<Element>& mul_table() const noexcept { return mul_; }

  friend bool operator==(const PoSemiringTable&, const PoSemiringTable&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::string> names_;
  std::vector<Element> add_;
  std::vector<Element> mul_;
};

inline void check_element(const PoSemiringTable& a, Element x) {
  if (x >= a.order())
    throw DomainError("element index " + std::to_string(x) + " out of range for order " +
                      std::to_string(a.order()));
}

/// x <= y in the order derived from addition.
inline bool leq(const PoSemiringTable& a, Element x, Element y) {
  check_element(a, x);
  check_element(a, y);
  return a.leq(x, y);
}

/// Renders a set as "{a,b1,b2}" using element labels.
inline std::string format_set(const PoSemiringTable& a, ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (Element x : s) {
    if (!first) out += ",";
    out += a.name(x);
    first = false;
  }
  return out + "}";
}

}  // namespace posr
