#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "posr/element_set.hpp"
#include "posr/errors.hpp"

namespace posr {

/// Unvalidated operation tables, as read from a file or built by hand.
struct RawTables {
  std::vector<std::string> names;
  std::vector<std::vector<Element>> add;
  std::vector<std::vector<Element>> mul;

  std::size_t order() const { return names.size(); }
};

namespace axiom {
inline constexpr const char* kAddCommutative = "add-commutative";
inline constexpr const char* kAddAssociative = "add-associative";
inline constexpr const char* kAddIdentity = "add-identity";
inline constexpr const char* kMulCommutative = "mul-commutative";
inline constexpr const char* kMulAssociative = "mul-associative";
inline constexpr const char* kMulIdentity = "mul-identity";
inline constexpr const char* kZeroAbsorbs = "zero-absorbs";
inline constexpr const char* kDistributive = "distributive";
inline constexpr const char* kOneIsTop = "one-is-top";
}  // namespace axiom

struct Violation {
  std::string axiom;
  std::vector<Element> witness;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct AxiomReport {
  bool valid = true;
  std::vector<Violation> violations;
};

/// Throws StructuralError unless the tables are n x n over [0, n) with n
/// distinct, non-empty, whitespace-free labels and 2 <= n <= kMaxOrder.
inline void check_structure(const RawTables& t) {
  const std::size_t n = t.order();
  if (n < 2) throw StructuralError("order must be at least 2");
  if (n > kMaxOrder) throw StructuralError("order " + std::to_string(n) + " exceeds the limit of 64");
  std::set<std::string> seen;
  for (const auto& name : t.names) {
    if (name.empty()) throw StructuralError("empty element label");
    if (std::any_of(name.begin(), name.end(), [](unsigned char ch) { return ch <= ' '; }))
      throw StructuralError("label '" + name + "' contains whitespace");
    if (!seen.insert(name).second) throw StructuralError("duplicate label '" + name + "'");
  }
  auto check_table = [n](const std::vector<std::vector<Element>>& tab, const char* which) {
    if (tab.size() != n) throw StructuralError(std::string(which) + " table has wrong row count");
    for (const auto& row : tab) {
      if (row.size() != n) throw StructuralError(std::string(which) + " table has a row of wrong length");
      for (Element e : row)
        if (e >= n) throw StructuralError(std::string(which) + " table entry out of range");
    }
  };
  check_table(t.add, "add");
  check_table(t.mul, "mul");
}

/// Checks the reduced axiom list: two commutative monoids, distributivity,
/// 0 absorbing, and x + 1 = 1. Each failing axiom is reported once, with the
/// first witness in lexicographic scan order.
inline AxiomReport verify_axioms(const RawTables& t) {
  check_structure(t);
  const auto n = static_cast<Element>(t.order());
  const Element zero = 0;
  const Element one = n - 1;
  const auto& A = t.add;
  const auto& M = t.mul;
  AxiomReport report;
  auto fail = [&](const char* id, std::vector<Element> w) {
    report.violations.push_back({id, std::move(w)});
  };

  auto commutative = [&](const std::vector<std::vector<Element>>& T, const char* id) {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        if (T[x][y] != T[y][x]) return fail(id, {x, y});
  };
  auto associative = [&](const std::vector<std::vector<Element>>& T, const char* id) {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        for (Element z = 0; z < n; ++z)
          if (T[T[x][y]][z] != T[x][T[y][z]]) return fail(id, {x, y, z});
  };

  commutative(A, axiom::kAddCommutative);
  associative(A, axiom::kAddAssociative);
  for (Element x = 0; x < n; ++x)
    if (A[zero][x] != x || A[x][zero] != x) {
      fail(axiom::kAddIdentity, {x});
      break;
    }
  commutative(M, axiom::kMulCommutative);
  associative(M, axiom::kMulAssociative);
  for (Element x = 0; x < n; ++x)
    if (M[one][x] != x || M[x][one] != x) {
      fail(axiom::kMulIdentity, {x});
      break;
    }
  for (Element x = 0; x < n; ++x)
    if (M[zero][x] != zero || M[x][zero] != zero) {
      fail(axiom::kZeroAbsorbs, {x});
      break;
    }
  [&] {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        for (Element z = 0; z < n; ++z)
          if (M[x][A[y][z]] != A[M[x][y]][M[x][z]]) return fail(axiom::kDistributive, {x, y, z});
  }();
  for (Element x = 0; x < n; ++x)
    if (A[one][x] != one || A[x][one] != one) {
      fail(axiom::kOneIsTop, {x});
      break;
    }

  report.valid = report.violations.empty();
  return report;
}

/// Re-evaluates a reported violation against the tables.
inline bool replays(const RawTables& t, const Violation& v) {
  const auto n = static_cast<Element>(t.order());
  const auto& A = t.add;
  const auto& M = t.mul;
  const auto& w = v.witness;
  for (Element e : w)
    if (e >= n) return false;
  const Element one = n - 1;
  if (v.axiom == axiom::kAddCommutative && w.size() == 2) return A[w[0]][w[1]] != A[w[1]][w[0]];
  if (v.axiom == axiom::kMulCommutative && w.size() == 2) return M[w[0]][w[1]] != M[w[1]][w[0]];
  if (v.axiom == axiom::kAddAssociative && w.size() == 3)
    return A[A[w[0]][w[1]]][w[2]] != A[w[0]][A[w[1]][w[2]]];
  if (v.axiom == axiom::kMulAssociative && w.size() == 3)
    return M[M[w[0]][w[1]]][w[2]] != M[w[0]][M[w[1]][w[2]]];
  if (v.axiom == axiom::kAddIdentity && w.size() == 1) return A[0][w[0]] != w[0] || A[w[0]][0] != w[0];
  if (v.axiom == axiom::kMulIdentity && w.size() == 1)
    return M[one][w[0]] != w[0] || M[w[0]][one] != w[0];
  if (v.axiom == axiom::kZeroAbsorbs && w.size() == 1) return M[0][w[0]] != 0 || M[w[0]][0] != 0;
  if (v.axiom == axiom::kDistributive && w.size() == 3)
    return M[w[0]][A[w[1]][w[2]]] != A[M[w[0]][w[1]]][M[w[0]][w[2]]];
  if (v.axiom == axiom::kOneIsTop && w.size() == 1) return A[one][w[0]] != one || A[w[0]][one] != one;
  return false;
}

}  // namespace posr
