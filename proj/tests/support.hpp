#pragma once

#include <set>
#include <string>
#include <vector>

#include "posr/posr.hpp"

namespace posr::test {

/// Relabels `a` so that old index x moves to perm[x]; perm must fix 0 and n-1.
inline PoSemiringTable permuted(const PoSemiringTable& a, const std::vector<Element>& perm) {
  const std::size_t n = a.order();
  RawTables t;
  t.names.resize(n);
  t.add.assign(n, std::vector<Element>(n));
  t.mul.assign(n, std::vector<Element>(n));
  for (Element x = 0; x < n; ++x) {
    t.names[perm[x]] = a.name(x);
    for (Element y = 0; y < n; ++y) {
      t.add[perm[x]][perm[y]] = perm[a.add(x, y)];
      t.mul[perm[x]][perm[y]] = perm[a.mul(x, y)];
    }
  }
  return PoSemiringTable(t);
}

/// Reverses the middle elements.
inline PoSemiringTable reversed_middle(const PoSemiringTable& a) {
  const auto n = static_cast<Element>(a.order());
  std::vector<Element> perm(n);
  perm[0] = 0;
  perm[n - 1] = n - 1;
  for (Element x = 1; x + 1 < n; ++x) perm[x] = n - 1 - x;
  return permuted(a, perm);
}

inline std::set<std::string> labels(const PoSemiringTable& a, ElementSet s) {
  std::set<std::string> out;
  for (Element x : s) out.insert(a.name(x));
  return out;
}

inline std::set<std::string> labels(const PoSemiringTable& a, const std::vector<Element>& xs) {
  std::set<std::string> out;
  for (Element x : xs) out.insert(a.name(x));
  return out;
}

/// {0, a, 1} with a^2 = 0.
inline PoSemiringTable nilpotent_chain3() { return adjoin_z1(trivial_posemiring()); }

/// {0, a, 1} with a^2 = a.
inline PoSemiringTable idempotent_chain3() { return chain_lattice(1); }

inline RawTables raw_tables(std::vector<std::string> names, std::vector<std::vector<Element>> add,
                            std::vector<std::vector<Element>> mul) {
  RawTables t;
  t.names = std::move(names);
  t.add = std::move(add);
  t.mul = std::move(mul);
  return t;
}

/// Every census instance of order 2..max_order.
inline std::vector<PoSemiringTable> census_up_to(std::size_t max_order) {
  std::vector<PoSemiringTable> out;
  for (std::size_t n = 2; n <= max_order; ++n)
    for (auto& a : enumerate_posemirings(n).instances) out.push_back(a);
  return out;
}

}  // namespace posr::test
