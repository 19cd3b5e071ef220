// A short walk through the library: build, analyze, graph, decompose, census, rings.
#include <iostream>

#include "posr/posr.hpp"

int main() {
  using namespace posr;

  const PoSemiringTable a = example_2_6(2);
  const ElementAnalysis an = analyze_elements(a);
  const ConditionReport c = check_conditions(a);
  std::cout << "chain with annihilating a: Z=" << format_set(a, an.zero_divisors)
            << " primes=" << format_set(a, an.primes) << " c2=" << c.c2.holds << " c3=" << c.c3.holds << "\n";
  std::cout << "  graph: " << shape_line(classify_shape(zero_divisor_graph(a))) << "\n";

  const PoSemiringTable p = direct_product(trivial_posemiring(), example_3_2(2));
  std::cout << "{0,1} x nilpotent chain: " << shape_line(classify_shape(zero_divisor_graph(p))) << "\n";
  if (auto d = split_two_star(p))
    std::cout << "  split back into {0,1} x S with |S|=" << d->as<TwoStarSplitParts>().s.order() << "\n";

  const Decomposition peeled = peel_boolean(boolean_power(3));
  std::cout << "boolean cube peels " << peeled.as<BooleanPeelParts>().n << " factors of {0,1}, leaving order "
            << peeled.as<BooleanPeelParts>().a1.order() << "\n";

  for (std::size_t n = 2; n <= 5; ++n) {
    const CensusResult r = enumerate_posemirings(n);
    std::cout << "order " << n << ": " << r.count_up_to_iso << " classes, " << r.count_labeled << " labeled\n";
  }

  const FiniteRing z12 = zn_ring(12);
  const AnnihilatingIdealGraph ag = annihilating_ideal_graph(z12);
  std::cout << "AG(Z_12): " << shape_line(ag.shape) << "\n";
  const K2Characterization k = characterize_k2(zn_ring(8));
  std::cout << "AG(Z_8) is K2: " << k.statement2() << "\n";
}
