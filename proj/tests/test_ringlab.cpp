#include <gtest/gtest.h>

#include <filesystem>
#include <numeric>

#include "support.hpp"

using namespace posr;
using namespace posr::test;

namespace {

std::vector<std::size_t> ideal_sizes(const FiniteRing& r) {
  std::vector<std::size_t> out;
  for (const auto& i : enumerate_ring_ideals(r)) out.push_back(i.size());
  return out;
}

std::vector<Element> multiples(unsigned n, unsigned d) {
  std::vector<Element> out;
  for (unsigned x = 0; x < n; x += d) out.push_back(static_cast<Element>(x));
  return out;
}

bool complete_two(const GraphShape& s) { return s.is<shape::Complete>() && s.as<shape::Complete>().n == 2; }

std::string z4_ring_text() {
  return "ring 1\norder 4\none 1\nnames 0 1 2 3\nadd\n0 1 2 3\n1 2 3 0\n2 3 0 1\n3 0 1 2\n"
         "mul\n0 0 0 0\n0 1 2 3\n0 2 0 2\n0 3 2 1\n";
}

}  // namespace

TEST(MakeRing, IntegersModN) {
  const auto r = make_ring("zn:12");
  EXPECT_EQ(r.order(), 12u);
  EXPECT_EQ(r.one(), 1u);
  EXPECT_EQ(r.add(7, 8), 3u);
  EXPECT_EQ(r.mul(5, 7), 11u);
  EXPECT_EQ(r.neg(5), 7u);
}

TEST(MakeRing, QuadraticExtensions) {
  const auto dual = make_ring("zpx:2:0:0");
  EXPECT_EQ(dual.order(), 4u);
  std::size_t nilpotent = 0;
  for (Element x = 1; x < 4; ++x) nilpotent += is_ring_nilpotent(dual, x);
  EXPECT_EQ(nilpotent, 1u);
  const auto f4 = make_ring("zpx:2:1:1");
  for (Element x = 1; x < 4; ++x) {
    bool unit = false;
    for (Element y = 0; y < 4; ++y) unit = unit || f4.mul(x, y) == f4.one();
    EXPECT_TRUE(unit) << x;
  }
  EXPECT_EQ(make_ring("zpx:13:0:2").order(), 169u);
}

TEST(MakeRing, Products) {
  const auto r = make_ring("prod(zn:2,prod(zn:3,zn:2))");
  EXPECT_EQ(r.order(), 12u);
  EXPECT_EQ(enumerate_ring_ideals(r).size(), 8u);
}

TEST(MakeRing, RejectsBadSpecs) {
  EXPECT_THROW(make_ring("zpx:4:0:0"), DomainError);
  EXPECT_THROW(make_ring("zpx:17:0:0"), DomainError);
  EXPECT_THROW(make_ring("zpx:3:3:0"), DomainError);
  EXPECT_THROW(make_ring("zn:1"), DomainError);
  EXPECT_THROW(make_ring("zn:513"), CapExceeded);
  EXPECT_THROW(make_ring("zn:"), DomainError);
  EXPECT_THROW(make_ring("zn:4x"), DomainError);
  EXPECT_THROW(make_ring("prod(zn:2"), DomainError);
  EXPECT_THROW(make_ring("q:5"), DomainError);
  EXPECT_THROW(make_ring("prod(zn:32,zn:32)"), CapExceeded);
}

TEST(MakeRing, RejectsNonRingTables) {
  RawRing raw;
  raw.names = {"0", "1", "2"};
  raw.one = 1;
  raw.add = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  raw.mul = {{0, 0, 0}, {0, 1, 2}, {0, 2, 2}};
  EXPECT_THROW(FiniteRing{raw}, InvalidInstance);
  raw.mul = {{0, 0, 0}, {0, 1, 2}, {0, 2, 1}};
  EXPECT_NO_THROW(FiniteRing{raw});
  raw.names = {"0", "1", "1"};
  EXPECT_THROW(FiniteRing{raw}, StructuralError);
}

TEST(RingFile, RoundTrip) {
  const auto r = make_ring("prod(zn:2,zn:3)");
  const auto back = parse_ring(format_ring(r));
  EXPECT_EQ(back.add_table(), r.add_table());
  EXPECT_EQ(back.mul_table(), r.mul_table());
  EXPECT_EQ(back.one(), r.one());
  EXPECT_EQ(back.names(), r.names());
}

TEST(RingFile, ParsesAndLoadsFromDisk) {
  const auto r = parse_ring(z4_ring_text());
  EXPECT_EQ(ideal_sizes(r), (std::vector<std::size_t>{1, 2, 4}));
  const auto path = (std::filesystem::temp_directory_path() / "posr_test_z4.ring").string();
  write_text_file(path, z4_ring_text());
  EXPECT_EQ(make_ring("file:" + path).mul_table(), r.mul_table());
  std::filesystem::remove(path);
}

TEST(RingFile, ReportsLineNumbers) {
  std::string text = z4_ring_text();
  text.replace(text.find("0 3 2 1"), 7, "0 3 2 9");
  try {
    parse_ring(text, "bad.ring");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.source(), "bad.ring");
    EXPECT_EQ(e.line(), 14u);
  }
  EXPECT_THROW(parse_ring(z4_ring_text() + "extra\n"), ParseError);
  EXPECT_THROW(parse_ring("psr 1\n"), ParseError);
  std::string wrong_one = z4_ring_text();
  wrong_one.replace(wrong_one.find("one 1"), 5, "one 2");
  try {
    parse_ring(wrong_one);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("mul-identity"), std::string::npos) << e.what();
  }
}

TEST(RingIdeals, IntegersModTwelveHaveOneIdealPerDivisor) {
  const auto r = make_ring("zn:12");
  const auto ideals = enumerate_ring_ideals(r);
  ASSERT_EQ(ideals.size(), 6u);
  const std::vector<unsigned> by_size{12, 6, 4, 3, 2, 1};
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(ideals[i].members, multiples(12, by_size[i]));
  EXPECT_EQ(ideal_name(r, ideals[0]), "(0)");
  EXPECT_EQ(ideal_name(r, ideals[1]), "(6)");
  EXPECT_EQ(ideal_name(r, ideals[5]), "(1)");
}

TEST(RingIdeals, CountsMatchDivisors) {
  for (unsigned n = 2; n <= 64; ++n) {
    std::size_t divisors = 0;
    for (unsigned d = 1; d <= n; ++d) divisors += n % d == 0;
    EXPECT_EQ(enumerate_ring_ideals(zn_ring(n)).size(), divisors) << n;
  }
}

TEST(RingIdeals, FieldsHaveTwoIdeals) {
  for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u}) EXPECT_EQ(enumerate_ring_ideals(zn_ring(p)).size(), 2u);
  EXPECT_EQ(enumerate_ring_ideals(make_ring("zpx:2:1:1")).size(), 2u);
  EXPECT_EQ(enumerate_ring_ideals(make_ring("zpx:3:0:1")).size(), 2u);
}

TEST(RingIdeals, ProductIdealsAreProducts) {
  EXPECT_EQ(enumerate_ring_ideals(make_ring("prod(zn:2,zn:4)")).size(), 6u);
  EXPECT_EQ(enumerate_ring_ideals(make_ring("prod(zn:4,zn:9)")).size(), 9u);
}

TEST(RingIdeals, AreClosedUnderSumProductAndScaling) {
  for (const char* spec : {"zn:36", "prod(zn:2,zn:4)", "zpx:2:0:0", "prod(zpx:2:0:1,zn:3)"}) {
    const auto r = make_ring(spec);
    const auto ideals = enumerate_ring_ideals(r);
    for (const auto& i : ideals) {
      EXPECT_TRUE(i.contains(0));
      for (Element x : i.members)
        for (Element y = 0; y < r.order(); ++y) {
          EXPECT_TRUE(i.contains(r.mul(x, y)));
          if (i.contains(y)) { EXPECT_TRUE(i.contains(r.add(x, y))); }
        }
      for (const auto& j : ideals) {
        const auto s = ideal_sum(r, i, j), p = ideal_product(r, i, j);
        EXPECT_NE(std::find(ideals.begin(), ideals.end(), s), ideals.end());
        EXPECT_NE(std::find(ideals.begin(), ideals.end(), p), ideals.end());
      }
    }
  }
}

TEST(IdealSemiring, SmallCasesMatchKnownInstances) {
  EXPECT_TRUE(isomorphic(ideal_semiring(make_ring("zn:4")).table, nilpotent_chain3()));
  EXPECT_TRUE(isomorphic(ideal_semiring(make_ring("zn:6")).table, boolean_power(2)));
  EXPECT_TRUE(isomorphic(ideal_semiring(make_ring("zn:30")).table, boolean_power(3)));
  EXPECT_EQ(ideal_semiring(make_ring("zn:12")).table.order(), 6u);
  EXPECT_TRUE(isomorphic(ideal_semiring(make_ring("zn:7")).table, boolean_power(1)));
}

TEST(IdealSemiring, ZeroAndTopAndProductsOfTwelve) {
  const auto r = make_ring("zn:12");
  const auto s = ideal_semiring(r);
  EXPECT_EQ(s.ideals.front().size(), 1u);
  EXPECT_EQ(s.ideals.back().size(), 12u);
  EXPECT_EQ(s.table.mul(1, 1), 0u);
  EXPECT_EQ(s.table.add(2, 3), 5u);
}

TEST(IdealSemiring, OrderIsInclusion) {
  for (const char* spec : {"zn:12", "zn:36", "prod(zn:2,zn:4)", "zpx:3:0:0", "prod(zn:4,zn:2)"}) {
    const auto s = ideal_semiring(make_ring(spec));
    EXPECT_TRUE(verify_axioms(s.table.raw()).valid);
    for (Element i = 0; i < s.ideals.size(); ++i)
      for (Element j = 0; j < s.ideals.size(); ++j) {
        const auto& a = s.ideals[i].members;
        const auto& b = s.ideals[j].members;
        EXPECT_EQ(s.table.leq(i, j), std::includes(b.begin(), b.end(), a.begin(), a.end())) << spec;
      }
  }
}

TEST(IdealSemiring, IdealCapIsEnforced) {
  EXPECT_THROW(ideal_semiring(make_ring("zn:30"), {.max_ideals = 4}), CapExceeded);
}

TEST(IdealSemiring, SatisfiesConditionOneOnTheCorpus) {
  for (const auto& nr : default_ring_corpus()) EXPECT_TRUE(check_conditions(ideal_semiring(nr.ring).table).c1.holds) << nr.spec;
}

TEST(AnnihilatingIdealGraph, CompleteTwoFixtures) {
  for (const char* spec : {"zn:8", "zn:6", "zn:27", "zn:125", "prod(zn:2,zn:3)", "prod(zpx:2:1:1,zn:2)"})
    EXPECT_TRUE(complete_two(annihilating_ideal_graph(make_ring(spec)).shape)) << spec;
}

TEST(AnnihilatingIdealGraph, TwelveIsATwoStar) {
  const auto ag = annihilating_ideal_graph(make_ring("zn:12"));
  ASSERT_TRUE(ag.shape.is<shape::TwoStar>());
  EXPECT_EQ(ag.shape.as<shape::TwoStar>().r, 1u);
  EXPECT_EQ(ag.shape.as<shape::TwoStar>().s, 1u);
  EXPECT_EQ(shape_line(ag.shape), "two-star r=1 s=1 (K1+K1+K1+K1)");
}

TEST(AnnihilatingIdealGraph, FieldsGiveTheEmptyGraph) {
  for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    const auto ag = annihilating_ideal_graph(zn_ring(p));
    EXPECT_TRUE(ag.shape.is<shape::Empty>()) << p;
    EXPECT_EQ(ag.graph.size(), 0u);
  }
}

TEST(AnnihilatingIdealGraph, LocalRingWithOneNontrivialIdealIsAVertex) {
  EXPECT_TRUE(annihilating_ideal_graph(make_ring("zpx:3:0:0")).shape.is<shape::SingleVertex>());
  EXPECT_TRUE(annihilating_ideal_graph(make_ring("zn:4")).shape.is<shape::SingleVertex>());
}

TEST(RingZeroDivisorGraph, Fixtures) {
  EXPECT_TRUE(complete_two(ring_zdgraph(make_ring("zn:9")).shape));
  for (unsigned p : {2u, 3u, 5u, 7u}) EXPECT_TRUE(ring_zdgraph(zn_ring(p)).shape.is<shape::Empty>());
  const auto z8 = ring_zdgraph(make_ring("zn:8"));
  ASSERT_TRUE(z8.shape.is<shape::Star>());
  EXPECT_EQ(z8.shape.as<shape::Star>().r, 2u);
  const auto z2z4 = ring_zdgraph(make_ring("prod(zn:2,zn:4)"));
  EXPECT_EQ(z2z4.graph.size(), 5u);
  ASSERT_TRUE(z2z4.shape.is<shape::TwoStar>());
  EXPECT_EQ(z2z4.shape.as<shape::TwoStar>().r, 1u);
  EXPECT_EQ(z2z4.shape.as<shape::TwoStar>().s, 2u);
  EXPECT_TRUE(ring_zdgraph(make_ring("zpx:2:0:0")).shape.is<shape::SingleVertex>());
}

TEST(Radicals, Fixtures) {
  const auto r12 = radicals(make_ring("zn:12"));
  EXPECT_EQ(r12.nilradical.members, multiples(12, 6));
  EXPECT_EQ(r12.jacobson.members, multiples(12, 6));
  EXPECT_EQ(r12.idempotents, (std::vector<Element>{0, 1, 4, 9}));
  const auto r8 = radicals(make_ring("zn:8"));
  EXPECT_EQ(r8.nilradical.members, multiples(8, 2));
  EXPECT_EQ(r8.jacobson.members, multiples(8, 2));
  const auto r6 = radicals(make_ring("zn:6"));
  EXPECT_EQ(r6.nilradical.size(), 1u);
  EXPECT_EQ(r6.jacobson.size(), 1u);
}

TEST(Radicals, NilradicalEqualsJacobsonForFiniteRings) {
  for (const auto& nr : default_ring_corpus()) {
    const auto rad = radicals(nr.ring);
    EXPECT_EQ(rad.nilradical, rad.jacobson) << nr.spec;
  }
}

TEST(CompleteTwoCharacterization, Fixtures) {
  for (const char* spec : {"zn:6", "zn:8", "zn:27", "prod(zn:2,zn:3)", "prod(zpx:2:1:1,zn:2)"}) {
    const auto k = characterize_k2(make_ring(spec));
    EXPECT_TRUE(k.statement1() && k.statement2() && k.statement3()) << spec;
  }
  for (const char* spec : {"zpx:3:0:0", "zn:12", "zn:16", "zn:4", "zn:5", "prod(zn:2,zn:4)"}) {
    const auto k = characterize_k2(make_ring(spec));
    EXPECT_FALSE(k.statement1() || k.statement2() || k.statement3()) << spec;
  }
  const auto z8 = characterize_k2(make_ring("zn:8"));
  EXPECT_TRUE(z8.local);
  EXPECT_EQ(z8.nontrivial_ideals, 2u);
  ASSERT_TRUE(z8.alpha.has_value());
  const auto r = make_ring("zn:8");
  const Element a = *z8.alpha, a2 = r.mul(a, a);
  EXPECT_NE(a2, 0u);
  EXPECT_EQ(r.mul(a2, a), 0u);
}

TEST(CompleteTwoCharacterization, EquivalenceOverTheDefaultCorpus) {
  std::size_t positives = 0;
  for (const auto& nr : default_ring_corpus()) {
    const auto k = characterize_k2(nr.ring);
    EXPECT_EQ(k.statement1(), k.statement2()) << nr.spec;
    EXPECT_EQ(k.statement2(), k.statement3()) << nr.spec;
    positives += k.statement2();
  }
  EXPECT_GT(positives, 0u);
}

TEST(DefaultCorpus, Composition) {
  const auto corpus = default_ring_corpus();
  std::set<std::string> specs;
  for (const auto& nr : corpus) specs.insert(nr.spec);
  EXPECT_EQ(specs.size(), corpus.size());
  for (unsigned n = 2; n <= 64; ++n) EXPECT_TRUE(specs.count("zn:" + std::to_string(n))) << n;
  EXPECT_TRUE(specs.count("zpx:2:0:0"));
  EXPECT_TRUE(specs.count("zpx:5:4:4"));
  for (const auto& nr : corpus) EXPECT_LE(nr.ring.order(), 64u);
}
