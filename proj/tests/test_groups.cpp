#include "relorder/groups.hpp"
#include "relorder/numtheory.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>

using namespace relorder;

namespace {

template <FiniteGroup G>
void expect_group_axioms(const G& g, std::uint64_t seed = 0) {
  const auto n = g.order();
  for (Element a = 0; a < n; ++a) {
    ASSERT_EQ(g.multiply(a, 0), a);
    ASSERT_EQ(g.multiply(0, a), a);
    ASSERT_EQ(g.multiply(g.inverse(a), a), 0u);
    ASSERT_EQ(g.multiply(a, g.inverse(a)), 0u);
  }
  if (n <= 512) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) {
        const Element ab = g.multiply(a, b);
        ASSERT_LT(ab, n);
        for (Element c = 0; c < n; ++c) ASSERT_EQ(g.multiply(ab, c), g.multiply(a, g.multiply(b, c)));
      }
  } else {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 100'000; ++i) {
      Element a = rng() % n, b = rng() % n, c = rng() % n;
      ASSERT_EQ(g.multiply(g.multiply(a, b), c), g.multiply(a, g.multiply(b, c)));
    }
  }
}

template <FiniteGroup G>
std::map<std::uint64_t, std::uint64_t> order_histogram(const G& g) {
  std::map<std::uint64_t, std::uint64_t> h;
  for (Element x = 0; x < g.order(); ++x) ++h[element_order(g, x)];
  return h;
}

}  // namespace

TEST(ElementOrder, Examples) {
  EXPECT_EQ(element_order(CyclicGroup(12), 0), 1u);
  EXPECT_EQ(element_order(CyclicGroup(12), 2), 6u);
  auto f = frobenius_field(2, 3);
  EXPECT_EQ(element_order(f, f.complement_element(1)), 7u);
  EXPECT_THROW(element_order(CyclicGroup(12), 12), InvalidElement);
}

TEST(ElementOrder, LagrangeOnConstructedGroups) {
  std::vector<AnyGroup> groups{CyclicGroup(9973), dihedral(500), symmetric(5), alternating(6), frobenius_field(3, 3),
                               direct_product({symmetric(3), CyclicGroup(5), quaternion8()})};
  for (const auto& g : groups)
    for (Element x = 0; x < g.order(); ++x) ASSERT_EQ(g.order() % element_order(g, x), 0u) << g.name();
}

TEST(ElementOrder, CyclicSumMatchesClosedForm) {
  for (std::uint64_t n = 1; n <= 300; ++n) {
    CyclicGroup c(n);
    std::uint64_t s = 0;
    for (Element x = 0; x < n; ++x) s += element_order(c, x);
    ASSERT_EQ(BigInt(s), psi_cyclic(n));
  }
}

TEST(GroupAxioms, NamedConstructors) {
  expect_group_axioms(cyclic(17));
  expect_group_axioms(dihedral(1));
  expect_group_axioms(dihedral(12));
  expect_group_axioms(symmetric(4));
  expect_group_axioms(alternating(5));
  expect_group_axioms(quaternion8());
  expect_group_axioms(frobenius_field(2, 3));
  expect_group_axioms(frobenius_field(3, 2));
  expect_group_axioms(frobenius_field(5, 1));
  expect_group_axioms(abelian_of_type({2, 2, 4}));
  expect_group_axioms(direct_product({frobenius_field(2, 3), CyclicGroup(3)}));
  expect_group_axioms(frobenius_field(2, 7), 1);
  expect_group_axioms(symmetric(7), 2);
}

TEST(NamedConstructors, Examples) {
  auto s3 = symmetric(3);
  EXPECT_EQ(s3.order(), 6u);
  EXPECT_EQ(order_histogram(s3), (std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 3}, {3, 2}}));
  EXPECT_EQ(dihedral(4).order(), 8u);
  EXPECT_EQ(frobenius_field(2, 3).order(), 56u);
  EXPECT_EQ(symmetric(8).order(), 40320u);
  EXPECT_EQ(alternating(5).order(), 60u);
  EXPECT_THROW(symmetric(9), std::invalid_argument);
  EXPECT_THROW(cyclic(0), std::invalid_argument);
  EXPECT_THROW(cyclic((1u << 16) + 1), std::invalid_argument);
  EXPECT_THROW(frobenius_field(2, 21), std::invalid_argument);
}

TEST(FrobeniusFieldGroup, OrderHistogramMatchesAffineOracle) {
  auto g = frobenius_field(2, 3);
  const std::map<std::uint64_t, std::uint64_t> expected{{1, 1}, {2, 7}, {7, 48}};
  EXPECT_EQ(order_histogram(g), expected);
  EXPECT_EQ(oracle::AffineGF2(3, 0b1011).order_histogram(), expected);
  // Same comparison for r = 5 against the independent construction.
  EXPECT_EQ(order_histogram(frobenius_field(2, 5)), oracle::AffineGF2(5, 0b100101).order_histogram());
}

TEST(FrobeniusFieldGroup, KernelAndComplementStructure) {
  auto g = frobenius_field(2, 3);
  // kernel: translations, elementary abelian of order 8
  for (std::uint32_t a = 1; a < 8; ++a) EXPECT_EQ(element_order(g, g.kernel_element(a)), 2u);
  for (std::uint32_t a = 0; a < 8; ++a)
    for (std::uint32_t b = 0; b < 8; ++b)
      EXPECT_EQ(g.multiply(g.kernel_element(a), g.kernel_element(b)), g.kernel_element(a ^ b));
  // normality of the kernel
  for (Element x = 0; x < g.order(); ++x)
    for (std::uint32_t a = 0; a < 8; ++a) EXPECT_EQ(conjugate(g, x, g.kernel_element(a)) % 7, 0u);
  EXPECT_EQ(g.complement_element(0), 0u);
}

TEST(DirectProduct, Examples) {
  auto c6 = direct_product({CyclicGroup(2), CyclicGroup(3)});
  EXPECT_EQ(c6.order(), 6u);
  EXPECT_EQ(element_order(c6, c6.encode(std::vector<Element>{1, 1})), 6u);
  auto single = direct_product({symmetric(3)});
  EXPECT_EQ(order_histogram(single), order_histogram(symmetric(3)));
  EXPECT_EQ(direct_product({frobenius_field(2, 3), CyclicGroup(3)}).order(), 168u);
  EXPECT_THROW(direct_product({}), std::invalid_argument);
  EXPECT_EQ(c6.decode(c6.encode(std::vector<Element>{1, 2})), (std::vector<Element>{1, 2}));
}

TEST(CayleyTable, AcceptsValidTables) {
  auto trivial = from_cayley_table({{0}});
  EXPECT_EQ(trivial.order(), 1u);
  auto c3 = from_cayley_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  EXPECT_EQ(order_histogram(c3), (std::map<std::uint64_t, std::uint64_t>{{1, 1}, {3, 2}}));
  auto s3 = from_cayley_table(cayley_table(symmetric(3)));
  EXPECT_EQ(order_histogram(s3), order_histogram(symmetric(3)));
}

TEST(CayleyTable, DistinctErrors) {
  auto kind_of = [](const std::vector<std::vector<Element>>& t) {
    try {
      from_cayley_table(t);
    } catch (const TableError& e) {
      return e.kind();
    }
    ADD_FAILURE() << "table accepted";
    return TableErrorKind::Syntax;
  };
  EXPECT_EQ(kind_of({{0, 1}, {1}}), TableErrorKind::NotSquare);
  EXPECT_EQ(kind_of({{0, 1}, {1, 2}}), TableErrorKind::EntryOutOfRange);
  EXPECT_EQ(kind_of({{1, 0}, {0, 1}}), TableErrorKind::MissingIdentity);
  EXPECT_EQ(kind_of({{0, 1, 2}, {1, 1, 0}, {2, 0, 1}}), TableErrorKind::NotLatin);
  // A Latin square with identity 0 that is a loop but not a group.
  std::vector<std::vector<Element>> loop{
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  EXPECT_EQ(kind_of(loop), TableErrorKind::NotAssociative);
}

TEST(PermutationGroup, EncodesInLexicographicOrder) {
  auto s3 = symmetric(3);
  EXPECT_EQ(s3.permutation(0), (Permutation{0, 1, 2}));
  EXPECT_EQ(s3.permutation(5), (Permutation{2, 1, 0}));
  EXPECT_EQ(s3.encode(Permutation{1, 0, 2}), 2u);
  auto a3 = alternating(3);
  EXPECT_THROW(a3.encode(Permutation{1, 0, 2}), InvalidElement);
}
