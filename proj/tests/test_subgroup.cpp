#include "relorder/groups.hpp"
#include "relorder/numtheory.hpp"
#include "relorder/order_sums.hpp"
#include "relorder/subgroup.hpp"

#include <gtest/gtest.h>

using namespace relorder;

namespace {

template <FiniteGroup G>
void expect_closed(const G& g, const Subgroup& h) {
  ASSERT_TRUE(h.contains(g.identity()));
  ASSERT_EQ(g.order() % h.order(), 0u);
  for (Element a : h.members()) {
    ASSERT_TRUE(h.contains(g.inverse(a)));
    for (Element b : h.members()) ASSERT_TRUE(h.contains(g.multiply(a, b)));
  }
}

// A transposition and a 3-cycle in S_3.
Element transposition(const PermutationGroup& s3) { return s3.encode(Permutation{1, 0, 2}); }
Element three_cycle(const PermutationGroup& s3) { return s3.encode(Permutation{1, 2, 0}); }

}  // namespace

TEST(Generate, Examples) {
  CyclicGroup c12(12);
  EXPECT_EQ(generate(c12, {}).members(), (std::vector<Element>{0}));
  EXPECT_EQ(generate(c12, {4}).members(), (std::vector<Element>{0, 4, 8}));
  auto s3 = symmetric(3);
  EXPECT_EQ(generate(s3, {transposition(s3), three_cycle(s3)}).order(), 6u);
  EXPECT_THROW(generate(c12, {12}), InvalidElement);
}

TEST(AllSubgroups, Examples) {
  EXPECT_EQ(all_subgroups(CyclicGroup(6)).size(), 4u);
  EXPECT_EQ(all_subgroups(symmetric(3)).size(), 6u);
  EXPECT_EQ(all_subgroups(quaternion8()).size(), 6u);
  // Known lattice sizes: S_4 has 30 subgroups, A_5 has 59, C_2^4 has 67.
  EXPECT_EQ(all_subgroups(symmetric(4)).size(), 30u);
  EXPECT_EQ(all_subgroups(alternating(5)).size(), 59u);
  EXPECT_EQ(all_subgroups(abelian_of_type({2, 2, 2, 2})).size(), 67u);
  EXPECT_THROW(all_subgroups(CyclicGroup(201)), BudgetExceeded);
}

TEST(AllSubgroups, CyclicCountIsDivisorCount) {
  for (std::uint64_t n = 1; n <= 100; ++n) ASSERT_EQ(all_subgroups(CyclicGroup(n)).size(), divisors(n).size()) << n;
}

TEST(AllSubgroups, EverySubgroupClosedAndSorted) {
  std::vector<AnyGroup> groups{dihedral(6), symmetric(4), frobenius_field(2, 3), abelian_of_type({2, 4, 3})};
  for (const auto& g : groups) {
    auto subs = all_subgroups(g);
    for (std::size_t i = 0; i < subs.size(); ++i) {
      expect_closed(g, subs[i]);
      if (i) {
        ASSERT_LE(subs[i - 1].order(), subs[i].order());
        ASSERT_FALSE(subs[i - 1] == subs[i]);
      }
    }
    EXPECT_TRUE(subs.front().is_trivial());
    EXPECT_TRUE(subs.back().is_whole());
  }
}

TEST(IsNormal, Examples) {
  auto c12 = CyclicGroup(12);
  for (const auto& h : all_subgroups(c12)) EXPECT_TRUE(is_normal(c12, h));
  auto s3 = symmetric(3);
  EXPECT_TRUE(is_normal(s3, generate(s3, {three_cycle(s3)})));
  EXPECT_FALSE(is_normal(s3, generate(s3, {transposition(s3)})));
}

TEST(Quotient, Examples) {
  CyclicGroup c6(6);
  auto q = quotient(c6, generate(c6, {2}));
  EXPECT_EQ(q.order(), 2u);
  auto s4 = symmetric(4);
  auto same = quotient(s4, trivial_subgroup(s4));
  EXPECT_EQ(same.order(), 24u);
  EXPECT_EQ(psi(same), psi(s4));

  auto f = frobenius_field(2, 3);
  Subgroup kernel = generate(f, {f.kernel_element(1), f.kernel_element(2), f.kernel_element(4)});
  ASSERT_EQ(kernel.order(), 8u);
  auto c7 = quotient(f, kernel);
  EXPECT_EQ(c7.order(), 7u);
  EXPECT_EQ(psi(c7), psi_cyclic(7));
  EXPECT_EQ(psi_relative(f, kernel), BigInt(8) * 43);

  auto s3 = symmetric(3);
  EXPECT_THROW(quotient(s3, generate(s3, {transposition(s3)})), NotNormal);
}

TEST(Quotient, IdentityCosetFirst) {
  auto d8 = dihedral(4);
  Subgroup center = generate(d8, {2});
  auto q = quotient(d8, center);
  EXPECT_EQ(q.order(), 4u);
  for (Element x = 0; x < 4; ++x) EXPECT_EQ(q.multiply(0, x), x);
}

TEST(IsIsolated, Examples) {
  auto s3 = symmetric(3);
  EXPECT_TRUE(is_isolated(s3, whole_group(s3)));
  auto f = frobenius_field(2, 3);
  EXPECT_TRUE(is_isolated(f, generate(f, {f.complement_element(1)})));
  CyclicGroup c4(4);
  EXPECT_FALSE(is_isolated(c4, generate(c4, {2})));
}

TEST(ConjugatesIntersectTrivially, Examples) {
  auto f = frobenius_field(2, 3);
  EXPECT_TRUE(conjugates_intersect_trivially(f, generate(f, {f.complement_element(1)})));
  auto s3 = symmetric(3);
  EXPECT_FALSE(conjugates_intersect_trivially(s3, generate(s3, {three_cycle(s3)})));
  EXPECT_TRUE(conjugates_intersect_trivially(s3, generate(s3, {transposition(s3)})));
}

TEST(WholeGroup, SmallGeneratingSet) {
  auto f = frobenius_field(2, 7);
  auto w = whole_group(f);
  EXPECT_TRUE(w.is_whole());
  EXPECT_LE(w.generators().size(), 4u);
}
