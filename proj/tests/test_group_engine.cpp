#include <gtest/gtest.h>

#include "oracles.hpp"
#include "prodquot/constructors.hpp"
#include "prodquot/error.hpp"
#include "prodquot/group_ops.hpp"
#include "prodquot/isomorphism.hpp"
#include "prodquot/permutation.hpp"
#include "test_support.hpp"

using namespace prodquot;
using testing_support::catalog;
using testing_support::group;

TEST(GroupTable, RejectsNonLatinTable) {
  EXPECT_THROW(GroupTable::from_table(2, {0, 1, 1, 1}), Error);
  EXPECT_THROW(GroupTable::from_table(2, {0, 1}), Error);
}

TEST(GroupTable, CyclicBasics) {
  const GroupTable g = cyclic(12);
  EXPECT_EQ(g.order(), 12u);
  EXPECT_EQ(g.class_count(), 12u);
  EXPECT_EQ(count_elements_of_order(g, 12), 4u);
  EXPECT_EQ(count_elements_of_order(g, 2), 1u);
  EXPECT_TRUE(is_abelian(g));
}

TEST(GroupTable, PowerAndCommutator) {
  const GroupTable g = symmetric(3);
  for (Element x : g.elements()) {
    EXPECT_EQ(g.power(x, g.elem_order(x)), g.identity());
    EXPECT_EQ(g.power(x, -1), g.inv(x));
    for (Element y : g.elements()) EXPECT_EQ(g.commutator(x, y), g.mul(g.mul(x, y), g.mul(g.inv(x), g.inv(y))));
  }
}

TEST(GroupOps, CyclicGroupOfPrimeOrderHasTwoNormalSubgroups) {
  EXPECT_EQ(normal_subgroups(cyclic(7)).size(), 2u);
}

TEST(GroupOps, InvariantsOfSmallGroups) {
  const GroupTable q8 = quaternion8();
  EXPECT_EQ(count_elements_of_order(q8, 2), 1u);
  EXPECT_EQ(center(q8).size(), 2u);
  EXPECT_EQ(derived_subgroup(q8).size(), 2u);
  EXPECT_EQ(abelianization_type(q8), (std::vector<int>{2, 2}));

  const GroupTable s4 = symmetric(4);
  EXPECT_EQ(derived_series_orders(s4), (std::vector<std::size_t>{24, 12, 4, 1}));
  EXPECT_EQ(index_two_subgroups(s4).size(), 1u);
  EXPECT_EQ(center(s4).size(), 1u);

  const GroupTable c8 = cyclic(8);
  EXPECT_EQ(count_elements_of_order(c8, 2), 1u);
  EXPECT_EQ(count_elements_of_order(cyclic(12), 12), 4u);
}

TEST(GroupOps, ConjugacyClassesPartition) {
  for (const GroupTable& g : {symmetric(4), alternating(5), dihedral(6), quaternion8()}) {
    std::size_t total = 0;
    for (std::size_t c = 0; c < g.class_count(); ++c) {
      total += g.class_members(static_cast<int>(c)).size();
      EXPECT_EQ(g.order() % g.class_members(static_cast<int>(c)).size(), 0u);
    }
    EXPECT_EQ(total, g.order());
  }
  EXPECT_EQ(alternating(5).class_count(), 5u);
}

TEST(GroupOps, SubgroupClosureMatchesOracle) {
  const GroupTable g = symmetric(4);
  for (Element a : g.elements())
    for (Element b : {Element{1}, Element{5}, Element{17}}) {
      const std::vector<Element> gens{a, b};
      EXPECT_EQ(subgroup_closure(g, gens).size(), oracle::closure_size(g, gens));
    }
}

TEST(Constructors, NamedGroupsIdentify) {
  EXPECT_EQ(catalog().identify(metacyclic(2, 12, 5)), (GroupId{24, 5}));
  EXPECT_EQ(catalog().identify(metacyclic(2, 8, 3)), (GroupId{16, 8}));
  EXPECT_EQ(catalog().identify(metacyclic(2, 8, 5)), (GroupId{16, 6}));
  EXPECT_EQ(catalog().identify(quaternion8()), (GroupId{8, 4}));
  EXPECT_EQ(catalog().identify(dihedral(4)), (GroupId{8, 3}));
  EXPECT_EQ(catalog().identify(symmetric(4)), (GroupId{24, 12}));
  EXPECT_EQ(catalog().identify(alternating(5)), (GroupId{60, 5}));
  EXPECT_EQ(catalog().identify(direct_product(cyclic(2), alternating(4))), (GroupId{24, 13}));
  EXPECT_EQ(catalog().identify(direct_product(cyclic(3), symmetric(3))), (GroupId{18, 3}));
}

TEST(Constructors, MetacyclicRejectsBadExponent) {
  EXPECT_THROW(metacyclic(2, 8, 2), Error);
}

TEST(Constructors, SemidirectProductWithTrivialActionIsDirect) {
  const GroupTable a = cyclic(2), b = cyclic(3);
  const std::vector<Automorphism> action(2, Automorphism::identity(3));
  EXPECT_EQ(catalog().identify(semidirect_product(a, b, action)), (GroupId{6, 2}));
}

TEST(Constructors, SemidirectProductWithInversionIsDihedral) {
  const GroupTable a = cyclic(2), b = cyclic(5);
  Automorphism inv{std::vector<Element>(5)};
  for (Element x = 0; x < 5; ++x) inv.image[x] = b.inv(x);
  EXPECT_EQ(catalog().identify(semidirect_product(a, b, {Automorphism::identity(5), inv})), (GroupId{10, 1}));
}

TEST(Permutations, GroupFromPermutations) {
  PermGenSet p{4, {{1, 2, 3, 0}, {3, 2, 1, 0}}};
  const GroupTable g = group_from_permutations(p);
  EXPECT_EQ(g.order(), 8u);
  EXPECT_EQ(g.identity(), 0);
  EXPECT_EQ(catalog().identify(g), (GroupId{8, 3}));
}

TEST(Permutations, RejectsNonBijection) {
  PermGenSet p{3, {{0, 0, 1}}};
  EXPECT_THROW(p.validate(), Error);
}

TEST(Permutations, OrderCapEnforced) {
  PermGenSet p{5, {{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}}};
  EXPECT_THROW(group_from_permutations(p, 100), Error);
  EXPECT_EQ(group_from_permutations(p).order(), 120u);
}

TEST(Isomorphism, DistinguishesNonIsomorphicGroupsWithEqualOrder) {
  EXPECT_FALSE(isomorphism_test(quaternion8(), dihedral(4)).has_value());
  EXPECT_FALSE(isomorphism_test(cyclic(4), direct_product(cyclic(2), cyclic(2))).has_value());
  const auto phi = isomorphism_test(direct_product(cyclic(2), cyclic(3)), cyclic(6));
  ASSERT_TRUE(phi.has_value());
  EXPECT_TRUE(is_homomorphic_bijection(direct_product(cyclic(2), cyclic(3)), cyclic(6), *phi));
}

TEST(Isomorphism, AutomorphismGroupOrders) {
  // Frozen from the brute-force oracle.
  EXPECT_EQ(automorphism_group(quaternion8()).size(), 24u);
  EXPECT_EQ(automorphism_group(alternating(4)).size(), 24u);
  EXPECT_EQ(automorphism_group(cyclic(12)).size(), 4u);
}

TEST(Isomorphism, AutomorphismGeneratorsGenerate) {
  const GroupTable g = symmetric(4);
  const auto auts = automorphism_group(g);
  const auto gens = automorphism_generators(g, auts);
  std::set<std::vector<Element>> seen{Automorphism::identity(g.order()).image};
  std::vector<Automorphism> todo{Automorphism::identity(g.order())};
  while (!todo.empty()) {
    const Automorphism a = todo.back();
    todo.pop_back();
    for (const auto& s : gens) {
      const Automorphism b = s * a;
      if (seen.insert(b.image).second) todo.push_back(b);
    }
  }
  EXPECT_EQ(seen.size(), auts.size());
}

TEST(Isomorphism, FingerprintsAreInvariant) {
  EXPECT_EQ(fingerprint(metacyclic(2, 12, 5)), fingerprint(group(24, 5)));
  EXPECT_NE(fingerprint(quaternion8()), fingerprint(dihedral(4)));
}
