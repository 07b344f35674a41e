#include <gtest/gtest.h>

#include "oracles.hpp"
#include "prodquot/classify.hpp"
#include "prodquot/constructors.hpp"
#include "prodquot/error.hpp"
#include "prodquot/freeness.hpp"
#include "prodquot/generating_vector.hpp"
#include "prodquot/group_ops.hpp"
#include "prodquot/signature.hpp"
#include "test_support.hpp"

using namespace prodquot;
using testing_support::catalog;
using testing_support::group;

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(1, -3), Rational(-1, 3));
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 2) * Rational(2, 3), Rational(1, 3));
  EXPECT_EQ(Rational(1, 2) / Rational(1, 4), Rational(2));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_THROW(Rational(1, 0), Error);
}

TEST(Signature, ThetaAndAlpha) {
  EXPECT_EQ(theta({2, 3, 7}), Rational(1, 42));
  EXPECT_EQ(alpha({2, 3, 7}), Rational(84));
  EXPECT_EQ(alpha({2, 4, 12}), Rational(12));
  EXPECT_EQ(alpha({2, 2, 2, 2, 2, 2}), Rational(2));
  EXPECT_THROW(alpha({2, 3, 6}), Error);
  EXPECT_THROW(alpha({2, 2, 2, 2}), Error);
}

TEST(Signature, RiemannHurwitz) {
  EXPECT_EQ(rh_genus(0, 24, {2, 4, 12}), 3);
  EXPECT_EQ(rh_genus(1, 24, {2, 2}), 13);
  EXPECT_EQ(rh_genus(1, 16, {2}), 5);
  EXPECT_EQ(rh_genus(0, 168, {2, 3, 7}), 3);
  try {
    rh_genus(0, 10, {2, 3, 7});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::non_integral_genus);
  }
}

TEST(Signature, SurfaceInvariants) {
  const auto s = surface_invariants(13, 3, 24);
  EXPECT_EQ(s.chi, 1);
  EXPECT_EQ(s.K2, 8);
  EXPECT_THROW(surface_invariants(4, 3, 5), Error);
}

TEST(Signature, PeriodFormatting) {
  EXPECT_EQ(format_periods({2, 4, 12}), "2,4,12");
  EXPECT_EQ(format_periods_compact({2, 2, 4, 4}), "2^2,4^2");
  EXPECT_EQ(parse_periods("2^2,4^2"), (std::vector<int>{2, 2, 4, 4}));
  EXPECT_EQ(parse_periods("3, 6, 6"), (std::vector<int>{3, 6, 6}));
  EXPECT_THROW(parse_periods("2,x"), Error);
  EXPECT_EQ((BranchSignature{0, {2, 4, 12}}).to_string(), "(0|2,4,12)");
}

TEST(Signature, AdmissibleTuples) {
  const auto t = enumerate_admissible_tuples(84);
  ASSERT_EQ(t.size(), 30u);
  EXPECT_EQ(to_string(t.front()), "(2,3,7)_84");
  EXPECT_EQ(to_string(t.back()), "(2,2,2,2,2,2)_2");
  for (const auto& x : t) {
    EXPECT_EQ(alpha(x.m), Rational(x.alpha));
    for (int p : x.m) EXPECT_EQ(x.alpha % p, 0);
  }
  EXPECT_EQ(enumerate_admissible_tuples(40).size(), 28u);
  EXPECT_TRUE(enumerate_admissible_tuples(1).empty());
}

TEST(GeneratingVectors, CountsMatchBruteForce) {
  // Values frozen from oracle::count_genus0 / count_genus1.
  EXPECT_EQ(all_generating_vectors(group(24, 5), {0, {2, 4, 12}}).size(), 24u);
  EXPECT_EQ(all_generating_vectors(group(60, 5), {0, {2, 5, 5}}).size(), 120u);
  EXPECT_EQ(all_generating_vectors(group(24, 12), {0, {3, 4, 4}}).size(), 24u);
  EXPECT_EQ(all_generating_vectors(group(8, 3), {1, {2, 2}}).size(), 192u);
  EXPECT_EQ(all_generating_vectors(group(12, 3), {1, {2}}).size(), 96u);
  EXPECT_EQ(all_generating_vectors(group(6, 1), {1, {3}}).size(), 18u);
}

TEST(GeneratingVectors, EveryVectorIsValid) {
  const GroupTable g = group(24, 12);
  for (const auto& v : all_generating_vectors(g, {0, {2, 3, 8}})) EXPECT_TRUE(is_generating_vector(g, v));
  for (const auto& v : all_generating_vectors(g, {1, {2}})) {
    EXPECT_TRUE(is_generating_vector(g, v));
    EXPECT_EQ(long_relation_product(g, v), g.identity());
  }
}

TEST(GeneratingVectors, ReducedSearchMeetsEveryConjugacyClassOfVectors) {
  const GroupTable g = group(24, 12);
  const BranchSignature sig{0, {3, 4, 4}};
  std::set<std::vector<Element>> reduced;
  enumerate_generating_vectors(g, sig, true, [&](const GeneratingVector& v) {
    reduced.insert(v.branch);
    return true;
  });
  for (const auto& v : all_generating_vectors(g, sig)) {
    bool hit = false;
    for (Element c = 0; c < g.order() && !hit; ++c) {
      std::vector<Element> w;
      for (Element x : v.branch) w.push_back(g.conjugate(c, x));
      hit = reduced.contains(w);
    }
    EXPECT_TRUE(hit);
  }
}

TEST(GeneratingVectors, ExistenceExamples) {
  EXPECT_TRUE(find_generating_vector(group(24, 5), {0, {2, 4, 12}}).has_value());
  EXPECT_FALSE(find_generating_vector(group(24, 6), {0, {2, 4, 12}}).has_value());
  EXPECT_FALSE(find_generating_vector(cyclic(12), {1, {2}}).has_value());
  EXPECT_TRUE(find_generating_vector(group(32, 6), {1, {2}}).has_value());
}

TEST(GeneratingVectors, StabilizerUnionMatchesDirectComputation) {
  const GroupTable g = group(24, 12);
  const auto v = find_generating_vector(g, {0, {3, 4, 4}});
  ASSERT_TRUE(v.has_value());
  ElementSet direct(g.order());
  for (Element s : g.elements())
    for (Element b : v->branch) {
      const Element c = g.conjugate(s, b);
      for (int k = 0; k < g.elem_order(c); ++k) direct.insert(g.power(c, k));
    }
  EXPECT_EQ(stabilizer_union(g, *v), direct);
  EXPECT_TRUE(stabilizer_union(g, *v).contains(g.identity()));
  std::size_t classes_size = 0;
  stabilizer_classes(g, *v).for_each([&](Element c) { classes_size += g.class_members(c).size(); });
  EXPECT_EQ(classes_size, direct.size());
}

namespace {

// D(2,12,5): element a*12 + b is y^b x^a.
struct D2125 {
  GroupTable g = metacyclic(2, 12, 5);
  Element x = 12, y = 1;
  Element yinv() const { return g.inv(y); }
};

}  // namespace

TEST(Freeness, ConditionUWitnessForD2125) {
  const D2125 d;
  const auto& g = d.g;
  const Element xy2 = g.mul(d.x, g.mul(d.y, d.y));
  GeneratingVector v{{0, {2, 4, 12}}, {d.x, g.mul(d.x, d.yinv()), d.y}, {}};
  GeneratingVector w{{1, {2, 2}}, {xy2, xy2}, {d.y, d.y}};
  ASSERT_TRUE(is_generating_vector(g, v));
  ASSERT_TRUE(is_generating_vector(g, w));
  EXPECT_TRUE(check_condition_U(g, v, w));
  // Same vector on both sides always fails.
  GeneratingVector w2{{1, {2, 2}}, {d.x, d.x}, {d.y, d.y}};
  if (is_generating_vector(g, w2)) {
    EXPECT_FALSE(check_condition_U(g, v, w2));
  }
}

TEST(Freeness, MixedConditionsForD283) {
  const GroupTable g = metacyclic(2, 8, 3);
  const Element x = 8, y = 1, y2 = g.mul(y, y);
  ElementSet h = subgroup_closure(g, std::vector<Element>{x, y2});
  ASSERT_EQ(h.size(), 8u);
  EXPECT_TRUE(is_nonsplit_extension(g, h));
  GeneratingVector w{{1, {2, 2}}, {x, x}, {y2, y2}};
  EXPECT_TRUE(check_M1(g, h, w));
  EXPECT_TRUE(check_M2(g, h, w));
  // <y> is cyclic of index 2 but x lies outside it, so the extension splits.
  EXPECT_FALSE(is_nonsplit_extension(g, subgroup_closure(g, std::vector<Element>{y})));
}

TEST(Freeness, AbelianGroupsFailM1) {
  const GroupTable g = direct_product(cyclic(2), cyclic(8));
  for (const auto& h : index_two_subgroups(g)) {
    const Subgroup sg = induced_subgroup(g, h);
    for (const auto& w : all_generating_vectors(sg.group, {1, {2, 2}})) {
      GeneratingVector wg = w;
      for (auto& e : wg.branch) e = sg.embedding[e];
      for (auto& e : wg.handles) e = sg.embedding[e];
      EXPECT_FALSE(check_M1(g, h, wg));
    }
  }
}

TEST(Classify, CaseData) {
  EXPECT_EQ(unmixed_case(4).k, 3);
  EXPECT_EQ(unmixed_case(5).alpha_cap, 48);
  EXPECT_THROW(unmixed_case(6), Error);
  EXPECT_EQ(mixed_cases().size(), 3u);
}

TEST(Classify, EvaluateUnmixedSingleCandidate) {
  const auto c = unmixed_case(3);
  const auto r = evaluate_unmixed(group(24, 5), {24, 5}, {2, 4, 12}, c);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->g_C, 13);
  EXPECT_EQ(r->g_F, 3);
  EXPECT_EQ(r->dimension, 2);
  EXPECT_TRUE(check_condition_U(group(24, 5), *r->witness_v, r->witness_w));
  EXPECT_FALSE(evaluate_unmixed(group(24, 6), {24, 6}, {2, 4, 12}, c).has_value());
}

TEST(Classify, RecordsSatisfyInvariantIdentities) {
  for (int gf : {3, 4, 5}) {
    const auto result = classify_unmixed(gf, catalog());
    EXPECT_TRUE(result.exhaustive());
    for (const auto& r : result.records) {
      EXPECT_EQ(r.K2, 8 * r.chi);
      EXPECT_EQ(r.chi, 1);
      EXPECT_EQ(static_cast<std::int64_t>(r.group_id.order), static_cast<std::int64_t>(r.g_C - 1) * (r.g_F - 1));
      const GroupTable g = catalog().build_group(r.group_id);
      EXPECT_TRUE(is_generating_vector(g, *r.witness_v));
      EXPECT_TRUE(is_generating_vector(g, r.witness_w));
      EXPECT_TRUE(check_condition_U(g, *r.witness_v, r.witness_w));
    }
    EXPECT_TRUE(std::is_sorted(result.records.begin(), result.records.end(), record_less));
  }
}

TEST(Classify, MixedWitnessesSatisfyConditions) {
  const auto result = classify_mixed(catalog());
  ASSERT_EQ(result.records.size(), 3u);
  for (const auto& r : result.records) {
    const GroupTable g = catalog().build_group(r.group_id);
    ElementSet h(g.order());
    for (Element x : r.subgroup_members) h.insert(x);
    EXPECT_TRUE(is_nonsplit_extension(g, h));
    EXPECT_TRUE(check_M1(g, h, r.witness_w));
    EXPECT_TRUE(check_M2(g, h, r.witness_w));
    EXPECT_EQ(r.K2, 8 * r.chi);
    EXPECT_EQ(static_cast<std::int64_t>(r.group_id.order), static_cast<std::int64_t>(r.g_C - 1) * (r.g_C - 1));
  }
}

TEST(Classify, PruningDoesNotChangeMixedResult) {
  ClassifyOptions opts;
  opts.deriv2_prune = false;
  const auto a = classify_mixed(catalog());
  const auto b = classify_mixed(catalog(), opts);
  ASSERT_EQ(a.records.size(), b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    EXPECT_EQ(a.records[i].group_id, b.records[i].group_id);
    EXPECT_EQ(a.records[i].subgroup_id, b.records[i].subgroup_id);
  }
}
