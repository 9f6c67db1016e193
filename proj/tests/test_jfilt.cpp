#include <gtest/gtest.h>

#include "curvedetect/error.hpp"
#include "curvedetect/homology.hpp"
#include "curvedetect/jfilt.hpp"
#include "support.hpp"

using namespace cdt;

namespace {

const Genus g1{1};
const Genus g2{2};

CurveSpec spec(Genus g, const std::string& text) { return parse_curve_spec(g, text); }

const FreeAutomorphism& twist(Genus g, const std::string& name) { return builtin_table(g).at(name).twist; }

FreeAutomorphism sep_commutator() {
  const CurveResolver r(builtin_table(g2));
  return commutator(r.resolve(spec(g2, "Sep1"))->twist, r.resolve(spec(g2, "Sep1 @ [C3]"))->twist);
}

}  // namespace

TEST(Jfilt, MembershipExamples) {
  for (int k = 1; k <= 4; ++k) EXPECT_TRUE(in_Mk(FreeAutomorphism::identity(g2), k));
  EXPECT_TRUE(in_Mk(twist(g2, "Sep1"), 1));
  EXPECT_TRUE(in_Mk(twist(g2, "Sep1"), 2));
  EXPECT_FALSE(in_Mk(twist(g2, "Sep1"), 3));
  EXPECT_FALSE(in_Mk(twist(g2, "C1"), 1));
  EXPECT_THROW(in_Mk(twist(g2, "C1"), 0), InvalidArgument);
}

TEST(Jfilt, SeparatingTwistLeadingTerm) {
  // t(x1) x1^-1 = [d, x1] with d = [x1, x2]; its degree-3 part is
  // (X1X2 - X2X1)X1 - X1(X1X2 - X2X1) = 2 X1X2X1 - X2X1X1 - X1X1X2.
  const auto terms = johnson_leading_term(twist(g2, "Sep1"), 2);
  ASSERT_EQ(terms.size(), 4u);
  const TruncatedSeries::Terms expected{{Monomial::from_factors(g2, {1, 2, 1}), 2},
                                        {Monomial::from_factors(g2, {2, 1, 1}), -1},
                                        {Monomial::from_factors(g2, {1, 1, 2}), -1}};
  EXPECT_EQ(terms[0], expected);
  // x3, x4 lie outside the subsurface and are fixed.
  EXPECT_TRUE(terms[2].empty());
  EXPECT_TRUE(terms[3].empty());

  for (const auto& t : johnson_leading_term(FreeAutomorphism::identity(g2), 3)) EXPECT_TRUE(t.empty());
  EXPECT_THROW(johnson_leading_term(twist(g2, "C1"), 1), InvalidArgument);
}

TEST(Jfilt, DepthExamples) {
  EXPECT_EQ(johnson_depth(FreeAutomorphism::identity(g2), 3).kind, JFDepth::Kind::Identity);
  EXPECT_EQ(johnson_depth(twist(g2, "C1"), 3).kind, JFDepth::Kind::NotInM1);
  EXPECT_EQ(johnson_depth(twist(g2, "Sep1"), 3), (JFDepth{JFDepth::Kind::Exact, 2}));
  EXPECT_EQ(johnson_depth(sep_commutator(), 3), (JFDepth{JFDepth::Kind::AtLeast, 3}));
  EXPECT_EQ(to_string(johnson_depth(twist(g2, "Sep1"), 3)), "Exact(2)");
}

TEST(Jfilt, DepthIsMonotoneInCap) {
  const auto f = sep_commutator();
  EXPECT_EQ(johnson_depth(f, 2), (JFDepth{JFDepth::Kind::AtLeast, 2}));
  EXPECT_EQ(johnson_depth(f, 4), (JFDepth{JFDepth::Kind::AtLeast, 4}));
  EXPECT_EQ(johnson_depth(twist(g2, "Sep1"), 5), (JFDepth{JFDepth::Kind::Exact, 2}));
}

TEST(Jfilt, IjfExamples) {
  const CurveResolver r1(builtin_table(g1));
  const CurveResolver r2(builtin_table(g2));
  EXPECT_EQ(ijf(spec(g2, "C1"), spec(g2, "C3"), 3, r2).kind, JFValue::Kind::Zero);
  EXPECT_EQ(ijf(spec(g1, "C1"), spec(g1, "C2"), 3, r1).kind, JFValue::Kind::One);
  EXPECT_EQ(ijf(spec(g2, "Sep1"), spec(g2, "Sep1 @ [C3]"), 4, r2), (JFValue{JFValue::Kind::AtLeast, 5}));
  EXPECT_EQ(to_string(JFValue{JFValue::Kind::AtLeast, 5}), "AtLeast(5)");
}

TEST(Jfilt, ClassifyExamples) {
  const CurveResolver r1(builtin_table(g1));
  auto p = classify_pair(spec(g1, "C1"), spec(g1, "C2"), 3, r1);
  EXPECT_FALSE(p.commuting);
  EXPECT_TRUE(p.braid);
  EXPECT_EQ(std::abs(p.algebraic), 1);
  EXPECT_EQ(p.ijf.kind, JFValue::Kind::One);
  EXPECT_TRUE(consistency_violations(p).empty());

  const CurveResolver r2(builtin_table(g2));
  p = classify_pair(spec(g2, "C1"), spec(g2, "C3"), 3, r2);
  EXPECT_TRUE(p.commuting);
  EXPECT_EQ(p.algebraic, 0);
  EXPECT_EQ(p.ijf.kind, JFValue::Kind::Zero);

  p = classify_pair(spec(g2, "Sep1"), spec(g2, "Sep1 @ [C3]"), 4, r2);
  EXPECT_FALSE(p.commuting);
  EXPECT_EQ(p.algebraic, 0);
  EXPECT_EQ(p.ijf, (JFValue{JFValue::Kind::AtLeast, 5}));
  EXPECT_TRUE(consistency_violations(p).empty());

  EXPECT_THROW(classify_pair(spec(g1, "C1"), spec(g2, "C1"), 3, r2), GenusMismatch);
}

TEST(Jfilt, ViolationsAreReported) {
  PairReport bad{spec(g2, "C1"), spec(g2, "C2"), true, false, 1, {JFValue::Kind::One, 1}, 3};
  EXPECT_EQ(consistency_violations(bad).size(), 1u);
  bad = {spec(g2, "C1"), spec(g2, "C2"), false, true, 0, {JFValue::Kind::ExactGE2, 2}, 3};
  EXPECT_EQ(consistency_violations(bad).size(), 1u);
}

TEST(Jfilt, RandomPairsAreConsistent) {
  const auto& table = builtin_table(g2);
  const CurveResolver r(table);
  Rng rng(61);
  for (int k = 0; k < 100; ++k) {
    const CurveSpec a = random_curve_spec(table, rng, 4);
    const CurveSpec b = random_curve_spec(table, rng, 4);
    const PairReport p = classify_pair(a, b, 3, r);
    EXPECT_TRUE(consistency_violations(p).empty()) << to_string(a) << " | " << to_string(b);
    EXPECT_EQ(ijf(b, a, 3, r), p.ijf);
  }
}

TEST(Jfilt, ConjugationInvariance) {
  const auto& table = builtin_table(g2);
  const CurveResolver r(table);
  Rng rng(62);
  for (int k = 0; k < 30; ++k) {
    const CurveSpec a = random_curve_spec(table, rng, 2);
    const CurveSpec b = random_curve_spec(table, rng, 2);
    const auto g = random_mapping_class_word(table, rng, 1, 3);
    const CurveSpec ga{g2, a.base, g + a.conjugator};
    const CurveSpec gb{g2, b.base, g + b.conjugator};
    EXPECT_EQ(ijf(ga, gb, 3, r), ijf(a, b, 3, r));

    const FreeAutomorphism f = random_torelli(r, rng, 2, 2);
    const FreeAutomorphism h = evaluate(g, table);
    EXPECT_EQ(johnson_depth(conjugate(f, h), 3), johnson_depth(f, 3));
  }
}

TEST(Jfilt, MoritaInclusion) {
  const CurveResolver r(builtin_table(g2));
  const auto& sep = twist(g2, "Sep1");
  EXPECT_TRUE(morita_check(sep, sep, 2, 2, 4));
  EXPECT_TRUE(morita_check(sep, r.resolve(spec(g2, "Sep1 @ [C3]"))->twist, 2, 2, 4));
  Rng rng(63);
  for (int k = 0; k < 10; ++k) {
    const FreeAutomorphism f = random_torelli(r, rng, 2, 2);
    const FreeAutomorphism g = r.resolve(random_curve_spec(builtin_table(g2), rng, 2, true))->twist;
    EXPECT_TRUE(morita_check(f, g, 1, 2, 3));
  }
  EXPECT_THROW(morita_check(twist(g2, "C1"), sep, 1, 2, 3), InvalidArgument);
  EXPECT_THROW(morita_check(sep, sep, 2, 2, 3), InvalidArgument);
}

TEST(Jfilt, DistinguishingWitness) {
  const CurveResolver r2(builtin_table(g2));
  const auto check = [](const CurveResolver& r, const CurveSpec& a, const CurveSpec& b) {
    const auto d = distinguishing_witness(a, b, 100, r);
    ASSERT_TRUE(d.has_value());
    const auto& td = r.resolve(*d)->twist;
    EXPECT_NE(commutes(r.resolve(a)->twist, td), commutes(r.resolve(b)->twist, td));
  };
  check(r2, spec(g2, "C1"), spec(g2, "C3"));
  const CurveResolver r1(builtin_table(g1));
  check(r1, spec(g1, "C1"), spec(g1, "C2"));
  EXPECT_THROW(distinguishing_witness(spec(g1, "C1"), spec(g1, "C1 @ [C1]"), 10, r1), InvalidArgument);
  EXPECT_FALSE(distinguishing_witness(spec(g2, "C1"), spec(g2, "C3"), 0, r2).has_value());
}

TEST(Jfilt, NonCentralElementsMoveSeparatingCurves) {
  const CurveResolver r(builtin_table(g2));
  EXPECT_TRUE(fact5_instance(twist(g2, "Delta"), 50, r).fixes_all_sampled());
  EXPECT_TRUE(fact5_instance(FreeAutomorphism::identity(g2), 20, r).fixes_all_sampled());
  const auto v = fact5_instance(twist(g2, "C1"), 50, r);
  ASSERT_FALSE(v.fixes_all_sampled());
  EXPECT_FALSE(commutes(twist(g2, "C1"), r.resolve(*v.moved)->twist));
  const CurveResolver r1(builtin_table(g1));
  EXPECT_THROW(fact5_instance(twist(g1, "C1"), 10, r1), InvalidArgument);
}

TEST(Jfilt, NestedSeparatingCommutators) {
  const CurveResolver r(builtin_table(g2));
  const auto rep = run_corollary(r, 4);
  ASSERT_EQ(rep.rows.size(), 2u);
  for (const auto& row : rep.rows) {
    EXPECT_TRUE(row.nontrivial);
    EXPECT_EQ(row.certified_level, 4);
  }
  EXPECT_EQ(rep.witnesses, (std::vector<int>{1, 1, 1, 1}));
  EXPECT_TRUE(rep.finite_level_blind);
  EXPECT_TRUE(in_Mk(sep_commutator(), 4));

  const auto small = run_corollary(r, 1);
  EXPECT_TRUE(small.rows.empty());
  EXPECT_FALSE(small.note.empty());
  EXPECT_THROW(run_corollary(CurveResolver(builtin_table(g1)), 4), InvalidArgument);
}

TEST(Jfilt, BoundingPairMapHasDepthOne) {
  // (t1 t2 t3)^4 = t_d t_d' for the two boundary curves of a neighbourhood of
  // C1 u C2 u C3; at genus 2 one of them is C5, so t_C5^2 (t1 t2 t3)^-4 is a
  // bounding pair map, which the Johnson homomorphism does not kill.
  const auto& table = builtin_table(g2);
  const FreeAutomorphism p = power(evaluate(parse_mapping_class_word("C1 C2 C3"), table), 4);
  const FreeAutomorphism& t5 = table.at("C5").twist;
  ASSERT_TRUE(commutes(p, t5));
  const FreeAutomorphism bp = compose(power(t5, 2), p.inverse());
  EXPECT_TRUE(homology_action(bp).is_identity());
  EXPECT_EQ(johnson_depth(bp, 3), (JFDepth{JFDepth::Kind::Exact, 1}));
}
