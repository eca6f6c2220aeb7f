#include <cstdlib>

#include <gtest/gtest.h>

#include "hopfweave/hopfweave.hpp"
#include "oracles.hpp"

namespace hopfweave {
namespace {

const ManifoldModel s3 = ManifoldModel::sphere();
const ManifoldModel s1xs2{"S1xS2", {0}};
const ManifoldModel lens3{"L(3,1)", {3}};
const ManifoldModel mixed{"S1xS2#RP3", {2, 0}};

PlaneFieldClass make(const ManifoldModel& m, std::vector<Integer> c, std::vector<Integer> e, long long framing) {
    return {m, H1Element(m, std::move(c)), H1Element(m, std::move(e)), framing};
}

PlaneFieldClass random_class(oracle::Rng& rng, const ManifoldModel& m, bool zero_c = false) {
    std::vector<Integer> c(m.rank());
    std::vector<Integer> e(m.rank());
    for (std::size_t i = 0; i < m.rank(); ++i) {
        if (!zero_c) c[i] = oracle::uniform(rng, -5, 5);
        e[i] = oracle::uniform(rng, -4, 4);
    }
    return {m, H1Element(m, c), H1Element(m, e), oracle::uniform(rng, -20, 20)};
}

TEST(ManifoldModel, Validation) {
    EXPECT_TRUE(s3.is_homology_sphere());
    EXPECT_FALSE(s1xs2.is_homology_sphere());
    EXPECT_NO_THROW(ManifoldModel("ok", {2, 4, 0}));
    EXPECT_THROW(ManifoldModel("bad", {2, 3}), std::invalid_argument);
    EXPECT_THROW(ManifoldModel("bad", {1}), std::invalid_argument);
    EXPECT_THROW(ManifoldModel("bad", {-2}), std::invalid_argument);
}

TEST(H1Element, ReducesTorsionCoefficients) {
    EXPECT_EQ(H1Element(lens3, {7}).coefficients(), (std::vector<Integer>{1}));
    EXPECT_EQ(H1Element(lens3, {-1}).coefficients(), (std::vector<Integer>{2}));
    EXPECT_EQ(H1Element(s1xs2, {-7}).coefficients(), (std::vector<Integer>{-7}));
    EXPECT_THROW(H1Element(lens3, {1, 2}), std::invalid_argument);
}

TEST(ObstructionClass, Examples) {
    const PlaneFieldClass xi = make(lens3, {1}, {0}, 0);
    const PlaneFieldClass eta = make(lens3, {2}, {0}, 5);
    EXPECT_TRUE(obstruction_class(xi, xi).is_zero());
    EXPECT_EQ(obstruction_class(xi, eta).coefficients(), (std::vector<Integer>{1}));
    EXPECT_TRUE(obstruction_class(PlaneFieldClass::reference(s3), make(s3, {}, {}, 9)).is_zero());
    EXPECT_THROW(obstruction_class(xi, PlaneFieldClass::reference(s3)), std::invalid_argument);
}

TEST(ObstructionClass, CocycleIdentities) {
    oracle::Rng rng(41);
    for (const ManifoldModel& m : {s3, s1xs2, lens3, mixed}) {
        for (int trial = 0; trial < 100; ++trial) {
            const PlaneFieldClass a = random_class(rng, m);
            const PlaneFieldClass b = random_class(rng, m);
            const PlaneFieldClass c = random_class(rng, m);
            ASSERT_TRUE(obstruction_class(a, a).is_zero());
            ASSERT_TRUE(H1Element::sum(m, obstruction_class(a, b), obstruction_class(b, a)).is_zero());
            ASSERT_TRUE(H1Element::sum(m, H1Element::sum(m, obstruction_class(a, b), obstruction_class(b, c)),
                                       obstruction_class(c, a))
                            .is_zero());
        }
    }
}

TEST(EulerDivisibility, Examples) {
    EXPECT_EQ(euler_divisibility(PlaneFieldClass::reference(s3)), 0);
    EXPECT_EQ(euler_divisibility(make(s1xs2, {0}, {4}, 0)), 4);
    EXPECT_EQ(euler_divisibility(make(s1xs2, {0}, {-6}, 0)), 6);
    EXPECT_EQ(euler_divisibility(make(s1xs2, {0}, {0}, 0)), 0);
    EXPECT_EQ(euler_divisibility(make(mixed, {0, 0}, {1, 0}, 0)), 0);  // torsion part ignored
    EXPECT_EQ(euler_divisibility(make(ManifoldModel("T3", {0, 0, 0}), {0, 0, 0}, {4, 6, 0}, 0)), 2);
}

TEST(RelativeFraming, Examples) {
    const PlaneFieldClass standard = standard_sphere_class();
    const PlaneFieldClass h_minus_book = sphere_book(hopf_band(BandSign::negative)).field;
    EXPECT_EQ(relative_framing(standard, h_minus_book).value, 1);
    EXPECT_EQ(relative_framing(standard, standard).value, 0);
    const PlaneFieldClass a = make(s1xs2, {0}, {4}, 2);
    const PlaneFieldClass b = make(s1xs2, {0}, {4}, 7);
    EXPECT_EQ(relative_framing(a, b), (FramingResidue{1, 4}));
    EXPECT_EQ(relative_framing(b, a), (FramingResidue{3, 4}));
    EXPECT_EQ(relative_framing(make(s3, {}, {}, 5), make(s3, {}, {}, 2)), (FramingResidue{-3, 0}));
    EXPECT_THROW(relative_framing(make(s1xs2, {0}, {0}, 0), make(s1xs2, {1}, {0}, 0)), std::invalid_argument);
}

TEST(ActPi3, GroupActionAndOrbits) {
    oracle::Rng rng(42);
    for (const ManifoldModel& m : {s3, s1xs2, lens3, mixed}) {
        for (int trial = 0; trial < 100; ++trial) {
            const PlaneFieldClass xi = random_class(rng, m);
            const Integer j = oracle::uniform(rng, -30, 30);
            const Integer k = oracle::uniform(rng, -30, 30);
            ASSERT_EQ(act_pi3(0, xi), xi);
            ASSERT_EQ(act_pi3(j, act_pi3(k, xi)), act_pi3(j + k, xi));
            const Integer div = euler_divisibility(xi);
            const bool divides = div == 0 ? k == 0 : k % div == 0;
            ASSERT_EQ(act_pi3(k, xi).homotopic_to(xi), divides) << "k=" << k << " |xi|=" << div;
        }
    }
}

TEST(ActPi3, FullTurnFixesClass) {
    const PlaneFieldClass xi = make(s1xs2, {0}, {4}, 3);
    EXPECT_TRUE(act_pi3(4, xi).homotopic_to(xi));
    EXPECT_FALSE(act_pi3(2, xi).homotopic_to(xi));
    EXPECT_EQ(act_pi3(1, standard_sphere_class()), sphere_book(hopf_band(BandSign::negative)).field);
}

TEST(PlumbEffect, Rules) {
    oracle::Rng rng(43);
    for (const ManifoldModel& m : {s3, s1xs2, lens3, mixed}) {
        for (int trial = 0; trial < 50; ++trial) {
            const PlaneFieldClass xi = random_class(rng, m);
            ASSERT_EQ(plumb_effect(xi, BandSign::positive), xi);
            ASSERT_EQ(plumb_effect(xi, BandSign::negative).framing(), xi.framing() + 1);
            ASSERT_EQ(plumb_effect(plumb_effect(xi, BandSign::negative), BandSign::negative).framing(),
                      xi.framing() + 2);
            const FramingResidue d = relative_framing(xi, plumb_effect(xi, BandSign::negative));
            const Integer div = euler_divisibility(xi);
            ASSERT_EQ(d.value, div == 1 ? Integer(0) : Integer(1));
        }
    }
}

TEST(OpenBook, SphereFramingCountsNegativeBands) {
    oracle::Rng rng(44);
    for (int trial = 0; trial < 100; ++trial) {
        const PlumbingTree t = oracle::random_tree(rng, 8);
        ASSERT_EQ(sphere_book(t).field.framing(), Integer(t.lambda()));
    }
}

TEST(StableEquivalence, SphereAlwaysEquivalent) {
    const auto t = knot_plumb(unknot(), KnotKind::trefoil, {}, 1);
    const auto e = knot_plumb(unknot(), KnotKind::figure_eight, {}, 1);
    const EquivalenceVerdict v = stable_equivalence(sphere_book(t), sphere_book(e));
    EXPECT_TRUE(v.equivalent);
    ASSERT_TRUE(v.hminus_budget);
    EXPECT_EQ(*v.hminus_budget, 3);

    oracle::Rng rng(45);
    for (int trial = 0; trial < 100; ++trial) {
        const PlumbingTree a = oracle::random_tree(rng, 6);
        const PlumbingTree b = oracle::random_tree(rng, 6);
        const EquivalenceVerdict ab = stable_equivalence(sphere_book(a), sphere_book(b));
        const EquivalenceVerdict ba = stable_equivalence(sphere_book(b), sphere_book(a));
        ASSERT_TRUE(ab.equivalent);
        ASSERT_EQ(ab, ba);
        const long long gap = static_cast<long long>(a.lambda()) - static_cast<long long>(b.lambda());
        ASSERT_EQ(*ab.hminus_budget, 2 + std::llabs(gap));
    }
}

TEST(StableEquivalence, DistinctObstructionClassesAreNotEquivalent) {
    const OpenBookClass a = open_book(hopf_band(BandSign::positive), make(s1xs2, {0}, {0}, 0));
    const OpenBookClass b = open_book(hopf_band(BandSign::positive), make(s1xs2, {1}, {0}, 0));
    const EquivalenceVerdict v = stable_equivalence(a, b);
    EXPECT_FALSE(v.equivalent);
    EXPECT_FALSE(v.hminus_budget);
}

TEST(StableEquivalence, FiniteDivisibilityUsesCheaperDirection) {
    // |xi| = 4, framings 0 and 3: forward residue 3, backward 1.
    const OpenBookClass a = open_book(unknot(), make(s1xs2, {0}, {4}, 0));
    const OpenBookClass b = open_book(unknot(), make(s1xs2, {0}, {4}, 3));
    EXPECT_EQ(*stable_equivalence(a, b).hminus_budget, 3);
    EXPECT_EQ(*stable_equivalence(b, a).hminus_budget, 3);
    const OpenBookClass c = open_book(unknot(), make(s1xs2, {0}, {4}, 8));
    EXPECT_EQ(*stable_equivalence(a, c).hminus_budget, 2);
}

TEST(StableEquivalence, SymmetricOnRandomModels) {
    oracle::Rng rng(46);
    for (const ManifoldModel& m : {s3, s1xs2, lens3, mixed}) {
        for (int trial = 0; trial < 100; ++trial) {
            PlaneFieldClass xa = random_class(rng, m, trial % 2 == 0);
            PlaneFieldClass xb = random_class(rng, m, trial % 2 == 0);
            xb = PlaneFieldClass(m, xb.c(), xa.euler(), xb.framing());
            const OpenBookClass a = open_book(oracle::random_tree(rng, 4), xa);
            const OpenBookClass b = open_book(oracle::random_tree(rng, 4), xb);
            const EquivalenceVerdict ab = stable_equivalence(a, b);
            ASSERT_EQ(ab, stable_equivalence(b, a));
            ASSERT_EQ(ab.equivalent, obstruction_class(a.field, b.field).is_zero());
        }
    }
}

TEST(StableEquivalence, RejectsMismatchedManifolds) {
    EXPECT_THROW(stable_equivalence(sphere_book(unknot()), open_book(unknot(), PlaneFieldClass::reference(lens3))),
                 std::invalid_argument);
}

TEST(Pontryagin, SumsTwists) {
    EXPECT_EQ(pontryagin_class(std::vector<Integer>{}), 0);
    EXPECT_EQ(pontryagin_class(std::vector<Integer>{7}), 7);
    EXPECT_EQ(pontryagin_class(std::vector<Integer>{2, 3}), 5);
    EXPECT_EQ(pontryagin_class(std::vector<Integer>{2, -3}), -1);
}

}  // namespace
}  // namespace hopfweave
