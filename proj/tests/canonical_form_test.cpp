#include <chrono>

#include <gtest/gtest.h>

#include "hopfweave/hopfweave.hpp"
#include "oracles.hpp"

namespace hopfweave {
namespace {

PlumbingTree trefoil() { return knot_plumb(unknot(), KnotKind::trefoil, {}, 1); }
PlumbingTree figure_eight() { return knot_plumb(unknot(), KnotKind::figure_eight, {}, 1); }

TEST(CanonicalForm, Unknot) { EXPECT_EQ(canonical_form(unknot()), unknot()); }

// Placing the stabilizing band of the figure-eight side in the middle
// (order 1,3,2) turns its Seifert matrix into the trefoil side's.
TEST(CanonicalForm, TrefoilAndFigureEightStabilizationsMeet) {
    const PlumbingTree left = hopf_plumb(trefoil(), BandSign::negative, {1, 0});
    const PlumbingTree right = hopf_plumb(figure_eight(), BandSign::positive, {1, 0});
    EXPECT_EQ(seifert_matrix(left), (IntMatrix{{-1, 1, 1}, {0, -1, 0}, {0, 0, 1}}));
    EXPECT_EQ(seifert_matrix(reorder(right, {0, 2, 1})), seifert_matrix(left));
    EXPECT_EQ(canonical_form(left), canonical_form(right));
    EXPECT_EQ(canonical_form(left), oracle::canonical_by_permutation(right));
}

// With the coupling on the second band instead, the negative band is a chain
// end on one side and the chain middle on the other; no reordering relates them.
TEST(CanonicalForm, ChainEndAndChainMiddleStayApart) {
    const PlumbingTree left = hopf_plumb(trefoil(), BandSign::negative, {0, 1});
    const PlumbingTree right = hopf_plumb(figure_eight(), BandSign::positive, {0, 1});
    EXPECT_NE(oracle::canonical_by_permutation(left), oracle::canonical_by_permutation(right));
    EXPECT_NE(canonical_form(left), canonical_form(right));
}

TEST(CanonicalForm, MatchesExhaustivePermutationOracle) {
    oracle::Rng rng(31);
    for (int trial = 0; trial < 400; ++trial) {
        const PlumbingTree t = oracle::random_tree(rng, 6, trial % 2 ? 1 : 2);
        ASSERT_EQ(canonical_form(t), oracle::canonical_by_permutation(t));
    }
}

TEST(CanonicalForm, IdempotentAndInvariantUnderAdmissibleReorder) {
    oracle::Rng rng(32);
    for (int trial = 0; trial < 200; ++trial) {
        const PlumbingTree t = oracle::random_tree(rng, 7);
        const PlumbingTree c = canonical_form(t);
        ASSERT_EQ(canonical_form(c), c);
        std::vector<std::size_t> order(t.mu());
        std::iota(order.begin(), order.end(), 0);
        for (int shuffle = 0; shuffle < 20; ++shuffle) {
            std::shuffle(order.begin(), order.end(), rng);
            if (!is_admissible_order(t, order)) continue;
            ASSERT_EQ(canonical_form(reorder(t, order)), c);
        }
    }
}

TEST(CanonicalForm, EqualFormsHaveEqualReports) {
    oracle::Rng rng(33);
    for (int trial = 0; trial < 100; ++trial) {
        const PlumbingTree t = oracle::random_tree(rng, 6);
        ASSERT_EQ(invariants(canonical_form(t)), invariants(t));
    }
}

TEST(CanonicalForm, CapIsEnforced) {
    PlumbingTree t;
    for (int k = 0; k < 4; ++k) t = hopf_plumb(t, BandSign::positive, GluingVector(t.mu()));
    EXPECT_THROW(canonical_form(t, 3), CapExceeded);
    EXPECT_NO_THROW(canonical_form(t, 4));
}

TEST(CanonicalForm, SymmetricTreesAtTheCapStayFast) {
    // Ten identical unlinked bands: 10! orders, all equal.
    PlumbingTree t;
    for (int k = 0; k < 10; ++k) t = hopf_plumb(t, BandSign::negative, GluingVector(t.mu()));
    const auto start = std::chrono::steady_clock::now();
    EXPECT_EQ(canonical_form(t), t);
    EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(2));
}

TEST(Reorder, RejectsInadmissibleOrders) {
    EXPECT_FALSE(is_admissible_order(trefoil(), {1, 0}));
    EXPECT_THROW(reorder(trefoil(), {1, 0}), std::invalid_argument);
    EXPECT_THROW(reorder(trefoil(), {0, 0}), std::invalid_argument);
    EXPECT_TRUE(is_admissible_order(hopf_plumb(hopf_band(BandSign::positive), BandSign::negative, {0}), {1, 0}));
}

}  // namespace
}  // namespace hopfweave
