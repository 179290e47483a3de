#include <gtest/gtest.h>

#include "fuzzyasp/format.hpp"
#include "fuzzyasp/program.hpp"
#include "fuzzyasp/truthspace.hpp"
#include "generators.hpp"

using namespace fuzzyasp;

TEST(FuzzyTruth, DefaultIsFullIgnorance) {
    const FuzzyTruth x;
    EXPECT_EQ(x, ifn(0, 1));
    EXPECT_EQ(x.shape(), Shape::interval);
    EXPECT_TRUE(x.restricted());
}

TEST(FuzzyTruth, ShapeIsDerivedFromParameters) {
    EXPECT_EQ(trfn(0.2, 0.2, 0.7, 0.7).shape(), Shape::interval);
    EXPECT_EQ(trfn(0.2, 0.5, 0.5, 0.7).shape(), Shape::triangular);
    EXPECT_EQ(trfn(0.2, 0.4, 0.5, 0.7).shape(), Shape::trapezoidal);
    EXPECT_EQ(tfn(0.3, 0.3, 0.3).shape(), Shape::interval);
    EXPECT_EQ(tfn(0, 1.0 / 3, 1), trfn(0, 1.0 / 3, 1.0 / 3, 1));
}

TEST(FuzzyTruth, RejectsUnorderedParameters) {
    EXPECT_THROW(trfn(0.5, 0.4, 0.6, 0.7), OrderViolation);
    EXPECT_THROW(ifn(0.8, 0.2), OrderViolation);
    EXPECT_THROW(tfn(0.1, 0.5, 0.4), OrderViolation);
    EXPECT_THROW(trfn(0.1, std::nan(""), 0.5, 0.6), OrderViolation);
}

TEST(FuzzyTruth, RejectsCoreOutsideUnitInterval) {
    EXPECT_THROW(ifn(-0.1, 0.5), CoreOutOfRange);
    EXPECT_THROW(tfn(0.2, 1.2, 1.5), CoreOutOfRange);
    EXPECT_THROW(trfn(-0.5, -0.1, 0.5, 0.6), CoreOutOfRange);
}

TEST(FuzzyTruth, TruncationFlag) {
    const FuzzyTruth x = tfn(0.4, 0.4, 1.5);
    EXPECT_TRUE(x.truncated());
    EXPECT_FALSE(x.restricted());
    EXPECT_TRUE(trfn(-0.2, 0.1, 0.3, 0.9).truncated());
    EXPECT_FALSE(trfn(0, 0.1, 0.3, 1).truncated());
}

TEST(Membership, Trapezoid) {
    const FuzzyTruth x = trfn(0.2, 0.4, 0.6, 1.0);
    EXPECT_DOUBLE_EQ(membership(x, 0.1), 0.0);
    EXPECT_DOUBLE_EQ(membership(x, 0.3), 0.5);
    EXPECT_DOUBLE_EQ(membership(x, 0.5), 1.0);
    EXPECT_DOUBLE_EQ(membership(x, 0.8), 0.5);
    EXPECT_DOUBLE_EQ(membership(x, 1.0), 0.0);
}

TEST(Membership, DegenerateSlopesTakePlateauValue) {
    const FuzzyTruth x = ifn(0.3, 0.7);
    EXPECT_DOUBLE_EQ(membership(x, 0.3), 1.0);
    EXPECT_DOUBLE_EQ(membership(x, 0.7), 1.0);
    EXPECT_DOUBLE_EQ(membership(x, 0.29), 0.0);
    EXPECT_DOUBLE_EQ(membership(ifn(0.5, 0.5), 0.5), 1.0);
}

TEST(Membership, TruncatedIsZeroOutsideUnitInterval) {
    const FuzzyTruth x = tfn(0.4, 0.4, 1.5);
    EXPECT_DOUBLE_EQ(membership(x, 1.2), 0.0);
    EXPECT_NEAR(membership(x, 1.0), 0.5 / 1.1, 1e-15);
    EXPECT_DOUBLE_EQ(membership(x, -0.1), 0.0);
}

TEST(AlphaCut, Examples) {
    const FuzzyTruth x = trfn(0.2, 0.4, 0.6, 1.0);
    const AlphaCut bottom = alpha_cut(x, 0.0);
    EXPECT_DOUBLE_EQ(bottom.lower, 0.2);
    EXPECT_DOUBLE_EQ(bottom.upper, 1.0);
    const AlphaCut top = alpha_cut(x, 1.0);
    EXPECT_DOUBLE_EQ(top.lower, 0.4);
    EXPECT_DOUBLE_EQ(top.upper, 0.6);
    const AlphaCut mid = alpha_cut(x, 0.5);
    EXPECT_DOUBLE_EQ(mid.lower, 0.3);
    EXPECT_DOUBLE_EQ(mid.upper, 0.8);
    EXPECT_DOUBLE_EQ(mid.alpha, 0.5);
}

TEST(AlphaCut, RejectsAlphaOutsideUnitInterval) {
    EXPECT_THROW(alpha_cut(unknown(), -0.01), AlphaOutOfRange);
    EXPECT_THROW(alpha_cut(unknown(), 1.5), AlphaOutOfRange);
    EXPECT_THROW(alpha_cut(unknown(), std::nan("")), AlphaOutOfRange);
}

TEST(AlphaCut, IntervalCutsAreConstant) {
    for (double alpha : {0.0, 0.25, 1.0}) {
        const AlphaCut cut = alpha_cut(ifn(0.3, 0.7), alpha);
        EXPECT_DOUBLE_EQ(cut.lower, 0.3);
        EXPECT_DOUBLE_EQ(cut.upper, 0.7);
    }
}

TEST(Equal, ComparesParametersWithinTolerance) {
    EXPECT_TRUE(equal(ifn(0.3, 0.7), trfn(0.3, 0.3 + 1e-12, 0.7, 0.7)));
    EXPECT_FALSE(equal(ifn(0.3, 0.7), ifn(0.3, 0.71)));
    EXPECT_TRUE(equal(ifn(0.3, 0.7), ifn(0.3, 0.71), 0.02));
}

TEST(FormatNumber, ShortestRoundTrip) {
    EXPECT_EQ(format_number(0.1), "0.1");
    EXPECT_EQ(format_number(1.0), "1");
    EXPECT_EQ(format_number(-0.0), "0");
    EXPECT_EQ(format_number(1.0 / 3), "0.3333333333333333");
}

TEST(Render, UsesDerivedShape) {
    EXPECT_EQ(render(ifn(0.6, 1)), "ifn(0.6,1)");
    EXPECT_EQ(render(tfn(0.4, 0.4, 1.5)), "tfn(0.4,0.4,1.5)");
    EXPECT_EQ(render(trfn(0.1, 0.2, 0.3, 0.4)), "trfn(0.1,0.2,0.3,0.4)");
    EXPECT_EQ(render_quadruple(ifn(0.6, 1)), "trfn(0.6,0.6,1,1)");
}

// Membership is convex: every point between two points of the support is at
// least as high as the lower of the two.
TEST(TruthspaceProperty, MembershipIsConvex) {
    gen::Engine rng(11);
    for (int n = 0; n < 2000; ++n) {
        const FuzzyTruth x = gen::any(rng);
        const double lo = std::max(0.0, x.a()), hi = std::min(1.0, x.d());
        if (!(hi > lo)) continue;
        const double u = gen::uniform(rng, lo, hi), v = gen::uniform(rng, lo, hi);
        const double w = gen::uniform(rng);
        const double mid = u + w * (v - u);
        EXPECT_GE(membership(x, mid) + 1e-12, std::min(membership(x, u), membership(x, v)));
    }
}

TEST(TruthspaceProperty, AlphaCutsAreNested) {
    gen::Engine rng(12);
    for (int n = 0; n < 2000; ++n) {
        const FuzzyTruth x = gen::any(rng);
        double p = gen::uniform(rng), q = gen::uniform(rng);
        if (p > q) std::swap(p, q);
        const AlphaCut low = alpha_cut(x, p), high = alpha_cut(x, q);
        EXPECT_LE(low.lower, high.lower + 1e-15);
        EXPECT_GE(low.upper + 1e-15, high.upper);
        EXPECT_LE(high.lower, high.upper);
        EXPECT_NEAR(alpha_cut(x, 0).lower, x.a(), 0);
        EXPECT_NEAR(alpha_cut(x, 1).upper, x.c(), 0);
    }
}

TEST(TruthspaceProperty, AlphaCutBoundsHaveMembershipAlpha) {
    gen::Engine rng(13);
    for (int n = 0; n < 2000; ++n) {
        const FuzzyTruth x = gen::restricted(rng);
        const double alpha = gen::uniform(rng, 0.01, 0.99);
        const AlphaCut cut = alpha_cut(x, alpha);
        if (x.b() > x.a()) {
            EXPECT_NEAR(membership(x, cut.lower), alpha, 1e-9);
        }
        if (x.d() > x.c()) {
            EXPECT_NEAR(membership(x, cut.upper), alpha, 1e-9);
        }
    }
}

TEST(TruthspaceProperty, RenderParseRoundTrip) {
    gen::Engine rng(14);
    for (int n = 0; n < 5000; ++n) {
        const FuzzyTruth x = gen::any(rng);
        EXPECT_EQ(parse_fuzzy(render(x)), x) << render(x);
        EXPECT_EQ(parse_fuzzy(render_quadruple(x)), x);
    }
}
