#include <gtest/gtest.h>

#include <algorithm>

#include "fuzzyasp/oracle.hpp"
#include "generators.hpp"

using namespace fuzzyasp;

TEST(Quadrature, UniformMean) { EXPECT_NEAR(oracle::integrate_density_mean(ifn(0.3, 0.7)), 0.5, 1e-8); }

TEST(Quadrature, RightTrapezoidMean) {
    EXPECT_NEAR(oracle::integrate_density_mean(trfn(0.3, 0.3, 0.5, 0.7)), 0.455, 0.001);
    EXPECT_NEAR(oracle::integrate_density_mean(trfn(0.3, 0.3, 0.5, 0.7)), 41.0 / 90, 1e-10);
}

// Direct evaluation of the normalised integrand for the truncated triangle:
// the density is (1.5 - v) / (1.1 k) on [0.4, 1].
TEST(Quadrature, TruncatedTriangleByHand) {
    const double k = 0.55 - 0.25 / 2.2;
    auto poly = [](double v) { return 1.5 * v * v / 2 - v * v * v / 3; };
    const double mean = (poly(1.0) - poly(0.4)) / (1.1 * k);
    EXPECT_NEAR(oracle::integrate_density_mean(tfn(0.4, 0.4, 1.5)), mean, 1e-10);
}

TEST(Quadrature, PointValueHasNoDensity) {
    EXPECT_THROW(oracle::integrate_density_mean(ifn(0.5, 0.5)), QuadratureFailure);
}

TEST(Quadrature, DensityIntegratesToOne) {
    gen::Engine rng(61);
    for (int n = 0; n < 500; ++n) {
        const FuzzyTruth x = gen::any(rng);
        if (uncertainty_degree(x) < 1e-6) continue;
        EXPECT_NEAR(oracle::integrate_density(x), 1.0, 1e-8);
    }
}

TEST(Sampler, MassEqualsUncertainty) {
    gen::Engine rng(62);
    for (int n = 0; n < 2000; ++n) {
        const FuzzyTruth x = gen::any(rng);
        EXPECT_NEAR(oracle::Sampler(x).total_mass(), uncertainty_degree(x), 1e-12);
    }
}

TEST(Sampler, DrawsStayInSupport) {
    gen::Engine rng(63);
    for (int n = 0; n < 200; ++n) {
        const FuzzyTruth x = gen::any(rng);
        const oracle::Sampler s(x);
        for (int m = 0; m < 200; ++m) {
            const double v = s(rng);
            EXPECT_GE(v, std::max(0.0, x.a()));
            EXPECT_LE(v, std::min(1.0, x.d()));
        }
    }
}

TEST(Sampler, SampleMeanMatchesTruthDegree) {
    gen::Engine rng(64);
    for (const FuzzyTruth& x : {tfn(0.4, 0.4, 1.5), trfn(-2, 0.3, 0.9, 3), tfn(0, 1.0 / 3, 1), ifn(0.3, 0.7)}) {
        const oracle::Sampler s(x);
        double sum = 0;
        const int count = 400000;
        for (int m = 0; m < count; ++m) sum += s(rng);
        EXPECT_NEAR(sum / count, truth_degree(x), 0.002);
    }
}

TEST(ProbLeq, PrintedPairs) {
    const auto up = oracle::prob_leq(ifn(0.3, 0.7), trfn(0.3, 0.5, 0.7, 0.7), 200000);
    EXPECT_NEAR(up.probability, 0.617, 0.01);
    const auto down = oracle::prob_leq(ifn(0.3, 0.7), trfn(0.3, 0.3, 0.5, 0.7), 200000);
    EXPECT_NEAR(down.probability, 0.388, 0.01);
    EXPECT_EQ(up.samples, 200000u);
    EXPECT_GT(up.standard_error, 0.0);
}

TEST(ProbLeq, SelfComparisonIsHalf) {
    const FuzzyTruth x = tfn(0.1, 0.6, 0.9);
    const auto e = oracle::prob_leq(x, x, 200000);
    EXPECT_NEAR(e.probability, 0.5, 3 * e.standard_error);
}

TEST(ProbLeq, EqualMeansGiveHalf) {
    const auto e = oracle::prob_leq(ifn(0.3, 0.7), tfn(0.2, 0.5, 0.8), 200000, 7);
    EXPECT_NEAR(e.probability, 0.5, 3 * e.standard_error);
}

TEST(ProbLeq, DeterministicForSeed) {
    const auto a = oracle::prob_leq(ifn(0.1, 0.4), tfn(0, 0.3, 0.9), 10000, 99);
    const auto b = oracle::prob_leq(ifn(0.1, 0.4), tfn(0, 0.3, 0.9), 10000, 99);
    EXPECT_EQ(a.probability, b.probability);
}

TEST(Closure, CertainTruth) {
    const auto c = oracle::closure_enumerate({certainly_true()}, 1);
    ASSERT_EQ(c.size(), 2u);
    EXPECT_EQ(c[0], ifn(1, 1));
    EXPECT_EQ(c[1], ifn(0, 0));
}

TEST(Closure, IgnoranceYieldsCertainty) {
    const auto c = oracle::closure_enumerate({unknown()}, 1);
    EXPECT_NE(std::find(c.begin(), c.end(), ifn(1, 1)), c.end());
}

TEST(Closure, TumorWeightsAreFinite) {
    const std::vector<FuzzyTruth> weights{tfn(0.4, 0.4, 1.5), tfn(0.1, 0.1, 0.5), ifn(0.6, 1)};
    const auto c = oracle::closure_enumerate(weights, 2);
    EXPECT_GT(c.size(), weights.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j) EXPECT_FALSE(equal(c[i], c[j])) << i << " " << j;
    const auto closed = oracle::closure_enumerate(c, 0);
    EXPECT_EQ(closed.size(), c.size());
}

TEST(Closure, Guards) {
    EXPECT_THROW(oracle::closure_enumerate({unknown()}, 5), ClosureTooLarge);
    EXPECT_THROW(oracle::closure_enumerate({ifn(0.5, 1), tfn(0.1, 0.3, 0.9)}, 3, 100), ClosureTooLarge);
}
