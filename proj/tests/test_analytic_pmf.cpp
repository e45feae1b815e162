#include <gtest/gtest.h>

#include <cmath>

#include "rslnet/analytic_pmf.hpp"
#include "rslnet/quadrature.hpp"

using namespace rslnet;

TEST(PmfBa, KnownValues) {
    EXPECT_DOUBLE_EQ(pmf_ba(2, 2), 0.5);         // 12/(2*3*4)
    EXPECT_DOUBLE_EQ(pmf_ba(2, 1), 0.0);         // below support
    EXPECT_DOUBLE_EQ(pmf_ba(1, 1), 2.0 / 3.0);   // 4/(1*2*3)
    EXPECT_DOUBLE_EQ(pmf_ba(3, 10), 24.0 / (10.0 * 11.0 * 12.0));
}

TEST(PmfBa, RejectsZeroM) {
    EXPECT_THROW(pmf_ba(0, 1), std::invalid_argument);
}

TEST(PmfShiftedGeometric, KnownValues) {
    EXPECT_DOUBLE_EQ(pmf_shifted_geometric(1.0, 1), 1.0);
    EXPECT_DOUBLE_EQ(pmf_shifted_geometric(0.5, 3), 0.125);
    EXPECT_DOUBLE_EQ(pmf_shifted_geometric(0.25, 1), 0.25);
}

TEST(PmfShiftedGeometric, RejectsBadArguments) {
    EXPECT_THROW(pmf_shifted_geometric(0.0, 1), std::invalid_argument);
    EXPECT_THROW(pmf_shifted_geometric(1.5, 1), std::invalid_argument);
    EXPECT_THROW(pmf_shifted_geometric(-0.1, 1), std::invalid_argument);
    EXPECT_THROW(pmf_shifted_geometric(0.5, 0), std::invalid_argument);
}

TEST(PmfUniformMixture, KnownValues) {
    EXPECT_DOUBLE_EQ(pmf_uniform_mixture(1), 0.5);
    EXPECT_DOUBLE_EQ(pmf_uniform_mixture(2), 1.0 / 6.0);
    EXPECT_DOUBLE_EQ(pmf_uniform_mixture(100), 1.0 / 10100.0);
    EXPECT_THROW(pmf_uniform_mixture(0), std::invalid_argument);
}

TEST(PmfLinearMixture, KnownValues) {
    EXPECT_DOUBLE_EQ(pmf_linear_mixture(1), 2.0 / 3.0);
    EXPECT_DOUBLE_EQ(pmf_linear_mixture(2), 1.0 / 6.0);
    // the linear mixture coincides with the BA distribution at m = 1
    EXPECT_DOUBLE_EQ(pmf_linear_mixture(1), pmf_ba(1, 1));
    EXPECT_THROW(pmf_linear_mixture(0), std::invalid_argument);
}

TEST(PmfSublinear, KnownValues) {
    EXPECT_NEAR(pmf_sublinear(0.0, 5), 1.0 / 30.0, 1e-15);
    EXPECT_NEAR(pmf_sublinear(1.0, 2), 1.0 / 6.0, 1e-15);
    // 1.5 * Gamma(2.5) / Gamma(3.5) = 1.5 / 2.5
    EXPECT_NEAR(pmf_sublinear(0.5, 1), 0.6, 1e-15);
}

TEST(PmfSublinear, RejectsBadArguments) {
    EXPECT_THROW(pmf_sublinear(-0.1, 1), std::invalid_argument);
    EXPECT_THROW(pmf_sublinear(1.1, 1), std::invalid_argument);
    EXPECT_THROW(pmf_sublinear(0.5, 0), std::invalid_argument);
}

TEST(PmfSublinear, ReductionIdentities) {
    for (std::uint64_t k = 1; k <= 1000; ++k) {
        EXPECT_NEAR(pmf_sublinear(0.0, k), pmf_uniform_mixture(k), 1e-12) << "k=" << k;
        EXPECT_NEAR(pmf_sublinear(1.0, k), pmf_linear_mixture(k), 1e-12) << "k=" << k;
    }
}

TEST(PmfSublinear, PartialSumsMonotoneAndBounded) {
    for (double c : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        double sum = 0.0;
        for (std::uint64_t k = 1; k <= 1000000; ++k) {
            const double p = pmf_sublinear(c, k);
            ASSERT_GT(p, 0.0);
            sum += p;
            ASSERT_LE(sum, 1.0 + 1e-12) << "c=" << c << " k=" << k;
        }
        // most of the mass must already be accounted for
        EXPECT_GT(sum, 0.99) << "c=" << c;
    }
}

TEST(PmfUniformMixture, TelescopingNormalization) {
    for (std::uint64_t K : {std::uint64_t{10}, std::uint64_t{100}, std::uint64_t{10000}}) {
        double sum = 0.0;
        for (std::uint64_t k = K; k >= 1; --k) sum += pmf_uniform_mixture(k);
        const double expected = 1.0 - 1.0 / static_cast<double>(K + 1);
        EXPECT_NEAR(sum, expected, 1e-12) << "K=" << K;
    }
}

TEST(MixturePmfNumeric, MatchesClosedFormsAtLowK) {
    EXPECT_NEAR(mixture_pmf_numeric(0.0, 1), 0.5, 1e-10);
    EXPECT_NEAR(mixture_pmf_numeric(1.0, 1), 2.0 / 3.0, 1e-10);
    EXPECT_NEAR(mixture_pmf_numeric(0.5, 10), pmf_sublinear(0.5, 10), 1e-8);
}

TEST(MixturePmfNumeric, OracleEquivalenceGrid) {
    for (double c : {0.0, 0.3, 0.5, 0.7, 1.0}) {
        for (std::uint64_t k : {1, 2, 5, 10, 50, 100}) {
            EXPECT_NEAR(pmf_sublinear(c, k), mixture_pmf_numeric(c, k), 1e-8)
                << "c=" << c << " k=" << k;
        }
    }
}

TEST(MixturePmfNumeric, RejectsBadArguments) {
    EXPECT_THROW(mixture_pmf_numeric(-0.5, 1), std::invalid_argument);
    EXPECT_THROW(mixture_pmf_numeric(0.5, 0), std::invalid_argument);
}

TEST(TailExponents, SublinearDecaysAsCPlus2) {
    const std::uint64_t k = 10000;
    for (double c : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const double slope =
            (std::log(pmf_sublinear(c, 2 * k)) - std::log(pmf_sublinear(c, k))) /
            std::log(2.0);
        EXPECT_NEAR(slope, -(c + 2.0), 0.05) << "c=" << c;
    }
}

TEST(TailExponents, BaDecaysAsCube) {
    const std::uint64_t k = 10000;
    const double slope =
        (std::log(pmf_ba(2, 2 * k)) - std::log(pmf_ba(2, k))) / std::log(2.0);
    EXPECT_NEAR(slope, -3.0, 0.05);
}

TEST(PmfModelVariant, DispatchesToEachForm) {
    EXPECT_DOUBLE_EQ(pmf(PmfModel{BaModel{2}}, 2), 0.5);
    EXPECT_DOUBLE_EQ(pmf(PmfModel{ShiftedGeometricModel{0.5}}, 3), 0.125);
    EXPECT_DOUBLE_EQ(pmf(PmfModel{UniformMixtureModel{}}, 1), 0.5);
    EXPECT_DOUBLE_EQ(pmf(PmfModel{LinearMixtureModel{}}, 2), 1.0 / 6.0);
    EXPECT_NEAR(pmf(PmfModel{SublinearModel{0.5}}, 1), 0.6, 1e-15);
}

TEST(Quadrature, ExactOnSmoothIntegrals) {
    const double one = integrate_adaptive([](double x) { return 3.0 * x * x; }, 0.0, 1.0, 1e-12);
    EXPECT_NEAR(one, 1.0, 1e-12);
    const double sine = integrate_adaptive([](double x) { return std::sin(x); }, 0.0, M_PI, 1e-12);
    EXPECT_NEAR(sine, 2.0, 1e-11);
}

TEST(Quadrature, ReportsNonConvergence) {
    // heavily oscillatory integrand with an exhausted interval budget
    auto nasty = [](double x) { return std::sin(1e7 * x); };
    EXPECT_THROW(integrate_adaptive(nasty, 0.0, 1.0, 1e-12, 3), QuadratureError);
}
