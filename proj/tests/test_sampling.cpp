#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "rslnet/analytic_pmf.hpp"
#include "rslnet/multigraph.hpp"
#include "rslnet/sampling.hpp"

using namespace rslnet;

TEST(MixingSpecType, ValidatesRange) {
    EXPECT_NO_THROW(MixingSpec(0.0));
    EXPECT_NO_THROW(MixingSpec(1.0));
    EXPECT_THROW(MixingSpec(-0.01), std::invalid_argument);
    EXPECT_THROW(MixingSpec(1.01), std::invalid_argument);
}

TEST(StoppingProbability, InverseCdfKnownPoints) {
    EXPECT_DOUBLE_EQ(stopping_probability_from_uniform(0.0, 0.5), 0.5);
    EXPECT_DOUBLE_EQ(stopping_probability_from_uniform(1.0, 0.25), 0.5);  // q^2 = u
    EXPECT_DOUBLE_EQ(stopping_probability_from_uniform(0.0, 1.0), 1.0);
    EXPECT_DOUBLE_EQ(stopping_probability_from_uniform(0.7, 1.0), 1.0);
}

TEST(StoppingProbability, DrawsLieInHalfOpenUnitInterval) {
    auto rng = substream(7, StreamDomain::degree_sampling, 0);
    const MixingSpec spec(0.3);
    for (int i = 0; i < 100000; ++i) {
        const double q = sample_stopping_probability(spec, rng);
        ASSERT_GT(q, 0.0);
        ASSERT_LE(q, 1.0);
    }
}

// Empirical CDF of q-draws against the analytic CDF q^(1+c) at c = 1.
TEST(StoppingProbability, MatchesMixingCdfAtCOne) {
    const std::size_t n = 1000000;
    std::vector<double> draws(n);
    const MixingSpec spec(1.0);
    for (std::size_t i = 0; i < n; ++i) {
        auto rng = substream(42, StreamDomain::degree_sampling, i);
        draws[i] = sample_stopping_probability(spec, rng);
    }
    std::sort(draws.begin(), draws.end());
    double ks = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double cdf = draws[i] * draws[i];
        const double hi = static_cast<double>(i + 1) / n;
        const double lo = static_cast<double>(i) / n;
        ks = std::max({ks, std::abs(hi - cdf), std::abs(cdf - lo)});
    }
    EXPECT_LT(ks, 0.002);
}

TEST(SampleDegree, QOneAlwaysReturnsOne) {
    auto rng = substream(1, StreamDomain::degree_sampling, 0);
    for (int i = 0; i < 1000; ++i) EXPECT_EQ(sample_degree(1.0, rng), 1u);
}

TEST(SampleDegree, RejectsBadQ) {
    auto rng = substream(1, StreamDomain::degree_sampling, 0);
    EXPECT_THROW(sample_degree(0.0, rng), std::invalid_argument);
    EXPECT_THROW(sample_degree(-0.5, rng), std::invalid_argument);
    EXPECT_THROW(sample_degree(1.5, rng), std::invalid_argument);
}

TEST(SampleDegree, MonteCarloAgainstGeometricPmf) {
    auto rng = substream(99, StreamDomain::degree_sampling, 0);
    const std::size_t n = 1000000;
    std::size_t ones = 0;
    for (std::size_t i = 0; i < n; ++i) ones += sample_degree(0.5, rng) == 1;
    EXPECT_NEAR(static_cast<double>(ones) / n, 0.5, 0.002);
}

TEST(SampleDegree, MonteCarloMeanIsOneOverQ) {
    auto rng = substream(123, StreamDomain::degree_sampling, 0);
    const std::size_t n = 1000000;
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += static_cast<double>(sample_degree(0.2, rng));
    EXPECT_NEAR(sum / n, 5.0, 0.02);
}

TEST(GenerateDegreeSequence, RejectsTinyN) {
    EXPECT_THROW(generate_degree_sequence(0, MixingSpec(0.0), 1), std::invalid_argument);
    EXPECT_THROW(generate_degree_sequence(1, MixingSpec(0.0), 1), std::invalid_argument);
}

TEST(GenerateDegreeSequence, DeterministicAndEven) {
    const auto a = generate_degree_sequence(2, MixingSpec(0.0), 7);
    const auto b = generate_degree_sequence(2, MixingSpec(0.0), 7);
    EXPECT_EQ(a.degrees, b.degrees);
    EXPECT_EQ(a.stopping_probs, b.stopping_probs);
    EXPECT_EQ(a.seed, 7u);
    const std::uint64_t sum = a.degrees[0] + a.degrees[1];
    EXPECT_EQ(sum % 2, 0u);
}

TEST(GenerateDegreeSequence, ParityAndSupportAcrossSeeds) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const std::uint64_t n = 2 + seed % 37;
        const double c = static_cast<double>(seed % 5) / 4.0;
        const auto seq = generate_degree_sequence(n, MixingSpec(c), seed);
        ASSERT_EQ(seq.degrees.size(), n);
        ASSERT_EQ(seq.stopping_probs.size(), n);
        std::uint64_t sum = 0;
        for (std::uint64_t k : seq.degrees) {
            ASSERT_GE(k, 1u);
            sum += k;
        }
        ASSERT_EQ(sum % 2, 0u) << "seed=" << seed;
        for (double q : seq.stopping_probs) {
            ASSERT_GT(q, 0.0);
            ASSERT_LE(q, 1.0);
        }
    }
}

TEST(GenerateDegreeSequence, DegreeOneFractionUniformMixing) {
    const auto seq = generate_degree_sequence(1000000, MixingSpec(0.0), 2024);
    const auto hist = degree_histogram(std::span<const std::uint64_t>(seq.degrees));
    EXPECT_NEAR(hist.at(1).fraction, 0.5, 0.002);
}

TEST(GenerateDegreeSequence, DegreeOneFractionLinearMixing) {
    const auto seq = generate_degree_sequence(1000000, MixingSpec(1.0), 2025);
    const auto hist = degree_histogram(std::span<const std::uint64_t>(seq.degrees));
    EXPECT_NEAR(hist.at(1).fraction, 2.0 / 3.0, 0.002);
}

// Full histogram agreement with the analytic mixture over k in [1, 20].
TEST(GenerateDegreeSequence, HistogramMatchesAnalyticPmf) {
    for (double c : {0.0, 0.5, 1.0}) {
        const auto seq = generate_degree_sequence(1000000, MixingSpec(c), 31337);
        const auto hist = degree_histogram(std::span<const std::uint64_t>(seq.degrees));
        double worst = 0.0;
        for (std::uint64_t k = 1; k <= 20; ++k) {
            const auto it = hist.find(k);
            const double empirical = it == hist.end() ? 0.0 : it->second.fraction;
            worst = std::max(worst, std::abs(empirical - pmf_sublinear(c, k)));
        }
        EXPECT_LT(worst, 0.003) << "c=" << c;
    }
}
