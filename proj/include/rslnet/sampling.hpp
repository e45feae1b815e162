#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rslnet/rng.hpp"

namespace rslnet {

// Mixing density a(q) = (1+c) q^c over q in [0,1]. The (1+c) prefactor
// normalizes the density for every c. c = 0 is the uniform mixture, c = 1
// the linear one.
struct MixingSpec {
    double c;

    explicit MixingSpec(double c_) : c(c_) {
        if (!(c_ >= 0.0 && c_ <= 1.0))
            throw std::invalid_argument("MixingSpec: c must be in [0,1]");
    }
};

// Target degrees with the stopping probabilities that produced them,
// parallel arrays, plus the seed that makes the draw reproducible.
struct DegreeSequence {
    std::vector<std::uint64_t> degrees;
    std::vector<double> stopping_probs;
    std::uint64_t seed = 0;
};

// Inverse CDF of the mixing density: q = u^(1/(1+c)). c = 0 is the
// identity, i.e. uniform stopping probabilities.
inline double stopping_probability_from_uniform(double c, double u) {
    return std::pow(u, 1.0 / (1.0 + c));
}

// Draws q from a(q). u = 0 would map to q = 0 (an infinite-degree node);
// such draws are retried, keeping q in (0,1].
template <typename Rng>
double sample_stopping_probability(const MixingSpec& spec, Rng& rng) {
    for (;;) {
        const double q = stopping_probability_from_uniform(spec.c, uniform01(rng));
        if (q > 0.0) return q;
    }
}

// Shifted-geometric degree by inverse transform:
//
//   K = floor(ln(1-u) / ln(1-q)) + 1,  u ~ U[0,1)
//
// q = 1 short-circuits to K = 1 without touching the logarithm.
template <typename Rng>
std::uint64_t sample_degree(double q, Rng& rng) {
    if (!(q > 0.0 && q <= 1.0))
        throw std::invalid_argument("sample_degree: q must be in (0,1]");
    if (q == 1.0) return 1;
    const double u = uniform01(rng);
    const double r = std::floor(std::log1p(-u) / std::log1p(-q));
    if (!(r < 1.8e19))
        throw std::overflow_error("sample_degree: degree exceeds 64-bit range");
    return static_cast<std::uint64_t>(r) + 1;
}

// Draws n (q, K) pairs, one per node. Node i consumes only its own
// substream (degree_sampling, i): first the stopping probability, then one
// degree. If the total degree is odd the last node redraws both q and K
// from its substream until the sum is even, so every recorded degree is
// still a legitimate draw from the model.
inline DegreeSequence generate_degree_sequence(std::uint64_t n, const MixingSpec& spec,
                                               std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("generate_degree_sequence: n must be >= 2");
    DegreeSequence seq;
    seq.seed = seed;
    seq.degrees.resize(n);
    seq.stopping_probs.resize(n);

    std::uint64_t parity = 0;
    for (std::uint64_t i = 0; i + 1 < n; ++i) {
        auto rng = substream(seed, StreamDomain::degree_sampling, i);
        const double q = sample_stopping_probability(spec, rng);
        const std::uint64_t k = sample_degree(q, rng);
        seq.stopping_probs[i] = q;
        seq.degrees[i] = k;
        parity ^= k & 1;
    }

    auto rng = substream(seed, StreamDomain::degree_sampling, n - 1);
    for (;;) {
        const double q = sample_stopping_probability(spec, rng);
        const std::uint64_t k = sample_degree(q, rng);
        if (((k & 1) ^ parity) == 0) {
            seq.stopping_probs[n - 1] = q;
            seq.degrees[n - 1] = k;
            return seq;
        }
    }
}

}  // namespace rslnet
