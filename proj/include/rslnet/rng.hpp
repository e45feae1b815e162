#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace rslnet {

// SplitMix64 (Steele, Lea & Flood 2014): 64-bit Weyl sequence plus an
// avalanching finalizer. Satisfies UniformRandomBitGenerator.
//
// Every random draw in this library flows through this generator, so any
// output is a pure function of the 64-bit seed and does not depend on the
// standard library's distribution internals.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t state) noexcept : state_(state) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept {
        return std::numeric_limits<std::uint64_t>::max();
    }

    result_type operator()() noexcept {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

// SplitMix64 finalizer, used on its own to derive substream states.
inline std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Stream domains keep the draws of unrelated algorithms disjoint even when
// they share one user-facing seed.
enum class StreamDomain : std::uint64_t {
    degree_sampling = 1,  // one substream per node index
    stub_pairing = 2,     // configuration-model permutation, index 0
    ba_attachment = 3,    // preferential-attachment targets, index 0
};

// Substream layout (stable contract, part of the output format):
//
//   state0 = mix64(mix64(seed + GAMMA*domain) + GAMMA*(index + 1))
//
// with GAMMA = 0x9E3779B97F4A7C15. Node i of a degree-sequence draw uses
// (degree_sampling, i); graph-construction streams use index 0.
inline SplitMix64 substream(std::uint64_t seed, StreamDomain domain,
                            std::uint64_t index) noexcept {
    constexpr std::uint64_t gamma = 0x9E3779B97F4A7C15ULL;
    const std::uint64_t s = mix64(seed + gamma * static_cast<std::uint64_t>(domain));
    return SplitMix64(mix64(s + gamma * (index + 1)));
}

// Uniform double in [0, 1): the top 53 bits of one 64-bit draw.
template <typename Rng>
double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Unbiased integer in [0, bound) by rejection. bound must be nonzero.
template <typename Rng>
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t r = rng();
        if (r >= threshold) return r % bound;
    }
}

// Fisher-Yates shuffle on top of uniform_below, so the permutation depends
// only on the draw sequence above, not on std::shuffle internals.
template <typename T, typename Rng>
void shuffle(std::vector<T>& items, Rng& rng) {
    for (std::uint64_t i = items.size(); i > 1; --i) {
        const std::uint64_t j = uniform_below(rng, i);
        std::swap(items[i - 1], items[j]);
    }
}

}  // namespace rslnet
