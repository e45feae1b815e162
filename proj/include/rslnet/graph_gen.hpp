#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "rslnet/multigraph.hpp"
#include "rslnet/rng.hpp"
#include "rslnet/sampling.hpp"

namespace rslnet {

struct BAParams {
    std::uint64_t m = 1;  // links added per arriving node
    std::uint64_t n = 2;  // final node count, must be >= m+1
    std::uint64_t seed = 0;
};

// Attachment pool where node i appears once per unit of degree; uniform
// slot sampling is therefore proportional to current degree.
class DegreePool {
public:
    void add(NodeId node, std::uint64_t multiplicity = 1) {
        slots_.insert(slots_.end(), multiplicity, node);
    }

    template <typename Rng>
    NodeId sample(Rng& rng) const {
        return slots_[uniform_below(rng, slots_.size())];
    }

    std::uint64_t total() const { return slots_.size(); }

private:
    std::vector<NodeId> slots_;
};

// Configuration model: one stub per unit of degree, a uniform random
// permutation of the stub list, consecutive pairs become edges. Every stub
// is used exactly once, so output degrees equal the input exactly.
inline MultiGraph configuration_model(std::span<const std::uint64_t> degrees,
                                      std::uint64_t seed) {
    if (degrees.size() > std::numeric_limits<NodeId>::max())
        throw std::invalid_argument("configuration_model: too many nodes");
    std::uint64_t total = 0;
    for (std::uint64_t d : degrees) total += d;
    if (total % 2 != 0)
        throw std::invalid_argument("configuration_model: degree sum must be even");

    std::vector<NodeId> stubs;
    stubs.reserve(total);
    for (std::uint64_t i = 0; i < degrees.size(); ++i)
        stubs.insert(stubs.end(), degrees[i], static_cast<NodeId>(i));

    auto rng = substream(seed, StreamDomain::stub_pairing, 0);
    shuffle(stubs, rng);

    std::vector<Edge> edges;
    edges.reserve(total / 2);
    for (std::uint64_t i = 0; i < total; i += 2)
        edges.push_back(make_edge(stubs[i], stubs[i + 1]));
    return MultiGraph(degrees.size(), std::move(edges));
}

inline MultiGraph configuration_model(const DegreeSequence& seq, std::uint64_t seed) {
    return configuration_model(std::span<const std::uint64_t>(seq.degrees), seed);
}

// Randomly stopped linking: degree sequence from the geometric mixture,
// then configuration-model stub pairing.
inline MultiGraph generate_rsl_network(std::uint64_t n, const MixingSpec& spec,
                                       std::uint64_t seed) {
    return configuration_model(generate_degree_sequence(n, spec, seed), seed);
}

// Growth with preferential attachment. Starts from the complete simple
// graph on m+1 nodes (every seed degree is m, so the attachment pool is
// never empty). Each subsequent node adds m links one at a time; the
// source stub joins the pool before the target draw, so the arriving
// node's partial degree takes part and self-loops and duplicate links can
// occur. Degrees update after every link.
inline MultiGraph generate_ba_network(const BAParams& params) {
    if (params.m < 1)
        throw std::invalid_argument("generate_ba_network: m must be >= 1");
    if (params.n <= params.m)
        throw std::invalid_argument("generate_ba_network: n must be >= m+1");
    if (params.n > std::numeric_limits<NodeId>::max())
        throw std::invalid_argument("generate_ba_network: too many nodes");

    const std::uint64_t m = params.m;
    const std::uint64_t n = params.n;

    std::vector<Edge> edges;
    edges.reserve(m * (n - m - 1) + m * (m + 1) / 2);
    DegreePool pool;
    for (std::uint64_t i = 0; i <= m; ++i) {
        for (std::uint64_t j = i + 1; j <= m; ++j)
            edges.push_back(Edge{static_cast<NodeId>(i), static_cast<NodeId>(j)});
        pool.add(static_cast<NodeId>(i), m);
    }

    auto rng = substream(params.seed, StreamDomain::ba_attachment, 0);
    for (std::uint64_t v = m + 1; v < n; ++v) {
        for (std::uint64_t link = 0; link < m; ++link) {
            pool.add(static_cast<NodeId>(v));
            const NodeId target = pool.sample(rng);
            edges.push_back(make_edge(static_cast<NodeId>(v), target));
            pool.add(target);
        }
    }
    return MultiGraph(n, std::move(edges));
}

}  // namespace rslnet
