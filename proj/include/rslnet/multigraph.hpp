#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rslnet {

using NodeId = std::uint32_t;

// Unordered node pair, stored with u <= v. A self-loop is {i, i}.
struct Edge {
    NodeId u;
    NodeId v;

    friend bool operator==(const Edge&, const Edge&) = default;
};

inline Edge make_edge(NodeId a, NodeId b) {
    return a <= b ? Edge{a, b} : Edge{b, a};
}

// Undirected multigraph: self-loops and parallel edges are allowed, and a
// self-loop contributes 2 to its node's degree. Node ids are 0-based and
// contiguous in [0, n). Immutable once built; degrees are derived from the
// edge list at construction, so sum(degrees) == 2|edges| always holds.
class MultiGraph {
public:
    MultiGraph(std::uint64_t num_nodes, std::vector<Edge> edges)
        : num_nodes_(num_nodes), edges_(std::move(edges)), degrees_(num_nodes, 0) {
        for (const Edge& e : edges_) {
            if (e.u >= num_nodes_ || e.v >= num_nodes_)
                throw std::invalid_argument("MultiGraph: edge endpoint out of range");
            ++degrees_[e.u];
            ++degrees_[e.v];
        }
    }

    std::uint64_t num_nodes() const { return num_nodes_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<std::uint64_t>& degrees() const { return degrees_; }

    friend bool operator==(const MultiGraph&, const MultiGraph&) = default;

private:
    std::uint64_t num_nodes_;
    std::vector<Edge> edges_;
    std::vector<std::uint64_t> degrees_;
};

struct DegreeBin {
    std::uint64_t count = 0;
    double fraction = 0.0;

    friend bool operator==(const DegreeBin&, const DegreeBin&) = default;
};

// Histogram over a degree multiset: degree -> (count, count/n). Fractions
// sum to 1 and counts to n.
inline std::map<std::uint64_t, DegreeBin> degree_histogram(
    std::span<const std::uint64_t> degrees) {
    std::map<std::uint64_t, DegreeBin> hist;
    for (std::uint64_t d : degrees) ++hist[d].count;
    const double n = static_cast<double>(degrees.size());
    for (auto& [d, bin] : hist) bin.fraction = static_cast<double>(bin.count) / n;
    return hist;
}

inline std::map<std::uint64_t, DegreeBin> degree_histogram(const MultiGraph& g) {
    return degree_histogram(std::span<const std::uint64_t>(g.degrees()));
}

}  // namespace rslnet
