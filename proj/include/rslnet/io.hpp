#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rslnet/multigraph.hpp"
#include "rslnet/powerlaw_fit.hpp"

namespace rslnet {

inline constexpr std::string_view kManifestRevision = "rslnet-1";

// Shortest decimal form that round-trips the exact double, so repeated runs
// with the same seed produce byte-identical files.
inline std::string format_double(double value) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- edge list ------------------------------------------------------------
//
// Text format: lines starting with '#' are comments; data lines are
// "u v" with 0-based decimal node ids separated by one space; a self-loop
// is written "i i". The writer adds a "# nodes N" comment so graphs with
// trailing isolated nodes survive a round trip.

inline void write_edge_list(std::ostream& out, const MultiGraph& g) {
    out << "# nodes " << g.num_nodes() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

inline void write_edge_list(const std::filesystem::path& path, const MultiGraph& g) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    write_edge_list(out, g);
    if (!out) throw IoError("write failed: " + path.string());
}

inline MultiGraph read_edge_list(std::istream& in) {
    std::vector<Edge> edges;
    std::uint64_t declared_nodes = 0;
    std::uint64_t max_id = 0;
    bool any = false;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream hdr(line.substr(1));
            std::string word;
            std::uint64_t n = 0;
            if (hdr >> word >> n && word == "nodes") declared_nodes = n;
            continue;
        }
        std::istringstream data(line);
        std::uint64_t u = 0;
        std::uint64_t v = 0;
        if (!(data >> u >> v))
            throw IoError("edge list: malformed line " + std::to_string(lineno));
        edges.push_back(Edge{static_cast<NodeId>(u), static_cast<NodeId>(v)});
        max_id = std::max({max_id, u, v});
        any = true;
    }
    const std::uint64_t n = std::max(declared_nodes, any ? max_id + 1 : 0);
    return MultiGraph(n, std::move(edges));
}

inline MultiGraph read_edge_list(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path.string());
    return read_edge_list(in);
}

// --- degree histogram CSV ---------------------------------------------------
//
// Header "k,count,fraction", ascending k, absent degrees omitted, LF line
// endings.

inline void write_degree_histogram_csv(std::ostream& out,
                                       const std::map<std::uint64_t, DegreeBin>& hist) {
    out << "k,count,fraction\n";
    for (const auto& [k, bin] : hist)
        out << k << ',' << bin.count << ',' << format_double(bin.fraction) << '\n';
}

inline void write_degree_histogram_csv(const std::filesystem::path& path,
                                       const std::map<std::uint64_t, DegreeBin>& hist) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    write_degree_histogram_csv(out, hist);
    if (!out) throw IoError("write failed: " + path.string());
}

inline std::map<std::uint64_t, DegreeBin> read_degree_histogram_csv(std::istream& in) {
    std::map<std::uint64_t, DegreeBin> hist;
    std::string line;
    if (!std::getline(in, line) || line.rfind("k,count", 0) != 0)
        throw IoError("histogram CSV: missing k,count,fraction header");
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream row(line);
        std::uint64_t k = 0;
        DegreeBin bin;
        if (!(row >> k >> bin.count >> bin.fraction))
            throw IoError("histogram CSV: malformed line " + std::to_string(lineno));
        hist[k] = bin;
    }
    return hist;
}

inline std::map<std::uint64_t, DegreeBin> read_degree_histogram_csv(
    const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path.string());
    return read_degree_histogram_csv(in);
}

// Expands a histogram back into the degree multiset it summarizes.
inline std::vector<std::uint64_t> degrees_from_histogram(
    const std::map<std::uint64_t, DegreeBin>& hist) {
    std::vector<std::uint64_t> degrees;
    for (const auto& [k, bin] : hist) degrees.insert(degrees.end(), bin.count, k);
    return degrees;
}

// --- fit result JSON --------------------------------------------------------

inline nlohmann::json fit_result_json(const PowerLawFit& fit, const std::string& input) {
    return nlohmann::json{{"alpha", fit.alpha}, {"kmin", fit.kmin},
                          {"ks", fit.ks},       {"n_tail", fit.n_tail},
                          {"n_total", fit.n_total}, {"input", input}};
}

// --- run manifest -------------------------------------------------------------
//
// Written next to every file-producing run: the subcommand, its full
// parameter set, and the paths produced, enough to regenerate any artifact
// bit for bit.

struct RunManifest {
    std::string subcommand;
    nlohmann::json parameters;
    std::vector<std::string> outputs;

    nlohmann::json to_json() const {
        return nlohmann::json{{"subcommand", subcommand},
                              {"parameters", parameters},
                              {"outputs", outputs},
                              {"spec_revision", kManifestRevision}};
    }
};

inline void write_manifest(const std::filesystem::path& path, const RunManifest& manifest) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out << manifest.to_json().dump(2) << '\n';
    if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace rslnet
