// rslnet command-line tool: generates scale-free networks (randomly stopped
// linking and Barabasi-Albert), tabulates their analytic degree
// distributions, fits power-law exponents, and checks the BA fixed-point
// identity. All subcommands are deterministic given --seed.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rslnet/analytic_pmf.hpp"
#include "rslnet/ba_bernoulli.hpp"
#include "rslnet/graph_gen.hpp"
#include "rslnet/io.hpp"
#include "rslnet/multigraph.hpp"
#include "rslnet/powerlaw_fit.hpp"
#include "rslnet/sampling.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr double kVerifyBaThreshold = 1e-12;

struct GenerateOptions {
    std::string model;
    std::uint64_t nodes = 0;
    std::optional<double> c;
    std::optional<std::uint64_t> m;
    std::uint64_t seed = 0;
    std::string out;
    std::string hist;
};

void write_histogram_for(const fs::path& path, const rslnet::MultiGraph& graph) {
    rslnet::write_degree_histogram_csv(path, rslnet::degree_histogram(graph));
}

int run_generate(const GenerateOptions& opt) {
    rslnet::MultiGraph graph(0, {});
    json params;
    if (opt.model == "rsl") {
        if (opt.m) throw CLI::ValidationError("generate", "--m is not valid with --model rsl");
        const double c = opt.c.value_or(0.0);
        graph = rslnet::generate_rsl_network(opt.nodes, rslnet::MixingSpec(c), opt.seed);
        params = {{"model", "rsl"}, {"nodes", opt.nodes}, {"c", c}, {"seed", opt.seed}};
    } else {
        if (opt.c) throw CLI::ValidationError("generate", "--c is not valid with --model ba");
        if (!opt.m) throw CLI::ValidationError("generate", "--m is required with --model ba");
        graph = rslnet::generate_ba_network({*opt.m, opt.nodes, opt.seed});
        params = {{"model", "ba"}, {"nodes", opt.nodes}, {"m", *opt.m}, {"seed", opt.seed}};
    }

    rslnet::write_edge_list(fs::path(opt.out), graph);
    rslnet::RunManifest manifest{"generate", params, {opt.out}};
    if (!opt.hist.empty()) {
        write_histogram_for(opt.hist, graph);
        manifest.outputs.push_back(opt.hist);
    }
    rslnet::write_manifest(opt.out + ".manifest.json", manifest);
    std::cout << "wrote " << opt.out << " (" << graph.num_nodes() << " nodes, "
              << graph.edges().size() << " edges)\n";
    return 0;
}

struct PmfOptions {
    std::string model;
    std::optional<std::uint64_t> m;
    std::optional<double> q;
    std::optional<double> c;
    std::uint64_t kmax = 0;
    std::string out;
};

rslnet::PmfModel parse_pmf_model(const PmfOptions& opt) {
    auto require = [&](bool ok, const char* msg) {
        if (!ok) throw CLI::ValidationError("pmf", msg);
    };
    if (opt.model == "ba") {
        require(opt.m.has_value(), "--model ba requires --m");
        require(!opt.q && !opt.c, "--model ba takes only --m");
        return rslnet::BaModel{*opt.m};
    }
    if (opt.model == "geometric") {
        require(opt.q.has_value(), "--model geometric requires --q");
        require(!opt.m && !opt.c, "--model geometric takes only --q");
        return rslnet::ShiftedGeometricModel{*opt.q};
    }
    if (opt.model == "uniform") {
        require(!opt.m && !opt.q && !opt.c, "--model uniform takes no parameter");
        return rslnet::UniformMixtureModel{};
    }
    if (opt.model == "linear") {
        require(!opt.m && !opt.q && !opt.c, "--model linear takes no parameter");
        return rslnet::LinearMixtureModel{};
    }
    require(opt.c.has_value(), "--model sublinear requires --c");
    require(!opt.m && !opt.q, "--model sublinear takes only --c");
    return rslnet::SublinearModel{*opt.c};
}

int run_pmf(const PmfOptions& opt) {
    if (opt.kmax < 1) throw std::invalid_argument("pmf: kmax must be >= 1");
    const rslnet::PmfModel model = parse_pmf_model(opt);

    std::ostringstream csv;
    csv << "k,p\n";
    for (std::uint64_t k = 1; k <= opt.kmax; ++k)
        csv << k << ',' << rslnet::format_double(rslnet::pmf(model, k)) << '\n';

    if (opt.out.empty()) {
        std::cout << csv.str();
        return 0;
    }
    std::ofstream out(opt.out, std::ios::binary);
    if (!out) throw rslnet::IoError("cannot open for writing: " + opt.out);
    out << csv.str();
    json params = {{"model", opt.model}, {"kmax", opt.kmax}};
    if (opt.m) params["m"] = *opt.m;
    if (opt.q) params["q"] = *opt.q;
    if (opt.c) params["c"] = *opt.c;
    rslnet::write_manifest(opt.out + ".manifest.json",
                           rslnet::RunManifest{"pmf", params, {opt.out}});
    return 0;
}

std::vector<std::uint64_t> load_degrees(const fs::path& input) {
    std::ifstream in(input, std::ios::binary);
    if (!in) throw rslnet::IoError("cannot open: " + input.string());
    // Histogram CSVs start with the k,count,fraction header; anything else
    // is treated as an edge list.
    std::string first;
    std::getline(in, first);
    in.seekg(0);
    if (first.rfind("k,count", 0) == 0)
        return rslnet::degrees_from_histogram(rslnet::read_degree_histogram_csv(in));
    return rslnet::read_edge_list(in).degrees();
}

int run_fit(const std::string& input, const std::string& out) {
    const std::vector<std::uint64_t> degrees = load_degrees(input);
    const rslnet::PowerLawFit fit = rslnet::fit_power_law(degrees);
    const json result = rslnet::fit_result_json(fit, input);
    std::cout << result.dump(2) << '\n';
    if (!out.empty()) {
        std::ofstream file(out, std::ios::binary);
        if (!file) throw rslnet::IoError("cannot open for writing: " + out);
        file << result.dump(2) << '\n';
        rslnet::write_manifest(out + ".manifest.json",
                               rslnet::RunManifest{"fit", {{"input", input}}, {out}});
    }
    return 0;
}

int run_verify_ba(std::uint64_t m, const std::string& t_csv, std::uint64_t kmax) {
    std::vector<std::uint64_t> t_values;
    std::istringstream list(t_csv);
    std::string item;
    while (std::getline(list, item, ',')) {
        if (item.empty()) continue;
        t_values.push_back(std::stoull(item));
    }
    const auto report = rslnet::verify_fixed_point(m, t_values, kmax);
    for (std::size_t i = 0; i < report.t_values.size(); ++i)
        std::cout << "t=" << report.t_values[i]
                  << " max_abs_error=" << rslnet::format_double(report.max_abs_error_per_t[i])
                  << '\n';
    const bool ok = report.max_abs_error < kVerifyBaThreshold;
    std::cout << "overall max_abs_error=" << rslnet::format_double(report.max_abs_error)
              << " over k in [" << report.k_min << "," << report.k_max << "]: "
              << (ok ? "OK" : "FAIL") << '\n';
    return ok ? 0 : 2;
}

struct Figure1Network {
    std::string name;
    std::string model;
    double c;        // RSL mixing exponent (ignored for BA)
    std::uint64_t m; // BA links per node (ignored for RSL)
};

int run_figure1(const std::string& out_dir, std::uint64_t seed) {
    constexpr std::uint64_t kNodes = 50000;
    const std::vector<Figure1Network> networks = {
        {"ba_m2", "ba", 0.0, 2},
        {"rsl_c0.0", "rsl", 0.0, 0},
        {"rsl_c0.5", "rsl", 0.5, 0},
        {"rsl_c1.0", "rsl", 1.0, 0},
    };

    fs::create_directories(out_dir);
    rslnet::RunManifest manifest{"figure1", {{"nodes", kNodes}, {"seed", seed}}, {}};
    json summary_rows = json::array();

    std::ostringstream summary_csv;
    summary_csv << "network,model,parameter,seed,alpha,kmin,ks,n_tail,n_total\n";

    std::cout << "network     alpha    kmin  ks\n";
    for (std::size_t i = 0; i < networks.size(); ++i) {
        const auto& net = networks[i];
        const std::uint64_t net_seed = seed + i;  // derived per-network seeds
        const rslnet::MultiGraph graph =
            net.model == "ba"
                ? rslnet::generate_ba_network({net.m, kNodes, net_seed})
                : rslnet::generate_rsl_network(kNodes, rslnet::MixingSpec(net.c), net_seed);

        const fs::path hist_path = fs::path(out_dir) / (net.name + ".csv");
        write_histogram_for(hist_path, graph);

        const rslnet::PowerLawFit fit = rslnet::fit_power_law(graph.degrees());
        const fs::path fit_path = fs::path(out_dir) / (net.name + ".fit.json");
        {
            std::ofstream out(fit_path, std::ios::binary);
            if (!out) throw rslnet::IoError("cannot open for writing: " + fit_path.string());
            out << rslnet::fit_result_json(fit, hist_path.string()).dump(2) << '\n';
        }

        const double parameter = net.model == "ba" ? static_cast<double>(net.m) : net.c;
        summary_csv << net.name << ',' << net.model << ','
                    << rslnet::format_double(parameter) << ',' << net_seed << ','
                    << rslnet::format_double(fit.alpha) << ',' << fit.kmin << ','
                    << rslnet::format_double(fit.ks) << ',' << fit.n_tail << ','
                    << fit.n_total << '\n';
        summary_rows.push_back({{"network", net.name},
                                {"model", net.model},
                                {"parameter", parameter},
                                {"seed", net_seed},
                                {"alpha", fit.alpha},
                                {"kmin", fit.kmin},
                                {"ks", fit.ks}});
        manifest.outputs.push_back(hist_path.string());
        manifest.outputs.push_back(fit_path.string());

        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(3);
        line << net.name;
        for (std::size_t pad = net.name.size(); pad < 12; ++pad) line << ' ';
        line << fit.alpha << "    " << fit.kmin << "   " << fit.ks;
        std::cout << line.str() << '\n';
    }

    const fs::path summary_path = fs::path(out_dir) / "summary.csv";
    {
        std::ofstream out(summary_path, std::ios::binary);
        if (!out) throw rslnet::IoError("cannot open for writing: " + summary_path.string());
        out << summary_csv.str();
    }
    manifest.outputs.push_back(summary_path.string());
    manifest.parameters["networks"] = summary_rows;
    rslnet::write_manifest(fs::path(out_dir) / "manifest.json", manifest);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"scale-free network generation and analysis"};
    app.require_subcommand(1);
    int rc = 0;

    GenerateOptions gen;
    auto* generate = app.add_subcommand("generate", "generate a network and write its edge list");
    generate->add_option("--model", gen.model, "rsl or ba")
        ->required()
        ->check(CLI::IsMember({"rsl", "ba"}));
    generate->add_option("--nodes", gen.nodes, "number of nodes")->required();
    generate->add_option("--c", gen.c, "mixing exponent in [0,1] (rsl)");
    generate->add_option("--m", gen.m, "links per new node (ba)");
    generate->add_option("--seed", gen.seed, "RNG seed")->default_val(0);
    generate->add_option("--out", gen.out, "edge-list output path")->required();
    generate->add_option("--hist", gen.hist, "optional degree-histogram CSV path");
    generate->callback([&] { rc = run_generate(gen); });

    PmfOptions pm;
    auto* pmf = app.add_subcommand("pmf", "tabulate an analytic degree distribution as CSV");
    pmf->add_option("--model", pm.model, "ba | geometric | uniform | linear | sublinear")
        ->required()
        ->check(CLI::IsMember({"ba", "geometric", "uniform", "linear", "sublinear"}));
    pmf->add_option("--m", pm.m, "links per node (ba)");
    pmf->add_option("--q", pm.q, "stopping probability (geometric)");
    pmf->add_option("--c", pm.c, "mixing exponent (sublinear)");
    pmf->add_option("--kmax", pm.kmax, "tabulate k = 1..kmax")->required();
    pmf->add_option("--out", pm.out, "CSV output path (stdout when omitted)");
    pmf->callback([&] { rc = run_pmf(pm); });

    std::string fit_input;
    std::string fit_out;
    auto* fit = app.add_subcommand("fit", "fit a discrete power law to an edge list or histogram");
    fit->add_option("--input", fit_input, "edge list or histogram CSV")->required();
    fit->add_option("--out", fit_out, "JSON output path (stdout only when omitted)");
    fit->callback([&] { rc = run_fit(fit_input, fit_out); });

    std::uint64_t vb_m = 0;
    std::uint64_t vb_kmax = 0;
    std::string vb_t = "100,10000,1000000";
    auto* verify = app.add_subcommand("verify-ba",
                                      "check the one-step Bernoulli update against the BA pmf");
    verify->add_option("--m", vb_m, "links per node")->required();
    verify->add_option("--t", vb_t, "comma-separated timesteps")->capture_default_str();
    verify->add_option("--kmax", vb_kmax, "largest degree checked")->required();
    verify->callback([&] { rc = run_verify_ba(vb_m, vb_t, vb_kmax); });

    std::string fig_dir;
    std::uint64_t fig_seed = 0;
    auto* figure1 = app.add_subcommand(
        "figure1", "generate the four 50,000-node networks and their fitted exponents");
    figure1->add_option("--out-dir", fig_dir, "output directory")->required();
    figure1->add_option("--seed", fig_seed, "base seed; networks use seed, seed+1, seed+2, seed+3")
        ->default_val(0);
    figure1->callback([&] { rc = run_figure1(fig_dir, fig_seed); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return rc;
}
