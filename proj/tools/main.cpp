#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "rewirekit/cayley.hpp"
#include "rewirekit/edgelist.hpp"
#include "rewirekit/harness.hpp"
#include "rewirekit/rewire.hpp"
#include "rewirekit/spectral.hpp"
#include "rewirekit/synthdata.hpp"

namespace {

using namespace rewirekit;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

int cmd_cayley(int size, int untrimmed_n, const std::string& out) {
    Graph graph;
    if (untrimmed_n > 0) {
        graph = build_cayley(static_cast<std::uint32_t>(untrimmed_n)).graph;
    } else {
        graph = trimmed_cayley(size).graph;
    }
    write_edge_list_file(graph, out);
    std::cout << "wrote " << graph.num_nodes() << " nodes, " << graph.num_edges() << " edges to "
              << out << "\n";
    return 0;
}

int cmd_rewire(const std::string& in, const std::string& method, int d, std::uint64_t seed,
               int layers, const std::string& colour_file, bool include_uncoloured,
               bool exclude_uncoloured, const std::string& out) {
    Graph g = read_edge_list_file(in);
    if (!colour_file.empty()) g = apply_colour_file(g, colour_file);

    RewirePlan plan;
    if (method == "cayley") plan = rewirer_cayley(g, layers, seed);
    else if (method == "aligned-cayley") plan = rewirer_aligned_cayley(g, d, layers);
    else if (method == "distance-d-pairs") plan = rewirer_distance_d_pairs(g, d, layers);
    else if (method == "fully-connected") plan = rewirer_fully_connected(g, layers);
    else if (method == "cayley-clusters")
        plan = rewirer_cayley_clusters(g, layers, include_uncoloured);
    else if (method == "fully-connected-clusters")
        plan = rewirer_fully_connected_clusters(g, layers, !exclude_uncoloured);
    else throw std::runtime_error("unknown method " + method);

    write_edge_list_file(plan.rewired, out);
    std::cout << "wrote rewired graph (" << plan.rewired.num_edges() << " edges) to " << out
              << "\n";
    return 0;
}

int cmd_diagnose(const std::string& in, const std::string& pairs_file) {
    const Graph g = read_edge_list_file(in);
    const bool connected = is_connected(g);

    std::cout << "graph,num_nodes,num_edges,diameter,spectral_gap,avg_commute_time\n";
    std::cout << in << ',' << g.num_nodes() << ',' << g.num_edges() << ',';
    if (connected && g.num_nodes() > 1) {
        std::cout << diameter(g) << ',' << fmt(spectral_gap(g)) << ','
                  << fmt(average_commute_time(g)) << '\n';
    } else {
        std::cout << "nan," << (g.num_nodes() > 1 ? fmt(spectral_gap(g)) : "nan") << ",nan\n";
    }

    if (!pairs_file.empty()) {
        std::ifstream pairs(pairs_file);
        if (!pairs) throw std::runtime_error("cannot open " + pairs_file);
        std::cout << "graph,u,v,effective_resistance,commute_time\n";
        int u = 0, v = 0;
        while (pairs >> u >> v)
            std::cout << in << ',' << u << ',' << v << ',' << fmt(effective_resistance(g, u, v))
                      << ',' << fmt(commute_time(g, u, v)) << '\n';
    }
    return 0;
}

ExperimentConfig load_cli_config(const std::string& config_path, const std::string& dataset,
                                 const std::string& out_dir, int workers, double scale) {
    std::map<std::string, std::string> kv;
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw std::runtime_error("cannot open config " + config_path);
        kv = parse_config_text(in);
    }
    if (scale > 0.0) kv["scale"] = fmt(scale);
    if (workers > 0) kv["workers"] = std::to_string(workers);
    if (!out_dir.empty()) kv["out_dir"] = out_dir;

    std::optional<DatasetKind> kind;
    if (!dataset.empty()) kind = dataset_kind_from_string(dataset);
    return make_config(kv, kind);
}

int cmd_generate(const std::string& config_path, const std::string& dataset,
                 const std::string& out_dir) {
    const ExperimentConfig cfg = load_cli_config(config_path, dataset, out_dir, 0, 0.0);
    if (cfg.out_dir.empty()) throw std::runtime_error("generate: --out is required");
    const Dataset data = generate_config_dataset(cfg);
    write_dataset(data, cfg.out_dir);
    std::cout << "wrote " << data.train.size() << " train and " << data.eval.size()
              << " eval samples to " << cfg.out_dir << "\n";
    return 0;
}

int cmd_sweep(const std::string& config_path, const std::string& dataset,
              const std::string& out_dir, int workers, double scale) {
    const ExperimentConfig cfg = load_cli_config(config_path, dataset, out_dir, workers, scale);
    if (cfg.out_dir.empty()) throw std::runtime_error("sweep: --out is required");

    const SweepResult result = run_sweep(cfg);
    write_sweep_outputs(cfg, result);

    std::cout << "rewirer,c2_over_c1,c3,mean_ratio,sd_ratio\n";
    for (const SummaryRow& row : summarize(result))
        std::cout << row.rewirer << ',' << fmt(row.c2_over_c1) << ',' << fmt(row.c3) << ','
                  << fmt(row.mean_ratio) << ',' << fmt(row.sd_ratio) << '\n';
    std::cout << "outputs in " << cfg.out_dir << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Expander-based graph rewiring toolkit"};
    app.require_subcommand(1);

    // cayley
    auto* cayley = app.add_subcommand("cayley", "Emit a (trimmed) Cayley expander as an edge list");
    int size = 0, untrimmed_n = 0;
    std::string cayley_out;
    cayley->add_option("--size", size, "Trim to this many nodes");
    cayley->add_option("--untrimmed-n", untrimmed_n, "Emit the full Cayley graph for this n");
    cayley->add_option("--out", cayley_out, "Output edge-list file")->required();

    // rewire
    auto* rewire = app.add_subcommand("rewire", "Rewire a base graph");
    std::string rw_in, rw_method, rw_colours, rw_out;
    int rw_d = 5, rw_layers = 5;
    std::uint64_t rw_seed = 0;
    bool rw_include_uncoloured = false, rw_exclude_uncoloured = false;
    rewire->add_option("--in", rw_in, "Input edge-list file")->required();
    rewire
        ->add_option("--method", rw_method,
                     "cayley|aligned-cayley|distance-d-pairs|fully-connected|cayley-clusters|"
                     "fully-connected-clusters")
        ->required();
    rewire->add_option("--d", rw_d, "Target distance for distance-based methods");
    rewire->add_option("--seed", rw_seed, "Seed for random placement");
    rewire->add_option("--layers", rw_layers, "Layer count for the interleave schedule");
    rewire->add_option("--colours", rw_colours, "Side file with 'node colour' lines");
    rewire->add_flag("--include-uncoloured", rw_include_uncoloured,
                     "Give uncoloured nodes their own cayley cluster");
    rewire->add_flag("--exclude-uncoloured", rw_exclude_uncoloured,
                     "Drop the uncoloured clique from fully-connected-clusters");
    rewire->add_option("--out", rw_out, "Output edge-list file")->required();

    // diagnose
    auto* diagnose = app.add_subcommand("diagnose", "Spectral and commute-time diagnostics (CSV)");
    std::string dg_in, dg_pairs;
    diagnose->add_option("--in", dg_in, "Input edge-list file")->required();
    diagnose->add_option("--pairs", dg_pairs, "File of 'u v' pairs for per-pair rows");

    // generate
    auto* generate = app.add_subcommand("generate", "Generate a synthetic regression dataset");
    std::string gen_dataset, gen_config, gen_out;
    generate->add_option("--dataset", gen_dataset, "a or b");
    generate->add_option("--config", gen_config, "Flat key = value config file");
    generate->add_option("--out", gen_out, "Output directory")->required();

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Run a rewirer sweep and summarize MSE ratios");
    std::string sw_dataset, sw_config, sw_out;
    int sw_workers = 0;
    double sw_scale = 0.0;
    sweep->add_option("--dataset", sw_dataset, "a or b");
    sweep->add_option("--config", sw_config, "Flat key = value config file");
    sweep->add_option("--out", sw_out, "Output directory")->required();
    sweep->add_option("--workers", sw_workers, "Concurrent cells (flag beats REWIREKIT_WORKERS)");
    sweep->add_option("--scale", sw_scale, "Scale factor for counts and epochs");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cayley->parsed()) {
            if (size <= 0 && untrimmed_n <= 0)
                throw std::runtime_error("cayley: need --size or --untrimmed-n");
            return cmd_cayley(size, untrimmed_n, cayley_out);
        }
        if (rewire->parsed())
            return cmd_rewire(rw_in, rw_method, rw_d, rw_seed, rw_layers, rw_colours,
                              rw_include_uncoloured, rw_exclude_uncoloured, rw_out);
        if (diagnose->parsed()) return cmd_diagnose(dg_in, dg_pairs);
        if (generate->parsed()) return cmd_generate(gen_config, gen_dataset, gen_out);
        if (sweep->parsed()) return cmd_sweep(sw_config, sw_dataset, sw_out, sw_workers, sw_scale);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
