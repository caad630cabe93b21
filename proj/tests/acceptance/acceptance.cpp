// Acceptance suite: one check per numbered criterion, each printing a
// single PASS/FAIL line. Run with no arguments for all criteria, or pass
// criterion numbers to run a subset.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "rewirekit/cayley.hpp"
#include "rewirekit/harness.hpp"
#include "rewirekit/nn.hpp"
#include "rewirekit/rewire.hpp"
#include "rewirekit/rng.hpp"
#include "rewirekit/spectral.hpp"
#include "rewirekit/synthdata.hpp"

namespace fs = std::filesystem;
using namespace rewirekit;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

// 1. Eq-1 size formula vs exhaustive enumeration, n = 2..8.
Outcome criterion1() {
    const std::map<std::uint32_t, std::uint64_t> frozen = {{2, 6}, {3, 24}, {4, 48}, {5, 120}};
    for (std::uint32_t n = 2; n <= 8; ++n) {
        const std::uint64_t formula = cayley_size(n);
        const std::uint64_t enumerated = oracle::sl2_enumeration(n).size();
        if (formula != enumerated)
            return {false, "n=" + std::to_string(n) + ": formula " + std::to_string(formula) +
                               " != enumeration " + std::to_string(enumerated)};
        const auto it = frozen.find(n);
        if (it != frozen.end() && formula != it->second)
            return {false, "n=" + std::to_string(n) + ": expected " + std::to_string(it->second)};
    }
    return {true, "cayley_size matches enumeration for n=2..8 (6, 24, 48, 120, ...)"};
}

// 2. Expander diagnostics on untrimmed Cayley graphs, n = 3..8.
Outcome criterion2() {
    for (std::uint32_t n = 3; n <= 8; ++n) {
        const Graph g = build_cayley(n).graph;
        if (!is_connected(g)) return {false, "n=" + std::to_string(n) + " not connected"};
        for (int u = 0; u < g.num_nodes(); ++u)
            if (g.degree(u) != 4) return {false, "n=" + std::to_string(n) + " not 4-regular"};
        const double gap = spectral_gap(g);
        if (!(gap > 0.0)) return {false, "n=" + std::to_string(n) + " has zero spectral gap"};
        const int diam = diameter(g);
        if (diam > 4.0 * std::log(g.num_nodes()))
            return {false, "n=" + std::to_string(n) + " diameter " + std::to_string(diam) +
                               " exceeds 4 ln|V|"};
    }
    return {true, "n=3..8 all connected, 4-regular, gap > 0, diameter <= 4 ln|V|"};
}

// 3. Monte-Carlo commute-time oracle within 5% at 1e5 walks.
Outcome criterion3() {
    struct Case {
        const char* name;
        Graph g;
        int u, v;
    };
    const std::vector<Case> cases = {
        {"K2", Graph(2, {{0, 1}}), 0, 1},
        {"3-path", Graph(3, {{0, 1}, {1, 2}}), 0, 2},
        {"4-cycle", Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}), 0, 1},
        {"5-star", Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}), 1, 2},
    };
    std::string detail;
    for (const auto& [name, g, u, v] : cases) {
        const double algebraic = commute_time(g, u, v);
        const double sampled = oracle::mc_commute_time(g, u, v, 100000, 20260810);
        const double rel = std::abs(sampled - algebraic) / algebraic;
        detail += std::string(name) + " " + fmt(algebraic) + "/" + fmt(sampled) + " ";
        if (rel >= 0.05)
            return {false, std::string(name) + ": algebraic " + fmt(algebraic) + " vs MC " +
                               fmt(sampled) + " off by " + fmt(100 * rel) + "%"};
    }
    return {true, "algebraic vs 1e5-walk MC (exact/sampled): " + detail};
}

// 4. Cayley rewiring lowers average commute time on >= 45/50 base graphs.
Outcome criterion4() {
    Rng rng(515151);
    int wins = 0;
    for (int t = 0; t < 50; ++t) {
        const Graph base = procedural_topology(25, rng);
        const RewirePlan plan = rewirer_cayley(base, 5, mix_seed({4u, std::uint64_t(t)}));
        if (average_commute_time(plan.rewired) < average_commute_time(base)) ++wins;
    }
    return {wins >= 45, "cayley rewiring lowered average commute time on " + std::to_string(wins) +
                            "/50 graphs (need >= 45)"};
}

// 5. Aligned placement captures more distance-5 pairs than random placement.
Outcome criterion5() {
    Rng rng(67890);
    const int d = 5;
    double aligned_sum = 0.0, random_sum = 0.0;
    for (int t = 0; t < 50; ++t) {
        const int n = static_cast<int>(rng.uniform_int(20, 30));
        const Graph g = procedural_topology(n, rng);
        const auto targets = pairs_at_distance(g, d);
        aligned_sum += captured_pairs(rewirer_aligned_cayley(g, d, 5).rewired, targets);
        double acc = 0.0;
        for (int p = 0; p < 100; ++p)
            acc += captured_pairs(
                rewirer_cayley(g, 5, mix_seed({5u, std::uint64_t(t), std::uint64_t(p)})).rewired,
                targets);
        random_sum += acc / 100.0;
    }
    const double aligned_mean = aligned_sum / 50.0;
    const double random_mean = random_sum / 50.0;
    return {aligned_mean > random_mean,
            "mean captured pairs: aligned " + fmt(aligned_mean) + " vs random " + fmt(random_mean)};
}

// 6. Generator targets equal the brute-force oracle on 1000 samples per dataset.
Outcome criterion6() {
    DatasetAConfig a;
    a.train_count = 750;
    a.eval_count = 250;
    a.seed = 60606;
    const Dataset data_a = gen_dataset_a(a);
    for (const std::vector<Sample>* split : {&data_a.train, &data_a.eval}) {
        for (const Sample& s : *split) {
            std::vector<double> values(static_cast<std::size_t>(s.graph.num_nodes()));
            for (int u = 0; u < s.graph.num_nodes(); ++u)
                values[static_cast<std::size_t>(u)] = s.features(u, 0);
            const double expected = oracle::target_a(s.graph, values, a.c1, a.c2, a.c3, a.d);
            if (std::abs(s.target - expected) > 1e-12 * std::abs(expected))
                return {false, "data A sample target " + fmt(s.target) + " != oracle " +
                                   fmt(expected)};
        }
    }

    DatasetBConfig b;
    b.train_count = 750;
    b.eval_count = 250;
    b.seed = 70707;
    const Dataset data_b = gen_dataset_b(b);
    for (const std::vector<Sample>* split : {&data_b.train, &data_b.eval}) {
        for (const Sample& s : *split) {
            std::vector<double> values(static_cast<std::size_t>(s.graph.num_nodes()));
            for (int u = 0; u < s.graph.num_nodes(); ++u)
                values[static_cast<std::size_t>(u)] = s.features(u, 0);
            const double expected = oracle::target_b(s.graph, values, b.c1, b.c2);
            if (std::abs(s.target - expected) > 1e-12 * std::abs(expected))
                return {false, "data B sample target " + fmt(s.target) + " != oracle " +
                                   fmt(expected)};
        }
    }
    return {true, "2000 generated targets match the independent pair-sum oracle to 1e-12"};
}

// 7. Analytic gradients vs central finite differences on a small model.
Outcome criterion7() {
    Rng rng(714);
    const Graph g = procedural_topology(6, rng);
    Sample s1, s2;
    s1.graph = g;
    s2.graph = g;
    s1.features = Eigen::MatrixXd(6, 1);
    s2.features = Eigen::MatrixXd(6, 1);
    for (int u = 0; u < 6; ++u) {
        s1.features(u, 0) = rng.uniform01();
        s2.features(u, 0) = rng.uniform01();
    }
    s1.target = 2.0;
    s2.target = -0.5;
    const RewirePlan plan = rewirer_cayley(g, 2, 7);
    const Batch batch = {{&s1, &plan}, {&s2, &plan}};

    GinModel model = GinModel::create(1, 4, 2, 90125);
    GinGradients grads;
    BatchCache cache;
    batch_loss_and_gradients(model, batch, grads, cache);

    std::vector<double> analytic;
    visit_parameters(grads, [&](const std::string&, const double* p, std::size_t n) {
        analytic.insert(analytic.end(), p, p + n);
    });

    auto loss_at = [&]() {
        BatchCache c;
        const Eigen::VectorXd preds = batch_forward(model, batch, RunMode::kTrain, c);
        Eigen::VectorXd targets(2);
        targets << s1.target, s2.target;
        return loss_mse(preds, targets);
    };

    const double step = 1e-5;
    std::size_t flat = 0;
    double worst = 0.0;
    bool ok = true;
    std::string offender;
    visit_parameters(model, [&](const std::string& name, double* p, std::size_t count) {
        for (std::size_t i = 0; i < count; ++i, ++flat) {
            const double saved = p[i];
            p[i] = saved + step;
            const double up = loss_at();
            p[i] = saved - step;
            const double down = loss_at();
            p[i] = saved;
            const double fd = (up - down) / (2 * step);
            const double rel =
                std::abs(fd - analytic[flat]) / std::max({1.0, std::abs(fd), std::abs(analytic[flat])});
            if (rel > worst) {
                worst = rel;
                offender = name;
            }
            if (rel > 1e-4) ok = false;
        }
    });
    return {ok, "worst relative gradient error " + fmt(worst) + " (at " + offender +
                    "), tolerance 1e-4 over " + std::to_string(flat) + " parameters"};
}

// 8. All-BASE interleaving reproduces a plain GIN.
Outcome criterion8() {
    Rng rng(888);
    const GinModel model = GinModel::create(1, 8, 5, 4321);
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        const int n = static_cast<int>(rng.uniform_int(3, 20));
        const Graph g = procedural_topology(n, rng);
        Sample s;
        s.graph = g;
        s.features = Eigen::MatrixXd(n, 1);
        for (int u = 0; u < n; ++u) s.features(u, 0) = rng.uniform01();
        const RewirePlan plan = rewirer_base_only(g, 5);
        const double mine = model_forward(model, s, plan, RunMode::kTrain);
        const double reference = oracle::plain_gin_predict(model, g, s.features);
        worst = std::max(worst, std::abs(mine - reference) / std::max(1.0, std::abs(reference)));
    }
    return {worst <= 1e-10,
            "max deviation from the direct GIN over 100 instances: " + fmt(worst) + " (<= 1e-10)"};
}

ExperimentConfig desk_config_a() {
    std::map<std::string, std::string> kv = {
        {"dataset", "a"},        {"scale", "0.2"},
        {"total_epochs", "100"}, {"seeds", "1,2,3"},
        {"c1", "1"},             {"c2", "0.1"},
        {"c3", "0.2"},           {"d", "5"},
        {"sweep_ratios", "0.1"}, {"c3_values", "0.2"},
        {"rewirers", "base-graph-only,cayley,aligned-cayley"},
        {"workers", "2"},
    };
    return make_config(kv, std::nullopt);
}

std::map<std::string, double> mean_mse_by_rewirer(const SweepResult& result) {
    std::map<std::string, double> sums;
    std::map<std::string, int> counts;
    for (const CellResult& row : result.rows) {
        sums[row.rewirer] += row.final_eval_mse;
        counts[row.rewirer] += 1;
    }
    std::map<std::string, double> means;
    for (const auto& [name, sum] : sums) means[name] = sum / counts[name];
    return means;
}

// 9. Desk-scale Data A regime: aligned-cayley < cayley < base-graph-only.
Outcome criterion9() {
    ExperimentConfig cfg = desk_config_a();
    cfg.out_dir = (fs::temp_directory_path() / "rewirekit_acceptance_c9").string();
    fs::remove_all(cfg.out_dir);
    const SweepResult result = run_sweep_a(cfg);
    write_sweep_outputs(cfg, result);

    const auto means = mean_mse_by_rewirer(result);
    const double base = means.at("base-graph-only");
    const double cayley = means.at("cayley");
    const double aligned = means.at("aligned-cayley");

    double aligned_ratio = 0.0;
    for (const SummaryRow& row : summarize(result))
        if (row.rewirer == "aligned-cayley") aligned_ratio = row.mean_ratio;

    const bool ordered = aligned < cayley && cayley < base;
    const bool ratio_ok = aligned_ratio <= 0.8;
    return {ordered && ratio_ok,
            "seed-mean eval MSE: aligned " + fmt(aligned) + " < cayley " + fmt(cayley) +
                " < base " + fmt(base) + (ordered ? " holds" : " VIOLATED") +
                "; aligned mean ratio " + fmt(aligned_ratio) + " (need <= 0.8)"};
}

// 10. Desk-scale Data B regime at c2/c1 = 100.
Outcome criterion10() {
    std::map<std::string, std::string> kv = {
        {"dataset", "b"},        {"scale", "0.2"},
        {"total_epochs", "100"}, {"seeds", "1,2,3"},
        {"sweep_ratios", "100"},
        {"rewirers", "base-graph-only,cayley-clusters,fully-connected"},
        {"workers", "2"},
    };
    ExperimentConfig cfg = make_config(kv, std::nullopt);
    cfg.out_dir = (fs::temp_directory_path() / "rewirekit_acceptance_c10").string();
    fs::remove_all(cfg.out_dir);
    const SweepResult result = run_sweep_b(cfg);
    write_sweep_outputs(cfg, result);

    double clusters_ratio = 0.0, fc_ratio = 0.0;
    for (const SummaryRow& row : summarize(result)) {
        if (row.rewirer == "cayley-clusters") clusters_ratio = row.mean_ratio;
        if (row.rewirer == "fully-connected") fc_ratio = row.mean_ratio;
    }
    const bool ok = clusters_ratio < 1.0 && fc_ratio > 3.0;
    return {ok, "mean ratios at c2/c1=100: cayley-clusters " + fmt(clusters_ratio) +
                    " (need < 1.0), fully-connected " + fmt(fc_ratio) + " (need > 3.0)"};
}

// 11. Byte-identical results.csv across a repeated criterion-9 sweep.
Outcome criterion11() {
    auto run_once = [](const std::string& dir) {
        ExperimentConfig cfg = desk_config_a();
        cfg.out_dir = dir;
        fs::remove_all(dir);
        write_sweep_outputs(cfg, run_sweep_a(cfg));
        std::ifstream in(fs::path(dir) / "results.csv");
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    const std::string first = run_once((fs::temp_directory_path() / "rewirekit_acceptance_c11a").string());
    const std::string second = run_once((fs::temp_directory_path() / "rewirekit_acceptance_c11b").string());
    if (first.empty()) return {false, "results.csv is empty"};
    return {first == second,
            first == second ? "repeated sweep produced byte-identical results.csv ("
                                  + std::to_string(first.size()) + " bytes)"
                            : "results.csv differs between reruns"};
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> ids;
    for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
    if (ids.empty())
        for (int i = 1; i <= 11; ++i) ids.push_back(i);

    using Fn = Outcome (*)();
    const std::map<int, Fn> criteria = {
        {1, criterion1}, {2, criterion2}, {3, criterion3},  {4, criterion4},
        {5, criterion5}, {6, criterion6}, {7, criterion7},  {8, criterion8},
        {9, criterion9}, {10, criterion10}, {11, criterion11},
    };

    bool all_pass = true;
    for (const int id : ids) {
        const auto it = criteria.find(id);
        if (it == criteria.end()) {
            std::cout << "FAIL criterion " << id << ": unknown criterion\n";
            all_pass = false;
            continue;
        }
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = it->second();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (outcome.pass ? "PASS" : "FAIL") << " criterion " << id << " ("
                  << fmt(secs) << "s): " << outcome.detail << "\n";
        std::cout.flush();
        if (!outcome.pass) all_pass = false;
    }
    return all_pass ? 0 : 1;
}
