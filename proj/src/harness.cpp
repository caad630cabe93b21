#include "rewirekit/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "rewirekit/rng.hpp"
#include "rewirekit/svg_chart.hpp"

namespace rewirekit {

namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kTrainTag = 1;
constexpr std::uint64_t kEvalTag = 2;

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_short(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream ss(s);
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) parts.push_back(item);
    }
    return parts;
}

// Consumes keys from the parsed map; leftovers are unknown keys.
class KvReader {
public:
    explicit KvReader(std::map<std::string, std::string> kv) : kv_(std::move(kv)) {}

    std::optional<std::string> take(const std::string& key) {
        const auto it = kv_.find(key);
        if (it == kv_.end()) return std::nullopt;
        std::string value = it->second;
        kv_.erase(it);
        return value;
    }

    bool take_int(const std::string& key, int& out) {
        const auto v = take(key);
        if (!v) return false;
        std::size_t used = 0;
        out = std::stoi(*v, &used);
        if (used != v->size()) throw std::runtime_error("config: bad integer for " + key);
        return true;
    }

    bool take_u64(const std::string& key, std::uint64_t& out) {
        const auto v = take(key);
        if (!v) return false;
        std::size_t used = 0;
        out = std::stoull(*v, &used);
        if (used != v->size()) throw std::runtime_error("config: bad integer for " + key);
        return true;
    }

    bool take_double(const std::string& key, double& out) {
        const auto v = take(key);
        if (!v) return false;
        std::size_t used = 0;
        out = std::stod(*v, &used);
        if (used != v->size()) throw std::runtime_error("config: bad number for " + key);
        return true;
    }

    bool take_bool(const std::string& key, bool& out) {
        const auto v = take(key);
        if (!v) return false;
        if (*v == "true" || *v == "1" || *v == "on") out = true;
        else if (*v == "false" || *v == "0" || *v == "off") out = false;
        else throw std::runtime_error("config: bad boolean for " + key);
        return true;
    }

    void finish() const {
        if (kv_.empty()) return;
        std::string keys;
        for (const auto& [k, v] : kv_) keys += (keys.empty() ? "" : ", ") + k;
        throw std::runtime_error("config: unknown keys: " + keys);
    }

private:
    std::map<std::string, std::string> kv_;
};

int scaled_count(int base, double scale) {
    return std::max(1, static_cast<int>(std::llround(base * scale)));
}

const std::set<std::string> kKnownRewirers = {
    "base-graph-only",  "cayley",          "aligned-cayley",           "distance-d-pairs",
    "fully-connected",  "cayley-clusters", "fully-connected-clusters"};

}  // namespace

std::map<std::string, std::string> parse_config_text(std::istream& in) {
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string text = trim(line);
        if (text.empty()) continue;
        const auto eq = text.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config: line " + std::to_string(lineno) +
                                     " is not 'key = value'");
        const std::string key = trim(text.substr(0, eq));
        const std::string value = trim(text.substr(eq + 1));
        if (key.empty()) throw std::runtime_error("config: empty key at line " + std::to_string(lineno));
        if (kv.count(key)) throw std::runtime_error("config: duplicate key " + key);
        kv[key] = value;
    }
    return kv;
}

ExperimentConfig make_config(const std::map<std::string, std::string>& kv,
                             std::optional<DatasetKind> dataset_override) {
    KvReader reader(kv);
    ExperimentConfig cfg;

    if (const auto v = reader.take("dataset")) cfg.dataset = dataset_kind_from_string(*v);
    if (dataset_override) cfg.dataset = *dataset_override;
    const bool is_a = cfg.dataset == DatasetKind::kA;

    reader.take_u64("dataset_seed", cfg.dataset_seed);
    reader.take_double("scale", cfg.scale);
    if (!(cfg.scale > 0.0)) throw std::runtime_error("config: scale must be positive");

    if (!reader.take_int("train_count", cfg.train_count))
        cfg.train_count = scaled_count(is_a ? 5000 : 1500, cfg.scale);
    if (!reader.take_int("eval_count", cfg.eval_count))
        cfg.eval_count = scaled_count(is_a ? 500 : 300, cfg.scale);

    cfg.train_corpus = is_a ? CorpusSpec{"", 20, 30, 5} : CorpusSpec{"", 75, 125, 5};
    cfg.eval_corpus = is_a ? CorpusSpec{"", 31, 35, 5} : CorpusSpec{"", 126, 175, 5};
    reader.take_int("train_min_size", cfg.train_corpus.min_size);
    reader.take_int("train_max_size", cfg.train_corpus.max_size);
    reader.take_int("eval_min_size", cfg.eval_corpus.min_size);
    reader.take_int("eval_max_size", cfg.eval_corpus.max_size);
    int bin_width = 5;
    reader.take_int("bin_width", bin_width);
    cfg.train_corpus.bin_width = bin_width;
    cfg.eval_corpus.bin_width = bin_width;
    if (const auto v = reader.take("edge_list_dir")) {
        cfg.train_corpus.edge_list_dir = *v;
        cfg.eval_corpus.edge_list_dir = *v;
    }
    if (cfg.eval_corpus.min_size <= cfg.train_corpus.max_size)
        throw std::runtime_error("config: eval sizes must be strictly larger than train sizes");

    if (!is_a) {
        cfg.c1 = 0.5;
        cfg.c2 = 0.5;
        cfg.c3 = 0.0;
    }
    reader.take_double("c1", cfg.c1);
    reader.take_double("c2", cfg.c2);
    reader.take_double("c3", cfg.c3);
    reader.take_int("d", cfg.d);
    reader.take_int("num_colours", cfg.num_colours);
    reader.take_int("coloured_min", cfg.coloured_min);
    reader.take_int("coloured_max", cfg.coloured_max);

    reader.take_int("hidden", cfg.hidden);
    reader.take_int("layers", cfg.layers);

    cfg.schedule.peak_lr = is_a ? 1e-4 : 1e-3;
    reader.take_double("peak_lr", cfg.schedule.peak_lr);
    if (!reader.take_int("total_epochs", cfg.schedule.total_epochs))
        cfg.schedule.total_epochs = scaled_count(200, cfg.scale);
    if (!reader.take_int("warmup_epochs", cfg.schedule.warmup_epochs))
        cfg.schedule.warmup_epochs = scaled_count(50, cfg.scale);
    reader.take_double("lr_decay", cfg.schedule.decay_per_epoch);
    reader.take_int("batch_size", cfg.schedule.batch_size);
    reader.take_bool("standardize_targets", cfg.standardize_targets);

    if (const auto v = reader.take("seeds")) {
        cfg.seeds.clear();
        for (const std::string& s : split_list(*v)) cfg.seeds.push_back(std::stoull(s));
        if (cfg.seeds.empty()) throw std::runtime_error("config: seeds list is empty");
    }

    if (const auto v = reader.take("rewirer")) cfg.rewirer = *v;
    if (const auto v = reader.take("rewirers")) cfg.rewirers = split_list(*v);
    for (const std::string& name : cfg.rewirers)
        if (!kKnownRewirers.count(name))
            throw std::runtime_error("config: unknown rewirer " + name);
    if (!kKnownRewirers.count(cfg.rewirer))
        throw std::runtime_error("config: unknown rewirer " + cfg.rewirer);

    if (const auto v = reader.take("sweep_ratios")) {
        cfg.sweep_ratios.clear();
        for (const std::string& s : split_list(*v)) cfg.sweep_ratios.push_back(std::stod(s));
    }
    if (const auto v = reader.take("c3_values")) {
        cfg.c3_values.clear();
        for (const std::string& s : split_list(*v)) cfg.c3_values.push_back(std::stod(s));
    }
    if (const auto v = reader.take("include_uncoloured")) {
        if (*v == "default") cfg.uncoloured = UncolouredPolicy::kDefault;
        else if (*v == "on") cfg.uncoloured = UncolouredPolicy::kOn;
        else if (*v == "off") cfg.uncoloured = UncolouredPolicy::kOff;
        else throw std::runtime_error("config: include_uncoloured must be default/on/off");
    }

    cfg.workers = 1;
    if (const char* env = std::getenv(kWorkersEnvVar)) {
        const int parsed = std::atoi(env);
        if (parsed >= 1) cfg.workers = parsed;
    }
    reader.take_int("workers", cfg.workers);
    if (cfg.workers < 1) throw std::runtime_error("config: workers must be >= 1");

    if (const auto v = reader.take("out_dir")) cfg.out_dir = *v;

    reader.finish();
    return cfg;
}

ExperimentConfig load_config_file(const std::string& path,
                                  std::optional<DatasetKind> dataset_override) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open " + path);
    return make_config(parse_config_text(in), dataset_override);
}

const std::vector<std::string>& rewirer_zoo(DatasetKind dataset) {
    static const std::vector<std::string> zoo_a = {"base-graph-only", "cayley", "aligned-cayley",
                                                   "distance-d-pairs", "fully-connected"};
    static const std::vector<std::string> zoo_b = {"base-graph-only", "cayley", "cayley-clusters",
                                                   "fully-connected-clusters", "fully-connected"};
    return dataset == DatasetKind::kA ? zoo_a : zoo_b;
}

void check_rewirer_compatible(const std::string& rewirer, const ExperimentConfig& cfg) {
    if (!kKnownRewirers.count(rewirer))
        throw std::runtime_error("unknown rewirer " + rewirer);
    const bool needs_colours =
        rewirer == "cayley-clusters" || rewirer == "fully-connected-clusters";
    if (needs_colours && cfg.dataset != DatasetKind::kB)
        throw std::runtime_error("rewirer " + rewirer + " requires a coloured dataset");
    const bool needs_d = rewirer == "aligned-cayley" || rewirer == "distance-d-pairs";
    if (needs_d && cfg.d < 1)
        throw std::runtime_error("rewirer " + rewirer + " requires d >= 1");
}

RewirePlan build_plan(const std::string& rewirer, const Sample& sample,
                      const ExperimentConfig& cfg, std::uint64_t rewire_seed) {
    const Graph& g = sample.graph;
    const int layers = cfg.layers;
    if (rewirer == "base-graph-only") return rewirer_base_only(g, layers);
    if (rewirer == "cayley") return rewirer_cayley(g, layers, rewire_seed);
    if (rewirer == "aligned-cayley") return rewirer_aligned_cayley(g, cfg.d, layers);
    if (rewirer == "distance-d-pairs") return rewirer_distance_d_pairs(g, cfg.d, layers);
    if (rewirer == "fully-connected") return rewirer_fully_connected(g, layers);
    if (rewirer == "cayley-clusters")
        return rewirer_cayley_clusters(g, layers, cfg.uncoloured == UncolouredPolicy::kOn);
    if (rewirer == "fully-connected-clusters")
        return rewirer_fully_connected_clusters(g, layers,
                                                cfg.uncoloured != UncolouredPolicy::kOff);
    throw std::runtime_error("unknown rewirer " + rewirer);
}

std::vector<RewirePlan> build_plans(const std::string& rewirer, const std::vector<Sample>& samples,
                                    const ExperimentConfig& cfg, std::uint64_t split_tag) {
    std::vector<RewirePlan> plans;
    plans.reserve(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const std::uint64_t seed =
            mix_seed({cfg.dataset_seed, split_tag, static_cast<std::uint64_t>(i), hash_tag("rewire")});
        plans.push_back(build_plan(rewirer, samples[i], cfg, seed));
    }
    return plans;
}

namespace {

Dataset generate_dataset(const ExperimentConfig& cfg, double c1, double c2, double c3) {
    Dataset dataset;
    if (cfg.dataset == DatasetKind::kA) {
        DatasetAConfig a;
        a.train_count = cfg.train_count;
        a.eval_count = cfg.eval_count;
        a.train_corpus = cfg.train_corpus;
        a.eval_corpus = cfg.eval_corpus;
        a.c1 = c1;
        a.c2 = c2;
        a.c3 = c3;
        a.d = cfg.d;
        a.seed = cfg.dataset_seed;
        dataset = gen_dataset_a(a);
    } else {
        DatasetBConfig b;
        b.train_count = cfg.train_count;
        b.eval_count = cfg.eval_count;
        b.train_corpus = cfg.train_corpus;
        b.eval_corpus = cfg.eval_corpus;
        b.c1 = c1;
        b.c2 = c2;
        b.num_colours = cfg.num_colours;
        b.coloured_min = cfg.coloured_min;
        b.coloured_max = cfg.coloured_max;
        b.seed = cfg.dataset_seed;
        dataset = gen_dataset_b(b);
    }
    if (cfg.standardize_targets) {
        double mean = 0.0;
        for (const Sample& s : dataset.train) mean += s.target;
        mean /= static_cast<double>(dataset.train.size());
        double var = 0.0;
        for (const Sample& s : dataset.train) var += (s.target - mean) * (s.target - mean);
        var /= static_cast<double>(dataset.train.size());
        const double sd = std::max(std::sqrt(var), 1e-12);
        for (Sample& s : dataset.train) s.target = (s.target - mean) / sd;
        for (Sample& s : dataset.eval) s.target = (s.target - mean) / sd;
    }
    return dataset;
}

struct Combo {
    double c1 = 0.0, c2 = 0.0, c3 = 0.0;
    double c2_over_c1 = 0.0;
};

struct PlanSet {
    std::vector<RewirePlan> train;
    std::vector<RewirePlan> eval;
};

std::string cell_dir_name(const std::string& rewirer, const Combo& combo, std::uint64_t seed) {
    return rewirer + "_ratio" + fmt_short(combo.c2_over_c1) + "_c3" + fmt_short(combo.c3) +
           "_seed" + std::to_string(seed);
}

void write_cell_artifacts(const ExperimentConfig& cfg, const std::string& rewirer,
                          const Combo& combo, std::uint64_t seed, const TrainResult& trained) {
    if (cfg.out_dir.empty()) return;
    const fs::path dir = fs::path(cfg.out_dir) / "cells" / cell_dir_name(rewirer, combo, seed);
    fs::create_directories(dir);

    std::ofstream metrics(dir / "metrics.csv");
    metrics << "epoch,lr,train_mse,eval_mse\n";
    for (const EpochMetrics& m : trained.history)
        metrics << m.epoch << ',' << fmt_double(m.lr) << ',' << fmt_double(m.train_mse) << ','
                << fmt_double(m.eval_mse) << '\n';

    save_model(trained.model, (dir / "model.ckpt").string());
}

// Runs rewirers x combos x seeds; datasets and plans are precomputed and
// shared read-only across the worker threads.
SweepResult run_grid(const ExperimentConfig& cfg, const std::vector<std::string>& rewirers,
                     const std::vector<Combo>& combos) {
    for (const std::string& rewirer : rewirers) check_rewirer_compatible(rewirer, cfg);
    if (std::find(rewirers.begin(), rewirers.end(), "base-graph-only") == rewirers.end())
        throw std::runtime_error("sweep: rewirers must include base-graph-only for MSE ratios");

    std::vector<Dataset> datasets;
    datasets.reserve(combos.size());
    for (const Combo& combo : combos)
        datasets.push_back(generate_dataset(cfg, combo.c1, combo.c2, combo.c3));

    // Graphs are identical across combos (targets differ), so plans are
    // built once per rewirer against the first combo's samples.
    std::vector<PlanSet> plans(rewirers.size());
    for (std::size_t r = 0; r < rewirers.size(); ++r) {
        plans[r].train = build_plans(rewirers[r], datasets.front().train, cfg, kTrainTag);
        plans[r].eval = build_plans(rewirers[r], datasets.front().eval, cfg, kEvalTag);
    }

    const int feature_width = cfg.dataset == DatasetKind::kA ? 1 : 1 + cfg.num_colours;

    struct CellSpec {
        std::size_t rewirer_idx, combo_idx, seed_idx;
    };
    std::vector<CellSpec> cells;
    for (std::size_t r = 0; r < rewirers.size(); ++r)
        for (std::size_t c = 0; c < combos.size(); ++c)
            for (std::size_t s = 0; s < cfg.seeds.size(); ++s) cells.push_back({r, c, s});

    std::vector<CellResult> rows(cells.size());
    std::atomic<std::size_t> next{0};
    std::mutex failure_mutex;
    std::exception_ptr failure;

    auto worker = [&]() {
        for (std::size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1)) {
            {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (failure) return;
            }
            try {
                const CellSpec& cell = cells[i];
                const std::string& rewirer = rewirers[cell.rewirer_idx];
                const Combo& combo = combos[cell.combo_idx];
                const std::uint64_t seed = cfg.seeds[cell.seed_idx];
                const Dataset& dataset = datasets[cell.combo_idx];
                const PlanSet& plan_set = plans[cell.rewirer_idx];

                const std::uint64_t run_key = mix_seed({seed, hash_tag(rewirer)});
                GinModel model = GinModel::create(feature_width, cfg.hidden, cfg.layers,
                                                  mix_seed({run_key, hash_tag("init")}));
                TrainResult trained =
                    train(std::move(model), dataset.train, plan_set.train, dataset.eval,
                          plan_set.eval, cfg.schedule, mix_seed({run_key, hash_tag("opt")}));

                CellResult row;
                row.rewirer = rewirer;
                row.c1 = combo.c1;
                row.c2 = combo.c2;
                row.c3 = combo.c3;
                row.c2_over_c1 = combo.c2_over_c1;
                row.seed = seed;
                row.final_eval_mse = trained.history.back().eval_mse;
                row.history = trained.history;
                write_cell_artifacts(cfg, rewirer, combo, seed, trained);
                rows[i] = std::move(row);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };

    const int workers = std::max(1, std::min<int>(cfg.workers, static_cast<int>(cells.size())));
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();
    if (failure) std::rethrow_exception(failure);

    // per-seed pairing against base-graph-only
    std::map<std::pair<std::size_t, std::uint64_t>, double> base_mse;
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (rewirers[cells[i].rewirer_idx] == "base-graph-only")
            base_mse[{cells[i].combo_idx, rows[i].seed}] = rows[i].final_eval_mse;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const double base = base_mse.at({cells[i].combo_idx, rows[i].seed});
        rows[i].ratio_to_base = rows[i].final_eval_mse / base;
    }

    SweepResult result;
    result.dataset = cfg.dataset;
    result.rows = std::move(rows);
    return result;
}

}  // namespace

Dataset generate_config_dataset(const ExperimentConfig& cfg) {
    return generate_dataset(cfg, cfg.c1, cfg.c2, cfg.c3);
}

SweepResult run_experiment(const ExperimentConfig& cfg) {
    check_rewirer_compatible(cfg.rewirer, cfg);
    if (cfg.seeds.empty()) throw std::runtime_error("run_experiment: no seeds");

    ExperimentConfig single = cfg;
    single.seeds = {cfg.seeds.front()};

    std::vector<std::string> rewirers = {"base-graph-only"};
    if (cfg.rewirer != "base-graph-only") rewirers.push_back(cfg.rewirer);

    Combo combo{cfg.c1, cfg.c2, cfg.c3, cfg.c1 != 0.0 ? cfg.c2 / cfg.c1 : 0.0};
    SweepResult grid = run_grid(single, rewirers, {combo});

    SweepResult result;
    result.dataset = cfg.dataset;
    for (CellResult& row : grid.rows)
        if (row.rewirer == cfg.rewirer) result.rows.push_back(std::move(row));
    return result;
}

SweepResult run_sweep_a(const ExperimentConfig& cfg) {
    if (cfg.dataset != DatasetKind::kA)
        throw std::runtime_error("run_sweep_a: config is not for dataset a");
    const std::vector<std::string>& rewirers =
        cfg.rewirers.empty() ? rewirer_zoo(DatasetKind::kA) : cfg.rewirers;

    std::vector<Combo> combos;
    for (const double ratio : cfg.sweep_ratios)
        for (const double c3 : cfg.c3_values) combos.push_back({1.0, ratio, c3, ratio});
    return run_grid(cfg, rewirers, combos);
}

SweepResult run_sweep_b(const ExperimentConfig& cfg) {
    if (cfg.dataset != DatasetKind::kB)
        throw std::runtime_error("run_sweep_b: config is not for dataset b");
    const std::vector<std::string>& rewirers =
        cfg.rewirers.empty() ? rewirer_zoo(DatasetKind::kB) : cfg.rewirers;

    std::vector<Combo> combos;
    for (const double ratio : cfg.sweep_ratios) {
        const double c1 = 1.0 / (1.0 + ratio);
        const double c2 = ratio / (1.0 + ratio);
        combos.push_back({c1, c2, 0.0, ratio});
    }
    return run_grid(cfg, rewirers, combos);
}

SweepResult run_sweep(const ExperimentConfig& cfg) {
    return cfg.dataset == DatasetKind::kA ? run_sweep_a(cfg) : run_sweep_b(cfg);
}

std::vector<SummaryRow> summarize(const SweepResult& result) {
    if (result.rows.empty()) throw std::invalid_argument("summarize: empty sweep result");

    std::vector<SummaryRow> summary;
    // preserve first-appearance order of (rewirer, params) groups
    for (const CellResult& row : result.rows) {
        const bool seen = std::any_of(summary.begin(), summary.end(), [&](const SummaryRow& s) {
            return s.rewirer == row.rewirer && s.c2_over_c1 == row.c2_over_c1 && s.c3 == row.c3;
        });
        if (seen) continue;

        SummaryRow s;
        s.rewirer = row.rewirer;
        s.c2_over_c1 = row.c2_over_c1;
        s.c3 = row.c3;
        double sum_ratio = 0.0, sum_mse = 0.0;
        int count = 0;
        for (const CellResult& r : result.rows) {
            if (r.rewirer != s.rewirer || r.c2_over_c1 != s.c2_over_c1 || r.c3 != s.c3) continue;
            sum_ratio += r.ratio_to_base;
            sum_mse += r.final_eval_mse;
            ++count;
        }
        s.mean_ratio = sum_ratio / count;
        s.mean_final_eval_mse = sum_mse / count;
        double sq = 0.0;
        for (const CellResult& r : result.rows) {
            if (r.rewirer != s.rewirer || r.c2_over_c1 != s.c2_over_c1 || r.c3 != s.c3) continue;
            sq += (r.ratio_to_base - s.mean_ratio) * (r.ratio_to_base - s.mean_ratio);
        }
        s.sd_ratio = count > 1 ? std::sqrt(sq / (count - 1)) : 0.0;
        summary.push_back(s);
    }
    return summary;
}

void write_results_csv(const SweepResult& result, std::ostream& out) {
    out << "dataset,rewirer,c1,c2,c3,c2_over_c1,seed,final_eval_mse,ratio_to_base\n";
    for (const CellResult& row : result.rows)
        out << to_string(result.dataset) << ',' << row.rewirer << ',' << fmt_double(row.c1) << ','
            << fmt_double(row.c2) << ',' << fmt_double(row.c3) << ','
            << fmt_double(row.c2_over_c1) << ',' << row.seed << ','
            << fmt_double(row.final_eval_mse) << ',' << fmt_double(row.ratio_to_base) << '\n';
}

void write_summary_csv(const DatasetKind dataset, const std::vector<SummaryRow>& rows,
                       std::ostream& out) {
    out << "dataset,rewirer,c2_over_c1,c3,mean_ratio,sd_ratio,mean_final_eval_mse\n";
    for (const SummaryRow& row : rows)
        out << to_string(dataset) << ',' << row.rewirer << ',' << fmt_double(row.c2_over_c1) << ','
            << fmt_double(row.c3) << ',' << fmt_double(row.mean_ratio) << ','
            << fmt_double(row.sd_ratio) << ',' << fmt_double(row.mean_final_eval_mse) << '\n';
}

void write_sweep_svg(const SweepResult& result, const std::vector<SummaryRow>& rows,
                     const std::string& path) {
    std::vector<double> c3s;
    std::vector<std::string> rewirers;
    for (const SummaryRow& row : rows) {
        if (std::find(c3s.begin(), c3s.end(), row.c3) == c3s.end()) c3s.push_back(row.c3);
        if (std::find(rewirers.begin(), rewirers.end(), row.rewirer) == rewirers.end())
            rewirers.push_back(row.rewirer);
    }

    std::vector<ChartPanel> panels;
    for (const double c3 : c3s) {
        ChartPanel panel;
        panel.title = result.dataset == DatasetKind::kA ? "data a, c3 = " + fmt_short(c3)
                                                        : "data b";
        panel.x_label = "c2/c1";
        panel.y_label = "MSE / MSE(base-graph-only)";
        for (const std::string& rewirer : rewirers) {
            ChartSeries series;
            series.label = rewirer;
            for (const SummaryRow& row : rows) {
                if (row.rewirer != rewirer || row.c3 != c3) continue;
                SeriesPoint pt;
                pt.x = row.c2_over_c1;
                pt.y = std::max(row.mean_ratio, 1e-12);
                pt.band_lo = std::max(row.mean_ratio - row.sd_ratio, pt.y * 1e-3);
                pt.band_hi = std::max(row.mean_ratio + row.sd_ratio, pt.y);
                series.points.push_back(pt);
            }
            std::sort(series.points.begin(), series.points.end(),
                      [](const SeriesPoint& a, const SeriesPoint& b) { return a.x < b.x; });
            if (!series.points.empty()) panel.series.push_back(std::move(series));
        }
        panels.push_back(std::move(panel));
    }
    write_log_log_chart(path, panels);
}

void write_sweep_outputs(const ExperimentConfig& cfg, const SweepResult& result) {
    if (cfg.out_dir.empty()) throw std::runtime_error("write_sweep_outputs: out_dir not set");
    fs::create_directories(cfg.out_dir);

    {
        std::ofstream out(fs::path(cfg.out_dir) / "results.csv");
        write_results_csv(result, out);
        if (!out) throw std::runtime_error("failed writing results.csv");
    }
    const std::vector<SummaryRow> summary = summarize(result);
    {
        std::ofstream out(fs::path(cfg.out_dir) / "summary.csv");
        write_summary_csv(result.dataset, summary, out);
        if (!out) throw std::runtime_error("failed writing summary.csv");
    }
    write_sweep_svg(result, summary, (fs::path(cfg.out_dir) / "sweep.svg").string());
}

}  // namespace rewirekit
