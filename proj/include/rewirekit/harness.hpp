#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rewirekit/nn.hpp"
#include "rewirekit/rewire.hpp"
#include "rewirekit/synthdata.hpp"

namespace rewirekit {

inline constexpr const char* kWorkersEnvVar = "REWIREKIT_WORKERS";

enum class UncolouredPolicy { kDefault, kOn, kOff };

// Full description of one run or sweep. Defaults follow the Data A / Data B
// learning setups; the scale factor multiplies sample counts and epoch
// counts (never graph sizes), with explicit keys taking precedence.
struct ExperimentConfig {
    DatasetKind dataset = DatasetKind::kA;
    std::uint64_t dataset_seed = 90210;
    double scale = 1.0;

    int train_count = 0;  // resolved from defaults x scale unless set
    int eval_count = 0;
    CorpusSpec train_corpus;
    CorpusSpec eval_corpus;

    double c1 = 1.0;
    double c2 = 0.1;
    double c3 = 0.2;
    int d = 5;
    int num_colours = 4;
    int coloured_min = 25;
    int coloured_max = 75;

    int hidden = 8;
    int layers = 5;
    TrainSchedule schedule;
    bool standardize_targets = false;

    std::vector<std::uint64_t> seeds = {1, 2, 3};

    std::string rewirer = "base-graph-only";    // single-cell runs
    std::vector<std::string> rewirers;          // sweep zoo (defaulted per dataset)
    std::vector<double> sweep_ratios = {0.01, 0.1, 1.0, 10.0, 100.0};
    std::vector<double> c3_values = {0.0, 0.1, 0.2};
    UncolouredPolicy uncoloured = UncolouredPolicy::kDefault;

    std::string out_dir;
    int workers = 1;
};

// Flat `key = value` text; '#' comments; unknown keys are errors.
std::map<std::string, std::string> parse_config_text(std::istream& in);
ExperimentConfig make_config(const std::map<std::string, std::string>& kv,
                             std::optional<DatasetKind> dataset_override);
ExperimentConfig load_config_file(const std::string& path,
                                  std::optional<DatasetKind> dataset_override);

const std::vector<std::string>& rewirer_zoo(DatasetKind dataset);

// Throws when the rewirer cannot run on the dataset kind (cluster rewirers
// need colours, distance-based rewirers need d >= 1).
void check_rewirer_compatible(const std::string& rewirer, const ExperimentConfig& cfg);

// Instantiate one rewirer on one sample. Random placement is keyed by
// rewire_seed and fixed per sample.
RewirePlan build_plan(const std::string& rewirer, const Sample& sample,
                      const ExperimentConfig& cfg, std::uint64_t rewire_seed);

std::vector<RewirePlan> build_plans(const std::string& rewirer, const std::vector<Sample>& samples,
                                    const ExperimentConfig& cfg, std::uint64_t split_tag);

struct CellResult {
    std::string rewirer;
    double c1 = 0.0, c2 = 0.0, c3 = 0.0;
    double c2_over_c1 = 0.0;
    std::uint64_t seed = 0;
    double final_eval_mse = 0.0;
    double ratio_to_base = 0.0;
    std::vector<EpochMetrics> history;
};

struct SweepResult {
    DatasetKind dataset = DatasetKind::kA;
    std::vector<CellResult> rows;
};

struct SummaryRow {
    std::string rewirer;
    double c2_over_c1 = 0.0;
    double c3 = 0.0;
    double mean_ratio = 0.0;
    double sd_ratio = 0.0;
    double mean_final_eval_mse = 0.0;
};

// Both splits for the config's own c-parameters (targets standardized when
// the config asks for it).
Dataset generate_config_dataset(const ExperimentConfig& cfg);

// One (rewirer, parameters, seed) cell: generate the dataset, build plans,
// train, report the final eval MSE and its ratio against base-graph-only
// with the same seed. Artifacts land under cfg.out_dir when set.
SweepResult run_experiment(const ExperimentConfig& cfg);

// The Data A sweep: rewirer zoo x c2/c1 grid x c3 grid x seeds, c1 = 1.
SweepResult run_sweep_a(const ExperimentConfig& cfg);

// The Data B sweep: rewirer zoo x c2/c1 grid x seeds with c1 + c2 = 1.
SweepResult run_sweep_b(const ExperimentConfig& cfg);

SweepResult run_sweep(const ExperimentConfig& cfg);

// Per (rewirer, parameters): mean and sample standard deviation of the
// per-seed ratios.
std::vector<SummaryRow> summarize(const SweepResult& result);

void write_results_csv(const SweepResult& result, std::ostream& out);
void write_summary_csv(const DatasetKind dataset, const std::vector<SummaryRow>& rows,
                       std::ostream& out);
void write_sweep_svg(const SweepResult& result, const std::vector<SummaryRow>& rows,
                     const std::string& path);

// results.csv, summary.csv, sweep.svg under cfg.out_dir.
void write_sweep_outputs(const ExperimentConfig& cfg, const SweepResult& result);

}  // namespace rewirekit
