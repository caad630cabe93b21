#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rewirekit/graph.hpp"
#include "rewirekit/rng.hpp"

namespace rewirekit {

enum class DatasetKind { kA, kB };

std::string to_string(DatasetKind kind);
DatasetKind dataset_kind_from_string(const std::string& s);

struct SampleMeta {
    DatasetKind kind = DatasetKind::kA;
    std::uint64_t seed = 0;   // per-sample stream seed
    double c1 = 0.0, c2 = 0.0, c3 = 0.0;
    int d = 0;            // Data A
    int num_colours = 0;  // Data B
    int size_bin = 0;     // lower bound of the sample's size bin
};

// One regression instance. features is |V| x F: Data A has F = 1 (the node
// value); Data B appends a one-hot colour encoding (all-zero when
// uncoloured).
struct Sample {
    Graph graph;
    Eigen::MatrixXd features;
    double target = 0.0;
    SampleMeta meta;
};

struct SizeBin {
    int lo = 0;
    int hi = 0;
};

// Where base topologies come from: a directory of edge-list files, or the
// procedural molecule-like generator when the directory is empty.
struct CorpusSpec {
    std::string edge_list_dir;  // empty => procedural
    int min_size = 0;
    int max_size = 0;
    int bin_width = 5;
};

// Consecutive width-5 windows anchored at min_size, clipped at max_size.
std::vector<SizeBin> size_bins(const CorpusSpec& spec);

// Random spanning tree plus extra random edges up to mean degree ~2.1,
// max degree 4. Connected by construction.
Graph procedural_topology(int n, Rng& rng);

class TopologySource {
public:
    explicit TopologySource(const CorpusSpec& spec);

    // Connected graph whose size lies in `bin`. Edge-list corpora pick a
    // file uniformly among those that fit; throws naming the bin if none do.
    Graph sample_in_bin(const SizeBin& bin, Rng& rng) const;

private:
    CorpusSpec spec_;
    std::vector<Graph> corpus_;  // loaded once; empty for procedural
};

// One connected graph within the spec's size range (bin chosen uniformly).
Graph gen_topology(const CorpusSpec& spec, std::uint64_t seed);

// y = c1 * sum_{dist=1} exp(x_i+x_j) + c2 * sum_{dist=d} exp(x_i+x_j)
//   + c3 * sum_{dist not in {1,d}} exp(x_i+x_j), over unordered pairs.
// The graph must be connected (the c3 term is undefined across components).
double target_data_a(const Graph& g, const std::vector<double>& values, double c1, double c2,
                     double c3, int d);

// y = c1 * sum_{dist=1} exp(x_i+x_j)
//   + c2 * sum_c sum_{i<j in V(c)} exp(x_i+x_j), x the scalar node value.
double target_data_b(const Graph& g, const std::vector<double>& values, double c1, double c2);

struct DatasetAConfig {
    int train_count = 5000;
    int eval_count = 500;
    CorpusSpec train_corpus{"", 20, 30, 5};
    CorpusSpec eval_corpus{"", 30, 35, 5};
    double c1 = 1.0;
    double c2 = 0.1;
    double c3 = 0.2;
    int d = 5;
    std::uint64_t seed = 90210;
};

struct DatasetBConfig {
    int train_count = 1500;
    int eval_count = 300;
    CorpusSpec train_corpus{"", 75, 125, 5};
    CorpusSpec eval_corpus{"", 125, 175, 5};
    double c1 = 0.5;
    double c2 = 0.5;
    int num_colours = 4;
    int coloured_min = 25;
    int coloured_max = 75;
    std::uint64_t seed = 90210;
};

struct Dataset {
    std::vector<Sample> train;
    std::vector<Sample> eval;
};

Dataset gen_dataset_a(const DatasetAConfig& config);
Dataset gen_dataset_b(const DatasetBConfig& config);

void write_samples(std::ostream& out, const std::vector<Sample>& samples);
std::vector<Sample> read_samples(std::istream& in);
void write_dataset(const Dataset& dataset, const std::string& dir);

}  // namespace rewirekit
