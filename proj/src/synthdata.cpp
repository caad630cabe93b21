#include "rewirekit/synthdata.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "rewirekit/edgelist.hpp"

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

[[noreturn]] void io_fail(const std::string& what) {
    throw std::runtime_error("sample file: " + what);
}

void expect_token(std::istream& in, const std::string& expected) {
    std::string tok;
    if (!(in >> tok) || tok != expected)
        io_fail("expected '" + expected + "', got '" + tok + "'");
}

}  // namespace

std::string to_string(DatasetKind kind) { return kind == DatasetKind::kA ? "a" : "b"; }

DatasetKind dataset_kind_from_string(const std::string& s) {
    if (s == "a" || s == "A") return DatasetKind::kA;
    if (s == "b" || s == "B") return DatasetKind::kB;
    throw std::invalid_argument("unknown dataset kind '" + s + "'");
}

std::vector<SizeBin> size_bins(const CorpusSpec& spec) {
    if (spec.min_size < 1 || spec.max_size < spec.min_size)
        throw std::invalid_argument("size_bins: bad size range");
    if (spec.bin_width < 1) throw std::invalid_argument("size_bins: bad bin width");
    std::vector<SizeBin> bins;
    for (int lo = spec.min_size; lo <= spec.max_size; lo += spec.bin_width)
        bins.push_back({lo, std::min(lo + spec.bin_width - 1, spec.max_size)});
    return bins;
}

Graph procedural_topology(int n, Rng& rng) {
    if (n < 1) throw std::invalid_argument("procedural_topology: n must be >= 1");
    if (n == 1) return Graph(1, {});

    constexpr int kMaxDegree = 4;
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    std::set<Edge> edge_set;
    auto add_edge = [&](int u, int v) {
        edge_set.emplace(std::min(u, v), std::max(u, v));
        ++degree[static_cast<std::size_t>(u)];
        ++degree[static_cast<std::size_t>(v)];
    };

    for (int i = 1; i < n; ++i) {
        std::vector<int> candidates;
        for (int j = 0; j < i; ++j)
            if (degree[static_cast<std::size_t>(j)] < kMaxDegree) candidates.push_back(j);
        const int parent =
            candidates[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(candidates.size()) - 1))];
        add_edge(parent, i);
    }

    // mean degree ~2.1
    const int target_edges = std::max(n - 1, static_cast<int>(std::llround(1.05 * n)));
    int attempts = 0;
    const int max_attempts = 60 * n + 40;
    while (static_cast<int>(edge_set.size()) < target_edges && attempts < max_attempts) {
        ++attempts;
        const int u = static_cast<int>(rng.uniform_int(0, n - 1));
        const int v = static_cast<int>(rng.uniform_int(0, n - 1));
        if (u == v) continue;
        if (degree[static_cast<std::size_t>(u)] >= kMaxDegree ||
            degree[static_cast<std::size_t>(v)] >= kMaxDegree)
            continue;
        if (edge_set.count({std::min(u, v), std::max(u, v)})) continue;
        add_edge(u, v);
    }

    return Graph(n, std::vector<Edge>(edge_set.begin(), edge_set.end()));
}

TopologySource::TopologySource(const CorpusSpec& spec) : spec_(spec) {
    if (spec_.edge_list_dir.empty()) return;
    std::vector<fs::path> paths;
    for (const auto& entry : fs::directory_iterator(spec_.edge_list_dir))
        if (entry.is_regular_file()) paths.push_back(entry.path());
    std::sort(paths.begin(), paths.end());
    for (const auto& p : paths) {
        Graph g = read_edge_list_file(p.string());
        if (!is_connected(g))
            throw std::runtime_error("topology corpus: disconnected graph in " + p.string());
        corpus_.push_back(std::move(g));
    }
    if (corpus_.empty())
        throw std::runtime_error("topology corpus: no edge-list files in " + spec_.edge_list_dir);
}

Graph TopologySource::sample_in_bin(const SizeBin& bin, Rng& rng) const {
    if (spec_.edge_list_dir.empty()) {
        const int n = static_cast<int>(rng.uniform_int(bin.lo, bin.hi));
        return procedural_topology(n, rng);
    }
    std::vector<const Graph*> fits;
    for (const Graph& g : corpus_)
        if (g.num_nodes() >= bin.lo && g.num_nodes() <= bin.hi) fits.push_back(&g);
    if (fits.empty())
        throw std::runtime_error("topology corpus: no file with size in bin [" +
                                 std::to_string(bin.lo) + "," + std::to_string(bin.hi) + "]");
    return *fits[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(fits.size()) - 1))];
}

Graph gen_topology(const CorpusSpec& spec, std::uint64_t seed) {
    const TopologySource source(spec);
    const std::vector<SizeBin> bins = size_bins(spec);
    Rng rng(seed);
    const auto bin = bins[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(bins.size()) - 1))];
    return source.sample_in_bin(bin, rng);
}

double target_data_a(const Graph& g, const std::vector<double>& values, double c1, double c2,
                     double c3, int d) {
    if (static_cast<int>(values.size()) != g.num_nodes())
        throw std::invalid_argument("target_data_a: values length mismatch");
    if (d < 1) throw std::invalid_argument("target_data_a: d must be >= 1");
    if (!is_connected(g))
        throw std::invalid_argument("target_data_a: graph must be connected");

    const DistanceMatrix dist = all_pairs_distances(g);
    double s1 = 0.0, s2 = 0.0, s3 = 0.0;
    for (int i = 0; i < g.num_nodes(); ++i) {
        for (int j = i + 1; j < g.num_nodes(); ++j) {
            const double e = std::exp(values[static_cast<std::size_t>(i)] +
                                      values[static_cast<std::size_t>(j)]);
            const int dd = dist.at(i, j);
            if (dd == 1) s1 += e;
            if (dd == d) s2 += e;
            if (dd != 1 && dd != d) s3 += e;
        }
    }
    return c1 * s1 + c2 * s2 + c3 * s3;
}

double target_data_b(const Graph& g, const std::vector<double>& values, double c1, double c2) {
    if (static_cast<int>(values.size()) != g.num_nodes())
        throw std::invalid_argument("target_data_b: values length mismatch");
    if (!g.has_colours()) throw std::invalid_argument("target_data_b: graph has no colour map");

    double s1 = 0.0;
    for (const auto& [u, v] : g.edges())
        s1 += std::exp(values[static_cast<std::size_t>(u)] + values[static_cast<std::size_t>(v)]);

    std::set<int> colour_ids;
    for (int c : g.colours())
        if (c != Graph::kUncoloured) colour_ids.insert(c);

    double s2 = 0.0;
    for (int c : colour_ids) {
        std::vector<int> members;
        for (int u = 0; u < g.num_nodes(); ++u)
            if (g.colour_of(u) == c) members.push_back(u);
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                s2 += std::exp(values[static_cast<std::size_t>(members[i])] +
                               values[static_cast<std::size_t>(members[j])]);
    }
    return c1 * s1 + c2 * s2;
}

namespace {

std::vector<double> draw_values(const Graph& g, Rng& rng) {
    std::vector<double> values(static_cast<std::size_t>(g.num_nodes()));
    for (double& v : values) v = rng.uniform01();
    return values;
}

}  // namespace

Dataset gen_dataset_a(const DatasetAConfig& config) {
    Dataset dataset;
    const struct {
        std::uint64_t tag;
        int count;
        const CorpusSpec* corpus;
        std::vector<Sample>* out;
    } splits[] = {{kTrainTag, config.train_count, &config.train_corpus, &dataset.train},
                  {kEvalTag, config.eval_count, &config.eval_corpus, &dataset.eval}};

    for (const auto& split : splits) {
        const TopologySource source(*split.corpus);
        const std::vector<SizeBin> bins = size_bins(*split.corpus);
        split.out->reserve(static_cast<std::size_t>(split.count));
        for (int i = 0; i < split.count; ++i) {
            const std::uint64_t sample_seed =
                mix_seed({config.seed, split.tag, static_cast<std::uint64_t>(i)});
            Rng rng(sample_seed);
            const SizeBin bin = bins[static_cast<std::size_t>(i) % bins.size()];
            Graph graph = source.sample_in_bin(bin, rng);
            const std::vector<double> values = draw_values(graph, rng);

            Sample sample;
            sample.features = Eigen::MatrixXd(graph.num_nodes(), 1);
            for (int u = 0; u < graph.num_nodes(); ++u)
                sample.features(u, 0) = values[static_cast<std::size_t>(u)];
            sample.target = target_data_a(graph, values, config.c1, config.c2, config.c3, config.d);
            sample.meta = SampleMeta{DatasetKind::kA, sample_seed, config.c1,
                                     config.c2,       config.c3,   config.d,
                                     0,               bin.lo};
            sample.graph = std::move(graph);
            split.out->push_back(std::move(sample));
        }
    }
    return dataset;
}

Dataset gen_dataset_b(const DatasetBConfig& config) {
    if (config.num_colours < 1) throw std::invalid_argument("gen_dataset_b: need >= 1 colour");
    Dataset dataset;
    const struct {
        std::uint64_t tag;
        int count;
        const CorpusSpec* corpus;
        std::vector<Sample>* out;
    } splits[] = {{kTrainTag, config.train_count, &config.train_corpus, &dataset.train},
                  {kEvalTag, config.eval_count, &config.eval_corpus, &dataset.eval}};

    for (const auto& split : splits) {
        const TopologySource source(*split.corpus);
        const std::vector<SizeBin> bins = size_bins(*split.corpus);
        split.out->reserve(static_cast<std::size_t>(split.count));
        for (int i = 0; i < split.count; ++i) {
            const std::uint64_t sample_seed =
                mix_seed({config.seed, split.tag, static_cast<std::uint64_t>(i)});
            Rng rng(sample_seed);
            const SizeBin bin = bins[static_cast<std::size_t>(i) % bins.size()];
            Graph bare = source.sample_in_bin(bin, rng);
            const std::vector<double> values = draw_values(bare, rng);

            const int k = static_cast<int>(rng.uniform_int(config.coloured_min, config.coloured_max));
            if (k > bare.num_nodes())
                throw std::runtime_error("gen_dataset_b: coloured count " + std::to_string(k) +
                                         " exceeds graph size " + std::to_string(bare.num_nodes()));
            std::vector<int> picks = rng.permutation(bare.num_nodes());
            std::vector<int> colour(static_cast<std::size_t>(bare.num_nodes()), Graph::kUncoloured);
            for (int j = 0; j < k; ++j)
                colour[static_cast<std::size_t>(picks[static_cast<std::size_t>(j)])] =
                    static_cast<int>(rng.uniform_int(0, config.num_colours - 1));
            Graph graph = bare.with_colours(std::move(colour));

            Sample sample;
            sample.features = Eigen::MatrixXd::Zero(graph.num_nodes(), 1 + config.num_colours);
            for (int u = 0; u < graph.num_nodes(); ++u) {
                sample.features(u, 0) = values[static_cast<std::size_t>(u)];
                const int c = graph.colour_of(u);
                if (c != Graph::kUncoloured) sample.features(u, 1 + c) = 1.0;
            }
            sample.target = target_data_b(graph, values, config.c1, config.c2);
            sample.meta = SampleMeta{DatasetKind::kB, sample_seed, config.c1,
                                     config.c2,       0.0,         0,
                                     config.num_colours, bin.lo};
            sample.graph = std::move(graph);
            split.out->push_back(std::move(sample));
        }
    }
    return dataset;
}

void write_samples(std::ostream& out, const std::vector<Sample>& samples) {
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const Sample& s = samples[i];
        out << "sample " << i << '\n';
        out << "meta kind=" << to_string(s.meta.kind) << " seed=" << s.meta.seed
            << " c1=" << fmt_double(s.meta.c1) << " c2=" << fmt_double(s.meta.c2)
            << " c3=" << fmt_double(s.meta.c3) << " d=" << s.meta.d
            << " colours=" << s.meta.num_colours << " bin=" << s.meta.size_bin << '\n';
        out << "nodes " << s.graph.num_nodes() << " edges " << s.graph.num_edges() << '\n';
        for (const auto& [u, v] : s.graph.edges()) out << u << ' ' << v << '\n';
        if (s.graph.has_colours()) {
            int count = 0;
            for (int c : s.graph.colours())
                if (c != Graph::kUncoloured) ++count;
            out << "colourmap " << count << '\n';
            for (int u = 0; u < s.graph.num_nodes(); ++u)
                if (s.graph.colour_of(u) != Graph::kUncoloured)
                    out << u << ' ' << s.graph.colour_of(u) << '\n';
        } else {
            out << "colourmap -1\n";
        }
        out << "features " << s.features.rows() << ' ' << s.features.cols() << '\n';
        for (Eigen::Index r = 0; r < s.features.rows(); ++r) {
            for (Eigen::Index c = 0; c < s.features.cols(); ++c) {
                if (c) out << ' ';
                out << fmt_double(s.features(r, c));
            }
            out << '\n';
        }
        out << "target " << fmt_double(s.target) << '\n';
        out << "end\n";
    }
}

std::vector<Sample> read_samples(std::istream& in) {
    std::vector<Sample> samples;
    std::string tok;
    while (in >> tok) {
        if (tok != "sample") io_fail("expected 'sample', got '" + tok + "'");
        std::size_t index = 0;
        in >> index;

        Sample s;
        expect_token(in, "meta");
        std::string meta_rest;
        std::getline(in, meta_rest);
        std::istringstream meta(meta_rest);
        std::string kv;
        while (meta >> kv) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos) io_fail("bad meta entry '" + kv + "'");
            const std::string key = kv.substr(0, eq);
            const std::string value = kv.substr(eq + 1);
            if (key == "kind") s.meta.kind = dataset_kind_from_string(value);
            else if (key == "seed") s.meta.seed = std::stoull(value);
            else if (key == "c1") s.meta.c1 = std::stod(value);
            else if (key == "c2") s.meta.c2 = std::stod(value);
            else if (key == "c3") s.meta.c3 = std::stod(value);
            else if (key == "d") s.meta.d = std::stoi(value);
            else if (key == "colours") s.meta.num_colours = std::stoi(value);
            else if (key == "bin") s.meta.size_bin = std::stoi(value);
            else io_fail("unknown meta key '" + key + "'");
        }

        expect_token(in, "nodes");
        int n = 0, m = 0;
        in >> n;
        expect_token(in, "edges");
        in >> m;
        std::vector<Edge> edges;
        edges.reserve(static_cast<std::size_t>(m));
        for (int e = 0; e < m; ++e) {
            int u = 0, v = 0;
            if (!(in >> u >> v)) io_fail("truncated edge block");
            edges.emplace_back(u, v);
        }
        expect_token(in, "colourmap");
        int colour_count = 0;
        in >> colour_count;
        if (colour_count < 0) {
            s.graph = Graph(n, edges);
        } else {
            std::vector<int> colour(static_cast<std::size_t>(n), Graph::kUncoloured);
            for (int e = 0; e < colour_count; ++e) {
                int node = 0, col = 0;
                if (!(in >> node >> col)) io_fail("truncated colour block");
                colour.at(static_cast<std::size_t>(node)) = col;
            }
            s.graph = Graph(n, edges, std::move(colour));
        }

        expect_token(in, "features");
        Eigen::Index rows = 0, cols = 0;
        in >> rows >> cols;
        s.features = Eigen::MatrixXd(rows, cols);
        for (Eigen::Index r = 0; r < rows; ++r)
            for (Eigen::Index c = 0; c < cols; ++c)
                if (!(in >> s.features(r, c))) io_fail("truncated feature block");

        expect_token(in, "target");
        if (!(in >> s.target)) io_fail("missing target");
        expect_token(in, "end");
        samples.push_back(std::move(s));
    }
    return samples;
}

void write_dataset(const Dataset& dataset, const std::string& dir) {
    fs::create_directories(dir);
    {
        std::ofstream out(fs::path(dir) / "train.samples");
        if (!out) throw std::runtime_error("cannot write train.samples in " + dir);
        write_samples(out, dataset.train);
    }
    {
        std::ofstream out(fs::path(dir) / "eval.samples");
        if (!out) throw std::runtime_error("cannot write eval.samples in " + dir);
        write_samples(out, dataset.eval);
    }
}

}  // namespace rewirekit
