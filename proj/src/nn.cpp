#include "rewirekit/nn.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "rewirekit/rng.hpp"

namespace rewirekit {

namespace {

constexpr double kBnEps = 1e-5;
constexpr double kBnMomentum = 0.1;
constexpr double kAdamBeta1 = 0.9;
constexpr double kAdamBeta2 = 0.999;
constexpr double kAdamEps = 1e-8;

void init_dense(DenseLayer& layer, int out_features, int in_features, Rng& rng) {
    layer.w = Eigen::MatrixXd(out_features, in_features);
    layer.b = Eigen::VectorXd(out_features);
    const double bound = 1.0 / std::sqrt(static_cast<double>(in_features));
    for (int r = 0; r < out_features; ++r)
        for (int c = 0; c < in_features; ++c)
            layer.w(r, c) = (2.0 * rng.uniform01() - 1.0) * bound;
    for (int r = 0; r < out_features; ++r) layer.b(r) = (2.0 * rng.uniform01() - 1.0) * bound;
}

DenseLayer dense_zeros(int out_features, int in_features) {
    return DenseLayer{Eigen::MatrixXd::Zero(out_features, in_features),
                      Eigen::VectorXd::Zero(out_features)};
}

Eigen::MatrixXd dense_forward(const DenseLayer& layer, const Eigen::MatrixXd& x) {
    return (x * layer.w.transpose()).rowwise() + layer.b.transpose();
}

// out rows [off, off+V) get (1+eps) * in_u + sum of in over u's neighbours.
void aggregate_segment(const Graph& g, double eps, const Eigen::MatrixXd& in, int off,
                       Eigen::MatrixXd& out) {
    for (int u = 0; u < g.num_nodes(); ++u) {
        out.row(off + u) = (1.0 + eps) * in.row(off + u);
        for (int v : g.neighbours(u)) out.row(off + u) += in.row(off + v);
    }
}

void bn_forward(const BatchNorm& bn, const Eigen::MatrixXd& z, RunMode mode, BnCache& cache,
                Eigen::MatrixXd& out) {
    const auto n = z.rows();
    if (mode == RunMode::kTrain) {
        cache.mean = z.colwise().mean().transpose();
        Eigen::MatrixXd centered = z.rowwise() - cache.mean.transpose();
        Eigen::VectorXd var =
            (centered.cwiseProduct(centered).colwise().sum() / static_cast<double>(n)).transpose();
        cache.inv_std = (var.array() + kBnEps).sqrt().inverse().matrix();
        cache.xhat = (centered.array().rowwise() * cache.inv_std.transpose().array()).matrix();
        const Eigen::VectorXd unbiased =
            n > 1 ? (var * (static_cast<double>(n) / static_cast<double>(n - 1))).eval() : var;
        cache.new_running_mean = (1.0 - kBnMomentum) * bn.running_mean + kBnMomentum * cache.mean;
        cache.new_running_var = (1.0 - kBnMomentum) * bn.running_var + kBnMomentum * unbiased;
    } else {
        cache.mean = bn.running_mean;
        cache.inv_std = (bn.running_var.array() + kBnEps).sqrt().inverse().matrix();
        cache.xhat = ((z.rowwise() - cache.mean.transpose()).array().rowwise() *
                      cache.inv_std.transpose().array())
                         .matrix();
    }
    out = ((cache.xhat.array().rowwise() * bn.gamma.transpose().array()).rowwise() +
           bn.beta.transpose().array())
              .matrix();
}

// Train-mode batch-norm gradient; accumulates dgamma/dbeta, returns dz.
Eigen::MatrixXd bn_backward(const BatchNorm& bn, const BnCache& cache, const Eigen::MatrixXd& dout,
                            Eigen::VectorXd& dgamma, Eigen::VectorXd& dbeta) {
    dgamma += dout.cwiseProduct(cache.xhat).colwise().sum().transpose();
    dbeta += dout.colwise().sum().transpose();

    const double n = static_cast<double>(dout.rows());
    const Eigen::MatrixXd dxhat =
        (dout.array().rowwise() * bn.gamma.transpose().array()).matrix();
    const Eigen::RowVectorXd sum_dxhat = dxhat.colwise().sum();
    const Eigen::RowVectorXd sum_dxhat_xhat = dxhat.cwiseProduct(cache.xhat).colwise().sum();

    Eigen::MatrixXd tmp = n * dxhat;
    tmp.rowwise() -= sum_dxhat;
    tmp -= (cache.xhat.array().rowwise() * sum_dxhat_xhat.array()).matrix();
    return (tmp.array().rowwise() * (cache.inv_std.transpose().array() / n)).matrix();
}

Eigen::MatrixXd relu(const Eigen::MatrixXd& z) { return z.cwiseMax(0.0); }

Eigen::MatrixXd relu_backward(const Eigen::MatrixXd& dout, const Eigen::MatrixXd& activated) {
    return (dout.array() * (activated.array() > 0.0).cast<double>()).matrix();
}

void check_batch(const GinModel& model, const Batch& batch) {
    if (batch.empty()) throw std::invalid_argument("nn: empty batch");
    for (const BatchItem& item : batch) {
        if (!item.sample || !item.plan) throw std::invalid_argument("nn: null batch item");
        if (static_cast<int>(item.plan->schedule.size()) != model.num_layers)
            throw std::invalid_argument("nn: plan schedule length != model layer count");
        if (!(item.plan->base == item.sample->graph))
            throw std::invalid_argument("nn: plan base graph != sample graph");
        if (item.sample->features.cols() != model.in_features)
            throw std::invalid_argument("nn: feature width != model in_features");
        if (item.sample->features.rows() != item.sample->graph.num_nodes())
            throw std::invalid_argument("nn: feature rows != node count");
        if (item.plan->rewired.num_nodes() != item.plan->base.num_nodes())
            throw std::invalid_argument("nn: rewired node count != base node count");
    }
}

}  // namespace

GinModel GinModel::create(int in_features, int hidden, int num_layers, std::uint64_t seed) {
    if (in_features < 1 || hidden < 1 || num_layers < 1)
        throw std::invalid_argument("GinModel::create: bad dimensions");
    GinModel model;
    model.in_features = in_features;
    model.hidden = hidden;
    model.num_layers = num_layers;

    Rng rng(seed);
    init_dense(model.input, hidden, in_features, rng);
    model.layers.resize(static_cast<std::size_t>(num_layers));
    for (GinLayer& layer : model.layers) {
        layer.eps = 0.0;
        init_dense(layer.fc1, hidden, hidden, rng);
        layer.bn.gamma = Eigen::VectorXd::Ones(hidden);
        layer.bn.beta = Eigen::VectorXd::Zero(hidden);
        layer.bn.running_mean = Eigen::VectorXd::Zero(hidden);
        layer.bn.running_var = Eigen::VectorXd::Ones(hidden);
        init_dense(layer.fc2, hidden, hidden, rng);
    }
    init_dense(model.out_hidden, hidden, hidden, rng);
    init_dense(model.out_final, 1, hidden, rng);
    return model;
}

std::size_t GinModel::parameter_count() const {
    std::size_t total = 0;
    visit_parameters(*this, [&](const std::string&, const double*, std::size_t n) { total += n; });
    return total;
}

GinGradients GinGradients::zeros_like(const GinModel& model) {
    GinGradients g;
    g.input = dense_zeros(model.hidden, model.in_features);
    g.layers.resize(static_cast<std::size_t>(model.num_layers));
    for (GinLayer& layer : g.layers) {
        layer.eps = 0.0;
        layer.fc1 = dense_zeros(model.hidden, model.hidden);
        layer.bn.gamma = Eigen::VectorXd::Zero(model.hidden);
        layer.bn.beta = Eigen::VectorXd::Zero(model.hidden);
        layer.fc2 = dense_zeros(model.hidden, model.hidden);
    }
    g.out_hidden = dense_zeros(model.hidden, model.hidden);
    g.out_final = dense_zeros(1, model.hidden);
    return g;
}

Eigen::MatrixXd aggregate_neighbours(const Graph& g, double eps, const Eigen::MatrixXd& h) {
    if (h.rows() != g.num_nodes())
        throw std::invalid_argument("aggregate_neighbours: row count != node count");
    Eigen::MatrixXd out(h.rows(), h.cols());
    aggregate_segment(g, eps, h, 0, out);
    return out;
}

Eigen::MatrixXd gin_layer_forward(const Eigen::MatrixXd& h, const Graph& g, const GinLayer& layer,
                                  RunMode mode) {
    const Eigen::MatrixXd m = aggregate_neighbours(g, layer.eps, h);
    const Eigen::MatrixXd z1 = dense_forward(layer.fc1, m);
    BnCache bn_cache;
    Eigen::MatrixXd z1n;
    bn_forward(layer.bn, z1, mode, bn_cache, z1n);
    return dense_forward(layer.fc2, relu(z1n));
}

Eigen::VectorXd batch_forward(const GinModel& model, const Batch& batch, RunMode mode,
                              BatchCache& cache) {
    check_batch(model, batch);
    const int num_graphs = static_cast<int>(batch.size());

    cache.mode = mode;
    cache.offsets.assign(static_cast<std::size_t>(num_graphs) + 1, 0);
    for (int i = 0; i < num_graphs; ++i)
        cache.offsets[static_cast<std::size_t>(i) + 1] =
            cache.offsets[static_cast<std::size_t>(i)] +
            batch[static_cast<std::size_t>(i)].sample->graph.num_nodes();
    const int total_rows = cache.offsets.back();

    cache.x = Eigen::MatrixXd(total_rows, model.in_features);
    for (int i = 0; i < num_graphs; ++i) {
        const Sample& s = *batch[static_cast<std::size_t>(i)].sample;
        cache.x.middleRows(cache.offsets[static_cast<std::size_t>(i)], s.graph.num_nodes()) =
            s.features;
    }

    Eigen::MatrixXd h = dense_forward(model.input, cache.x);

    cache.layers.assign(static_cast<std::size_t>(model.num_layers), LayerCache{});
    for (int l = 0; l < model.num_layers; ++l) {
        LayerCache& lc = cache.layers[static_cast<std::size_t>(l)];
        const GinLayer& layer = model.layers[static_cast<std::size_t>(l)];

        lc.h_in = std::move(h);
        lc.graphs.resize(static_cast<std::size_t>(num_graphs));
        lc.m = Eigen::MatrixXd(total_rows, model.hidden);
        for (int i = 0; i < num_graphs; ++i) {
            const RewirePlan& plan = *batch[static_cast<std::size_t>(i)].plan;
            const Graph& g = plan.schedule[static_cast<std::size_t>(l)] == LayerTag::kBase
                                 ? plan.base
                                 : plan.rewired;
            lc.graphs[static_cast<std::size_t>(i)] = &g;
            aggregate_segment(g, layer.eps, lc.h_in, cache.offsets[static_cast<std::size_t>(i)],
                              lc.m);
        }

        const Eigen::MatrixXd z1 = dense_forward(layer.fc1, lc.m);
        Eigen::MatrixXd z1n;
        bn_forward(layer.bn, z1, mode, lc.bn, z1n);
        lc.r = relu(z1n);
        h = dense_forward(layer.fc2, lc.r);
    }
    cache.h_final = std::move(h);

    cache.pooled = Eigen::MatrixXd(num_graphs, model.hidden);
    for (int i = 0; i < num_graphs; ++i) {
        const int off = cache.offsets[static_cast<std::size_t>(i)];
        const int count = cache.offsets[static_cast<std::size_t>(i) + 1] - off;
        cache.pooled.row(i) = cache.h_final.middleRows(off, count).colwise().sum();
    }

    cache.q1 = dense_forward(model.out_hidden, cache.pooled);
    cache.r1 = relu(cache.q1);
    cache.preds = dense_forward(model.out_final, cache.r1).col(0);
    return cache.preds;
}

Eigen::VectorXd batch_predict(const GinModel& model, const Batch& batch, RunMode mode) {
    BatchCache cache;
    return batch_forward(model, batch, mode, cache);
}

double model_forward(const GinModel& model, const Sample& sample, const RewirePlan& plan,
                     RunMode mode) {
    const Batch batch{BatchItem{&sample, &plan}};
    return batch_predict(model, batch, mode)(0);
}

double loss_mse(const Eigen::VectorXd& pred, const Eigen::VectorXd& target) {
    if (pred.size() == 0 || pred.size() != target.size())
        throw std::invalid_argument("loss_mse: size mismatch or empty input");
    return (pred - target).squaredNorm() / static_cast<double>(pred.size());
}

namespace {

void zero_gradients(GinGradients& grads, const GinModel& model) {
    if (grads.layers.size() != model.layers.size() || grads.input.w.size() == 0) {
        grads = GinGradients::zeros_like(model);
        return;
    }
    grads.input.w.setZero();
    grads.input.b.setZero();
    for (GinLayer& layer : grads.layers) {
        layer.eps = 0.0;
        layer.fc1.w.setZero();
        layer.fc1.b.setZero();
        layer.bn.gamma.setZero();
        layer.bn.beta.setZero();
        layer.fc2.w.setZero();
        layer.fc2.b.setZero();
    }
    grads.out_hidden.w.setZero();
    grads.out_hidden.b.setZero();
    grads.out_final.w.setZero();
    grads.out_final.b.setZero();
}

}  // namespace

double batch_loss_and_gradients(const GinModel& model, const Batch& batch, GinGradients& grads,
                                BatchCache& cache) {
    const Eigen::VectorXd preds = batch_forward(model, batch, RunMode::kTrain, cache);
    const int num_graphs = static_cast<int>(batch.size());

    Eigen::VectorXd targets(num_graphs);
    for (int i = 0; i < num_graphs; ++i)
        targets(i) = batch[static_cast<std::size_t>(i)].sample->target;
    const double loss = loss_mse(preds, targets);

    zero_gradients(grads, model);

    const Eigen::VectorXd dpred = 2.0 / static_cast<double>(num_graphs) * (preds - targets);

    grads.out_final.w += dpred.transpose() * cache.r1;
    grads.out_final.b(0) += dpred.sum();
    const Eigen::MatrixXd dr1 = dpred * model.out_final.w;
    const Eigen::MatrixXd dq1 = relu_backward(dr1, cache.r1);

    grads.out_hidden.w += dq1.transpose() * cache.pooled;
    grads.out_hidden.b += dq1.colwise().sum().transpose();
    const Eigen::MatrixXd dpooled = dq1 * model.out_hidden.w;

    Eigen::MatrixXd dh = Eigen::MatrixXd::Zero(cache.h_final.rows(), model.hidden);
    for (int i = 0; i < num_graphs; ++i) {
        const int off = cache.offsets[static_cast<std::size_t>(i)];
        const int count = cache.offsets[static_cast<std::size_t>(i) + 1] - off;
        dh.middleRows(off, count).rowwise() += dpooled.row(i);
    }

    for (int l = model.num_layers - 1; l >= 0; --l) {
        const LayerCache& lc = cache.layers[static_cast<std::size_t>(l)];
        const GinLayer& layer = model.layers[static_cast<std::size_t>(l)];
        GinLayer& glayer = grads.layers[static_cast<std::size_t>(l)];

        glayer.fc2.w += dh.transpose() * lc.r;
        glayer.fc2.b += dh.colwise().sum().transpose();
        const Eigen::MatrixXd dr = dh * layer.fc2.w;
        const Eigen::MatrixXd dz1n = relu_backward(dr, lc.r);
        const Eigen::MatrixXd dz1 = bn_backward(layer.bn, lc.bn, dz1n, glayer.bn.gamma,
                                                glayer.bn.beta);

        glayer.fc1.w += dz1.transpose() * lc.m;
        glayer.fc1.b += dz1.colwise().sum().transpose();
        const Eigen::MatrixXd dm = dz1 * layer.fc1.w;

        glayer.eps += lc.h_in.cwiseProduct(dm).sum();
        dh.setZero();
        for (int i = 0; i < num_graphs; ++i)
            aggregate_segment(*lc.graphs[static_cast<std::size_t>(i)], layer.eps, dm,
                              cache.offsets[static_cast<std::size_t>(i)], dh);
    }

    grads.input.w += dh.transpose() * cache.x;
    grads.input.b += dh.colwise().sum().transpose();
    return loss;
}

double backward(const GinModel& model, const Batch& batch, GinGradients& grads) {
    BatchCache cache;
    return batch_loss_and_gradients(model, batch, grads, cache);
}

void apply_running_stats(GinModel& model, const BatchCache& cache) {
    if (cache.mode != RunMode::kTrain)
        throw std::logic_error("apply_running_stats: cache not from a train-mode pass");
    for (std::size_t l = 0; l < model.layers.size(); ++l) {
        const BnCache& bc = cache.layers[l].bn;
        if (bc.new_running_mean.size() == 0) continue;
        model.layers[l].bn.running_mean = bc.new_running_mean;
        model.layers[l].bn.running_var = bc.new_running_var;
    }
}

double learning_rate(const TrainSchedule& schedule, int epoch) {
    if (epoch < 0) throw std::invalid_argument("learning_rate: negative epoch");
    if (schedule.peak_lr <= 0.0 || schedule.decay_per_epoch <= 0.0)
        throw std::invalid_argument("learning_rate: nonpositive schedule");
    double lr;
    if (epoch < schedule.warmup_epochs)
        lr = schedule.peak_lr * static_cast<double>(epoch + 1) /
             static_cast<double>(schedule.warmup_epochs);
    else
        lr = schedule.peak_lr *
             std::pow(schedule.decay_per_epoch, static_cast<double>(epoch - schedule.warmup_epochs));
    if (!(lr > 0.0)) throw std::logic_error("learning_rate: schedule produced nonpositive lr");
    return lr;
}

namespace {

struct FlatView {
    std::vector<double*> data;
    std::vector<std::size_t> sizes;
    std::size_t total = 0;
};

FlatView flatten(GinModel& model) {
    FlatView view;
    visit_parameters(model, [&](const std::string&, double* p, std::size_t n) {
        view.data.push_back(p);
        view.sizes.push_back(n);
        view.total += n;
    });
    return view;
}

FlatView flatten(GinGradients& grads) {
    FlatView view;
    visit_parameters(grads, [&](const std::string&, double* p, std::size_t n) {
        view.data.push_back(p);
        view.sizes.push_back(n);
        view.total += n;
    });
    return view;
}

}  // namespace

TrainResult train(GinModel model, const std::vector<Sample>& train_samples,
                  const std::vector<RewirePlan>& train_plans,
                  const std::vector<Sample>& eval_samples,
                  const std::vector<RewirePlan>& eval_plans, const TrainSchedule& schedule,
                  std::uint64_t seed) {
    if (train_samples.empty()) throw std::invalid_argument("train: no training samples");
    if (train_samples.size() != train_plans.size() || eval_samples.size() != eval_plans.size())
        throw std::invalid_argument("train: one plan per sample required");
    if (schedule.batch_size < 1) throw std::invalid_argument("train: batch size must be >= 1");

    GinGradients grads = GinGradients::zeros_like(model);
    FlatView params = flatten(model);
    FlatView grad_view = flatten(grads);

    std::vector<double> adam_m(params.total, 0.0), adam_v(params.total, 0.0);
    long long step = 0;

    Rng shuffle_rng(mix_seed({seed, hash_tag("epoch-shuffle")}));
    std::vector<int> order(train_samples.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);

    TrainResult result;
    BatchCache cache;
    for (int epoch = 0; epoch < schedule.total_epochs; ++epoch) {
        const double lr = learning_rate(schedule, epoch);
        shuffle_rng.shuffle(order);

        double sq_error_sum = 0.0;
        for (std::size_t start = 0; start < order.size();
             start += static_cast<std::size_t>(schedule.batch_size)) {
            const std::size_t stop =
                std::min(order.size(), start + static_cast<std::size_t>(schedule.batch_size));
            Batch batch;
            batch.reserve(stop - start);
            for (std::size_t k = start; k < stop; ++k) {
                const auto idx = static_cast<std::size_t>(order[k]);
                batch.push_back(BatchItem{&train_samples[idx], &train_plans[idx]});
            }

            const double loss = batch_loss_and_gradients(model, batch, grads, cache);
            if (!std::isfinite(loss))
                throw std::runtime_error("train: non-finite loss at epoch " +
                                         std::to_string(epoch) + ", batch starting at sample " +
                                         std::to_string(start));
            sq_error_sum += loss * static_cast<double>(batch.size());

            ++step;
            const double bc1 = 1.0 - std::pow(kAdamBeta1, static_cast<double>(step));
            const double bc2 = 1.0 - std::pow(kAdamBeta2, static_cast<double>(step));
            std::size_t flat = 0;
            for (std::size_t t = 0; t < params.data.size(); ++t) {
                double* p = params.data[t];
                const double* g = grad_view.data[t];
                for (std::size_t i = 0; i < params.sizes[t]; ++i, ++flat) {
                    adam_m[flat] = kAdamBeta1 * adam_m[flat] + (1.0 - kAdamBeta1) * g[i];
                    adam_v[flat] = kAdamBeta2 * adam_v[flat] + (1.0 - kAdamBeta2) * g[i] * g[i];
                    const double m_hat = adam_m[flat] / bc1;
                    const double v_hat = adam_v[flat] / bc2;
                    p[i] -= lr * m_hat / (std::sqrt(v_hat) + kAdamEps);
                }
            }
            apply_running_stats(model, cache);
        }

        EpochMetrics metrics;
        metrics.epoch = epoch;
        metrics.lr = lr;
        metrics.train_mse = sq_error_sum / static_cast<double>(train_samples.size());
        metrics.eval_mse = eval_samples.empty()
                               ? 0.0
                               : eval_mse(model, eval_samples, eval_plans, schedule.batch_size);
        result.history.push_back(metrics);
    }

    result.model = std::move(model);
    return result;
}

double eval_mse(const GinModel& model, const std::vector<Sample>& samples,
                const std::vector<RewirePlan>& plans, int batch_size) {
    if (samples.empty()) throw std::invalid_argument("eval_mse: no samples");
    if (samples.size() != plans.size())
        throw std::invalid_argument("eval_mse: one plan per sample required");
    if (batch_size < 1) throw std::invalid_argument("eval_mse: bad batch size");

    double sq_error_sum = 0.0;
    for (std::size_t start = 0; start < samples.size();
         start += static_cast<std::size_t>(batch_size)) {
        const std::size_t stop = std::min(samples.size(), start + static_cast<std::size_t>(batch_size));
        Batch batch;
        batch.reserve(stop - start);
        for (std::size_t k = start; k < stop; ++k)
            batch.push_back(BatchItem{&samples[k], &plans[k]});
        const Eigen::VectorXd preds = batch_predict(model, batch, RunMode::kEval);
        for (std::size_t k = start; k < stop; ++k) {
            const double diff = preds(static_cast<Eigen::Index>(k - start)) - samples[k].target;
            sq_error_sum += diff * diff;
        }
    }
    return sq_error_sum / static_cast<double>(samples.size());
}

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

template <typename ModelT, typename F>
void visit_buffers(ModelT& model, F&& f) {
    for (std::size_t l = 0; l < model.layers.size(); ++l) {
        auto& bn = model.layers[l].bn;
        const std::string prefix = "layers." + std::to_string(l) + ".bn";
        f(prefix + ".running_mean", bn.running_mean.data(),
          static_cast<std::size_t>(bn.running_mean.size()));
        f(prefix + ".running_var", bn.running_var.data(),
          static_cast<std::size_t>(bn.running_var.size()));
    }
}

}  // namespace

void save_model(const GinModel& model, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_model: cannot open " + path);
    out << "rewirekit-gin 1\n";
    out << "dims " << model.in_features << ' ' << model.hidden << ' ' << model.num_layers << '\n';
    auto dump = [&](const std::string& name, const double* p, std::size_t n) {
        out << "param " << name << ' ' << n << '\n';
        for (std::size_t i = 0; i < n; ++i) {
            if (i) out << ' ';
            out << fmt_double(p[i]);
        }
        out << '\n';
    };
    visit_parameters(model, dump);
    visit_buffers(model, dump);
    if (!out) throw std::runtime_error("save_model: write failed for " + path);
}

GinModel load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_model: cannot open " + path);
    std::string magic;
    int version = 0;
    if (!(in >> magic >> version) || magic != "rewirekit-gin" || version != 1)
        throw std::runtime_error("load_model: bad header in " + path);
    std::string tok;
    int in_features = 0, hidden = 0, num_layers = 0;
    if (!(in >> tok >> in_features >> hidden >> num_layers) || tok != "dims")
        throw std::runtime_error("load_model: bad dims line in " + path);

    GinModel model = GinModel::create(in_features, hidden, num_layers, 0);
    auto read_into = [&](const std::string& name, double* p, std::size_t n) {
        std::string kw, got;
        std::size_t count = 0;
        if (!(in >> kw >> got >> count) || kw != "param" || got != name || count != n)
            throw std::runtime_error("load_model: expected param " + name);
        for (std::size_t i = 0; i < n; ++i)
            if (!(in >> p[i])) throw std::runtime_error("load_model: truncated param " + name);
    };
    visit_parameters(model, read_into);
    visit_buffers(model, read_into);
    return model;
}

}  // namespace rewirekit
