#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "rewirekit/rewire.hpp"
#include "rewirekit/synthdata.hpp"

namespace rewirekit {

enum class RunMode { kTrain, kEval };

// out = x * w^T + b (rows are samples/nodes).
struct DenseLayer {
    Eigen::MatrixXd w;  // out_features x in_features
    Eigen::VectorXd b;  // out_features
};

struct BatchNorm {
    Eigen::VectorXd gamma, beta;
    Eigen::VectorXd running_mean, running_var;
};

// One GIN layer: learnable eps plus phi = dense -> batch-norm -> ReLU -> dense.
struct GinLayer {
    double eps = 0.0;
    DenseLayer fc1;
    BatchNorm bn;
    DenseLayer fc2;
};

// Input linear to `hidden` channels, `num_layers` GIN layers, additive
// pooling, then a two-layer output MLP to a scalar. All 64-bit.
struct GinModel {
    int in_features = 0;
    int hidden = 0;
    int num_layers = 0;
    DenseLayer input;
    std::vector<GinLayer> layers;
    DenseLayer out_hidden;  // hidden -> hidden
    DenseLayer out_final;   // hidden -> 1

    // Uniform fan-in init for dense layers, eps = 0, gamma = 1, beta = 0.
    static GinModel create(int in_features, int hidden, int num_layers, std::uint64_t seed);

    // Trainable parameters only (running stats are buffers).
    std::size_t parameter_count() const;
};

// Gradient holder with the same shapes as the model's trainable parameters.
struct GinGradients {
    DenseLayer input;
    std::vector<GinLayer> layers;  // bn running stats unused
    DenseLayer out_hidden;
    DenseLayer out_final;

    static GinGradients zeros_like(const GinModel& model);
};

struct BatchItem {
    const Sample* sample = nullptr;
    const RewirePlan* plan = nullptr;
};
using Batch = std::vector<BatchItem>;

// (1+eps) h_u + sum over neighbours; the message half of Eq-style GIN update.
Eigen::MatrixXd aggregate_neighbours(const Graph& g, double eps, const Eigen::MatrixXd& h);

// Full GIN layer on one graph: aggregate then phi. Train mode normalizes
// with batch statistics over the node rows, eval mode with running stats.
Eigen::MatrixXd gin_layer_forward(const Eigen::MatrixXd& h, const Graph& g, const GinLayer& layer,
                                  RunMode mode);

struct BnCache {
    Eigen::VectorXd mean;
    Eigen::VectorXd inv_std;
    Eigen::MatrixXd xhat;
    Eigen::VectorXd new_running_mean, new_running_var;  // train mode only
};

struct LayerCache {
    std::vector<const Graph*> graphs;  // adjacency used by this layer, per item
    Eigen::MatrixXd h_in;              // layer input
    Eigen::MatrixXd m;                 // aggregated messages
    BnCache bn;
    Eigen::MatrixXd r;                 // ReLU output inside phi
};

// Per-layer and readout activations kept for the backward pass, plus the
// batch-statistics running updates to apply after the optimizer step.
struct BatchCache {
    RunMode mode = RunMode::kTrain;
    std::vector<int> offsets;  // per-item first row; last entry = total rows
    Eigen::MatrixXd x;
    std::vector<LayerCache> layers;
    Eigen::MatrixXd h_final;
    Eigen::MatrixXd pooled, q1, r1;
    Eigen::VectorXd preds;
};

// Predictions for a batch (one scalar per graph). Validates that each plan
// matches its sample and the model depth.
Eigen::VectorXd batch_forward(const GinModel& model, const Batch& batch, RunMode mode,
                              BatchCache& cache);
Eigen::VectorXd batch_predict(const GinModel& model, const Batch& batch, RunMode mode);

double model_forward(const GinModel& model, const Sample& sample, const RewirePlan& plan,
                     RunMode mode);

double loss_mse(const Eigen::VectorXd& pred, const Eigen::VectorXd& target);

// Train-mode forward plus exact reverse-mode gradients of the batch MSE
// w.r.t. every trainable parameter. Returns the loss; running-stat updates
// are left in `cache`.
double batch_loss_and_gradients(const GinModel& model, const Batch& batch, GinGradients& grads,
                                BatchCache& cache);

// Convenience wrapper when the caller does not manage the cache.
double backward(const GinModel& model, const Batch& batch, GinGradients& grads);

void apply_running_stats(GinModel& model, const BatchCache& cache);

struct TrainSchedule {
    double peak_lr = 1e-4;
    int total_epochs = 200;
    int warmup_epochs = 50;
    double decay_per_epoch = 0.95;
    int batch_size = 32;
};

// Linear warmup to peak over warmup_epochs, then geometric decay.
double learning_rate(const TrainSchedule& schedule, int epoch);

struct EpochMetrics {
    int epoch = 0;
    double lr = 0.0;
    double train_mse = 0.0;
    double eval_mse = 0.0;
};

struct TrainResult {
    GinModel model;
    std::vector<EpochMetrics> history;
};

// Adam with beta1 = 0.9, beta2 = 0.999, eps = 1e-8; per-epoch shuffling from
// `seed`; eval passes use running batch-norm statistics. Aborts on NaN loss.
TrainResult train(GinModel model, const std::vector<Sample>& train_samples,
                  const std::vector<RewirePlan>& train_plans,
                  const std::vector<Sample>& eval_samples,
                  const std::vector<RewirePlan>& eval_plans, const TrainSchedule& schedule,
                  std::uint64_t seed);

double eval_mse(const GinModel& model, const std::vector<Sample>& samples,
                const std::vector<RewirePlan>& plans, int batch_size);

// Decimal-text checkpoint with a shape header; round-trips exactly.
void save_model(const GinModel& model, const std::string& path);
GinModel load_model(const std::string& path);

// Fixed-order visitation of every trainable parameter (used by the
// optimizer, checkpointing, and determinism tests).
template <typename ModelT, typename F>
void visit_parameters(ModelT& model, F&& f) {
    auto dense = [&](auto& layer, const std::string& name) {
        f(name + ".w", layer.w.data(), static_cast<std::size_t>(layer.w.size()));
        f(name + ".b", layer.b.data(), static_cast<std::size_t>(layer.b.size()));
    };
    dense(model.input, "input");
    for (std::size_t l = 0; l < model.layers.size(); ++l) {
        auto& layer = model.layers[l];
        const std::string prefix = "layers." + std::to_string(l);
        f(prefix + ".eps", &layer.eps, std::size_t{1});
        dense(layer.fc1, prefix + ".fc1");
        f(prefix + ".bn.gamma", layer.bn.gamma.data(), static_cast<std::size_t>(layer.bn.gamma.size()));
        f(prefix + ".bn.beta", layer.bn.beta.data(), static_cast<std::size_t>(layer.bn.beta.size()));
        dense(layer.fc2, prefix + ".fc2");
    }
    dense(model.out_hidden, "out_hidden");
    dense(model.out_final, "out_final");
}

}  // namespace rewirekit
