// SPDX-License-Identifier: Apache-2.0
#include "fedring/flcore/training.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace fedring::flcore {

namespace {

struct Workspace {
    // per-layer activations a_0..a_L and pre-activations z_1..z_L
    std::vector<std::vector<double>> acts;
    std::vector<std::vector<double>> deltas;

    explicit Workspace(const ModelArch& arch) {
        acts.resize(arch.layer_widths.size());
        deltas.resize(arch.layer_widths.size());
        for (size_t l = 0; l < arch.layer_widths.size(); l++) {
            acts[l].resize(arch.layer_widths[l]);
            deltas[l].resize(arch.layer_widths[l]);
        }
    }
};

// forward pass storing activations; returns softmax cross-entropy loss
double forward(const ModelParams& params, const float* x, int32_t label, Workspace& ws) {
    const auto& widths = params.arch.layer_widths;
    const size_t layers = widths.size() - 1;
    for (size_t i = 0; i < widths[0]; i++) ws.acts[0][i] = x[i];

    size_t off = 0;
    for (size_t l = 0; l < layers; l++) {
        const size_t fan_in = widths[l], fan_out = widths[l + 1];
        const double* w = params.weights.data() + off;
        const double* b = w + fan_in * fan_out;
        const double* in = ws.acts[l].data();
        double* out = ws.acts[l + 1].data();
        const bool hidden = l + 1 < layers;
        for (size_t o = 0; o < fan_out; o++) {
            const double* row = w + o * fan_in;
            double z = b[o];
            for (size_t i = 0; i < fan_in; i++) z += row[i] * in[i];
            out[o] = hidden && z < 0.0 ? 0.0 : z;
        }
        off += (fan_in + 1) * fan_out;
    }

    const auto& logits = ws.acts[layers];
    double mx = *std::max_element(logits.begin(), logits.end());
    double sum = 0.0;
    for (double z : logits) sum += std::exp(z - mx);
    return std::log(sum) + mx - logits[static_cast<size_t>(label)];
}

// backward pass accumulating the sample gradient into grad
void backward(const ModelParams& params, int32_t label, Workspace& ws,
              std::span<double> grad) {
    const auto& widths = params.arch.layer_widths;
    const size_t layers = widths.size() - 1;

    // output delta: softmax - onehot
    auto& out_delta = ws.deltas[layers];
    const auto& logits = ws.acts[layers];
    double mx = *std::max_element(logits.begin(), logits.end());
    double sum = 0.0;
    for (size_t o = 0; o < logits.size(); o++) {
        out_delta[o] = std::exp(logits[o] - mx);
        sum += out_delta[o];
    }
    for (size_t o = 0; o < logits.size(); o++) out_delta[o] /= sum;
    out_delta[static_cast<size_t>(label)] -= 1.0;

    // walk layers backward; off points at the start of layer l's block
    size_t off = params.weights.size();
    for (size_t l = layers; l-- > 0;) {
        const size_t fan_in = widths[l], fan_out = widths[l + 1];
        off -= (fan_in + 1) * fan_out;
        const double* w = params.weights.data() + off;
        double* gw = grad.data() + off;
        double* gb = gw + fan_in * fan_out;
        const double* in = ws.acts[l].data();
        const double* delta = ws.deltas[l + 1].data();
        double* prev_delta = ws.deltas[l].data();

        if (l > 0) std::fill(prev_delta, prev_delta + fan_in, 0.0);
        for (size_t o = 0; o < fan_out; o++) {
            const double d = delta[o];
            if (d == 0.0) continue;
            double* grow = gw + o * fan_in;
            const double* wrow = w + o * fan_in;
            for (size_t i = 0; i < fan_in; i++) grow[i] += d * in[i];
            gb[o] += d;
            if (l > 0)
                for (size_t i = 0; i < fan_in; i++) prev_delta[i] += d * wrow[i];
        }
        if (l > 0) {
            // ReLU mask: activation zero means the unit was clamped
            for (size_t i = 0; i < fan_in; i++)
                if (ws.acts[l][i] <= 0.0) prev_delta[i] = 0.0;
        }
    }
}

void check_shapes(const ModelParams& params, const LocalDataset& data) {
    params.arch.validate();
    data.validate();
    if (params.weights.size() != params.arch.param_count())
        throw std::invalid_argument("model weights do not match architecture");
    if (data.feature_dim != params.arch.input_width())
        throw std::invalid_argument("dataset feature width does not match architecture");
    for (int32_t y : data.labels)
        if (static_cast<uint32_t>(y) >= params.arch.output_width())
            throw std::invalid_argument("label outside architecture output width");
}

}  // namespace

void Hyperparams::validate() const {
    if (learning_rate <= 0.0 || batch_size == 0 || max_rounds == 0 || tolerance <= 0.0)
        throw std::invalid_argument("Hyperparams: all fields must be positive");
}

double loss_and_gradient(const ModelParams& params, const float* x, int32_t label,
                         std::span<double> grad_out) {
    if (grad_out.size() != params.weights.size())
        throw std::invalid_argument("loss_and_gradient: gradient buffer size mismatch");
    std::fill(grad_out.begin(), grad_out.end(), 0.0);
    Workspace ws(params.arch);
    double loss = forward(params, x, label, ws);
    backward(params, label, ws, grad_out);
    return loss;
}

std::vector<double> forward_logits(const ModelParams& params, const float* x) {
    Workspace ws(params.arch);
    forward(params, x, 0, ws);
    return ws.acts.back();
}

TrainResult local_update(const LocalDataset& data, const ModelParams& start,
                         const Hyperparams& hp, Rng& rng) {
    if (data.size() == 0) throw std::invalid_argument("local_update: empty dataset");
    check_shapes(start, data);
    hp.validate();

    TrainResult result;
    result.params = start;
    if (hp.local_epochs == 0) return result;

    Workspace ws(start.arch);
    std::vector<double> grad(start.weights.size());
    std::vector<size_t> order(data.size());
    std::iota(order.begin(), order.end(), size_t{0});

    for (uint32_t epoch = 0; epoch < hp.local_epochs; epoch++) {
        rng.shuffle(order);
        double epoch_loss = 0.0;
        for (size_t pos = 0; pos < order.size(); pos += hp.batch_size) {
            size_t count = std::min<size_t>(hp.batch_size, order.size() - pos);
            std::fill(grad.begin(), grad.end(), 0.0);
            for (size_t k = 0; k < count; k++) {
                size_t idx = order[pos + k];
                epoch_loss += forward(result.params, data.row(idx), data.labels[idx], ws);
                backward(result.params, data.labels[idx], ws, grad);
            }
            double step = hp.learning_rate / static_cast<double>(count);
            for (size_t i = 0; i < grad.size(); i++) result.params.weights[i] -= step * grad[i];
        }
        result.epoch_losses.push_back(epoch_loss / static_cast<double>(data.size()));
    }
    return result;
}

double evaluate(const ModelParams& params, const LocalDataset& test) {
    if (test.size() == 0) throw std::invalid_argument("evaluate: empty test set");
    check_shapes(params, test);
    Workspace ws(params.arch);
    size_t correct = 0;
    for (size_t i = 0; i < test.size(); i++) {
        forward(params, test.row(i), 0, ws);
        const auto& logits = ws.acts.back();
        size_t best = 0;
        for (size_t o = 1; o < logits.size(); o++)
            if (logits[o] > logits[best]) best = o;
        correct += best == static_cast<size_t>(test.labels[i]);
    }
    return static_cast<double>(correct) / static_cast<double>(test.size());
}

double mean_loss(const ModelParams& params, const LocalDataset& data) {
    if (data.size() == 0) throw std::invalid_argument("mean_loss: empty dataset");
    check_shapes(params, data);
    Workspace ws(params.arch);
    double total = 0.0;
    for (size_t i = 0; i < data.size(); i++)
        total += forward(params, data.row(i), data.labels[i], ws);
    return total / static_cast<double>(data.size());
}

}  // namespace fedring::flcore
