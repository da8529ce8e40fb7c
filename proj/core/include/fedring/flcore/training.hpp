// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "fedring/flcore/model.hpp"
#include "fedring/rng.hpp"

namespace fedring::flcore {

struct Hyperparams {
    double learning_rate = 0.05;
    uint32_t local_epochs = 1;
    uint32_t batch_size = 32;
    uint32_t max_rounds = 50;
    double tolerance = 1e-4;

    void validate() const;
};

struct TrainResult {
    ModelParams params;
    std::vector<double> epoch_losses;  // mean training loss per epoch
};

/// Mini-batch SGD on the local set. Deterministic given the rng stream;
/// zero epochs returns the input unchanged. Empty data throws
/// std::invalid_argument.
TrainResult local_update(const LocalDataset& data, const ModelParams& start,
                         const Hyperparams& hp, Rng& rng);

/// Fraction of argmax-correct predictions; ties break toward the lowest
/// class index. Empty test set throws std::invalid_argument.
double evaluate(const ModelParams& params, const LocalDataset& test);

/// Mean softmax cross-entropy over a dataset.
double mean_loss(const ModelParams& params, const LocalDataset& data);

/// Loss and full parameter gradient for one sample; exposed so tests can
/// compare the analytic gradient against finite differences.
double loss_and_gradient(const ModelParams& params, const float* x, int32_t label,
                         std::span<double> grad_out);

/// Output logits for one sample.
std::vector<double> forward_logits(const ModelParams& params, const float* x);

}  // namespace fedring::flcore
