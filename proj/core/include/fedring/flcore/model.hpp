// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fedring/rng.hpp"

namespace fedring::flcore {

/// Fully-connected network: widths[0] inputs, ReLU hidden layers, linear
/// output trained with softmax cross-entropy.
struct ModelArch {
    std::vector<uint32_t> layer_widths;

    size_t param_count() const;
    uint32_t input_width() const { return layer_widths.front(); }
    uint32_t output_width() const { return layer_widths.back(); }
    void validate() const;

    bool operator==(const ModelArch&) const = default;
};

/// Flat parameter vector. Per layer: weights row-major (fan_out x fan_in),
/// then fan_out biases.
struct ModelParams {
    ModelArch arch;
    std::vector<double> weights;

    bool operator==(const ModelParams&) const = default;
};

/// Deterministic initialization: weights uniform in +-1/sqrt(fan_in),
/// biases zero.
ModelParams init_global_model(const ModelArch& arch, uint64_t seed);

struct LocalDataset {
    std::vector<float> features;  // row-major, size() x feature_dim
    std::vector<int32_t> labels;
    uint32_t feature_dim = 0;
    std::string owner_id;

    size_t size() const { return labels.size(); }
    const float* row(size_t i) const { return features.data() + i * feature_dim; }
    void validate() const;
};

}  // namespace fedring::flcore
