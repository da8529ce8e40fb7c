// SPDX-License-Identifier: Apache-2.0
#include "fedring/flcore/model.hpp"

#include <cmath>
#include <stdexcept>

namespace fedring::flcore {

size_t ModelArch::param_count() const {
    size_t total = 0;
    for (size_t l = 0; l + 1 < layer_widths.size(); l++)
        total += (static_cast<size_t>(layer_widths[l]) + 1) * layer_widths[l + 1];
    return total;
}

void ModelArch::validate() const {
    if (layer_widths.size() < 2)
        throw std::invalid_argument("ModelArch: need at least input and output widths");
    for (uint32_t w : layer_widths)
        if (w == 0) throw std::invalid_argument("ModelArch: zero layer width");
}

ModelParams init_global_model(const ModelArch& arch, uint64_t seed) {
    arch.validate();
    ModelParams params;
    params.arch = arch;
    params.weights.resize(arch.param_count());
    Rng rng = Rng(seed).split("model-init");
    size_t off = 0;
    for (size_t l = 0; l + 1 < arch.layer_widths.size(); l++) {
        size_t fan_in = arch.layer_widths[l];
        size_t fan_out = arch.layer_widths[l + 1];
        double range = 1.0 / std::sqrt(static_cast<double>(fan_in));
        for (size_t i = 0; i < fan_in * fan_out; i++)
            params.weights[off++] = (rng.unit() * 2.0 - 1.0) * range;
        for (size_t i = 0; i < fan_out; i++) params.weights[off++] = 0.0;
    }
    return params;
}

void LocalDataset::validate() const {
    if (feature_dim == 0) throw std::invalid_argument("LocalDataset: zero feature dim");
    if (features.size() != labels.size() * static_cast<size_t>(feature_dim))
        throw std::invalid_argument("LocalDataset: feature/label row count mismatch");
    for (int32_t y : labels)
        if (y < 0) throw std::invalid_argument("LocalDataset: negative label");
}

}  // namespace fedring::flcore
