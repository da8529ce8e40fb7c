// SPDX-License-Identifier: Apache-2.0
#include "fedring/flcore/aggregate.hpp"

#include <cmath>
#include <stdexcept>

namespace fedring::flcore {

FedavgSum fedavg_sum(std::span<const crypto::QuantizedParams> updates) {
    if (updates.empty()) throw std::invalid_argument("fedavg_sum: no updates");
    FedavgSum result;
    result.sum = updates[0];
    result.count = 1;
    for (size_t i = 1; i < updates.size(); i++) {
        result.sum = crypto::quantized_add(result.sum, updates[i]);
        result.count++;
    }
    return result;
}

bool has_converged(const ModelParams& prev, const ModelParams& next, double tolerance,
                   uint32_t round, uint32_t max_rounds) {
    if (prev.weights.size() != next.weights.size())
        throw std::invalid_argument("has_converged: parameter length mismatch");
    if (round >= max_rounds) return true;
    double max_delta = 0.0;
    for (size_t i = 0; i < prev.weights.size(); i++)
        max_delta = std::max(max_delta, std::fabs(next.weights[i] - prev.weights[i]));
    return max_delta < tolerance;
}

}  // namespace fedring::flcore
