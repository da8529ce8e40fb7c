// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>

#include "fedring/crypto/quantize.hpp"
#include "fedring/flcore/model.hpp"

namespace fedring::flcore {

struct FedavgSum {
    crypto::QuantizedParams sum;  // exact modular element-wise sum
    uint32_t count = 0;
};

/// The server publishes the exact quantized sum and the participant count;
/// clients average locally by dequantizing with divisor count. Keeping the
/// sum exact is what makes the hash verification work.
FedavgSum fedavg_sum(std::span<const crypto::QuantizedParams> updates);

/// True iff the max-norm step is below tolerance or the round cap is hit.
bool has_converged(const ModelParams& prev, const ModelParams& next, double tolerance,
                   uint32_t round, uint32_t max_rounds);

}  // namespace fedring::flcore
