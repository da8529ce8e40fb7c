// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string_view>

#include "fedring/crypto/quantize.hpp"
#include "fedring/flcore/model.hpp"
#include "fedring/rng.hpp"

namespace fedring::flcore {

enum class AdversaryKind { RandomNoise, SignFlip, ScaleK };

AdversaryKind adversary_kind_from_name(std::string_view name);
const char* adversary_kind_name(AdversaryKind kind);

struct AdversaryStrategy {
    AdversaryKind kind = AdversaryKind::RandomNoise;
    // half-range of the noise for RandomNoise, the factor k for ScaleK
    double magnitude = crypto::kDefaultMagnitudeBound / 2.0;
};

/// A fake update in place of local training. Outputs are clamped to the
/// quantization bound so adversaries cannot smuggle values the honest
/// pipeline would reject.
ModelParams adversary_update(const AdversaryStrategy& strategy, const ModelParams& global,
                             Rng& rng, double bound = crypto::kDefaultMagnitudeBound);

}  // namespace fedring::flcore
