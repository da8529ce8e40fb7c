// SPDX-License-Identifier: Apache-2.0
#include "fedring/flcore/adversary.hpp"

#include <algorithm>
#include <stdexcept>

namespace fedring::flcore {

AdversaryKind adversary_kind_from_name(std::string_view name) {
    if (name == "random-noise") return AdversaryKind::RandomNoise;
    if (name == "sign-flip") return AdversaryKind::SignFlip;
    if (name == "scale-k") return AdversaryKind::ScaleK;
    throw std::invalid_argument("adversary kind must be random-noise, sign-flip or scale-k");
}

const char* adversary_kind_name(AdversaryKind kind) {
    switch (kind) {
        case AdversaryKind::RandomNoise: return "random-noise";
        case AdversaryKind::SignFlip: return "sign-flip";
        case AdversaryKind::ScaleK: return "scale-k";
    }
    throw std::invalid_argument("bad adversary kind");
}

ModelParams adversary_update(const AdversaryStrategy& strategy, const ModelParams& global,
                             Rng& rng, double bound) {
    ModelParams fake = global;
    auto clamp = [bound](double v) { return std::clamp(v, -bound, bound); };
    switch (strategy.kind) {
        case AdversaryKind::RandomNoise: {
            double half = std::min(strategy.magnitude, bound);
            for (auto& w : fake.weights) w = clamp((rng.unit() * 2.0 - 1.0) * half);
            break;
        }
        case AdversaryKind::SignFlip:
            for (auto& w : fake.weights) w = clamp(-w);
            break;
        case AdversaryKind::ScaleK:
            for (auto& w : fake.weights) w = clamp(strategy.magnitude * w);
            break;
    }
    return fake;
}

}  // namespace fedring::flcore
