// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>

#include "fedring/crypto/quantize.hpp"

namespace fedring::crypto {

using Digest = std::array<uint8_t, 32>;

/// Single message digest of a quantized parameter vector, bound to a round.
/// This digest, not the raw vector, is what gets ring-signed, so signing
/// cost is independent of the parameter count.
Digest digest_params(const QuantizedParams& qp, uint64_t round);

}  // namespace fedring::crypto
