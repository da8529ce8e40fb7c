// SPDX-License-Identifier: Apache-2.0
//
// Fixed-point encoding of real-valued model parameters into the scalar
// field, so that group commitments and exact modular sums apply. A real v
// maps to round(v * S) mod q; negative magnitudes sit just below q.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fedring/crypto/group.hpp"

namespace fedring::crypto {

struct QuantizedParams {
    std::vector<Scalar> values;
    uint64_t scale = 0;  // S

    size_t length() const { return values.size(); }
    bool operator==(const QuantizedParams&) const = default;
};

inline constexpr uint64_t kDefaultScale = uint64_t{1} << 16;
inline constexpr double kDefaultMagnitudeBound = 1024.0;  // B = 2^10

/// Encode reals with |v| <= bound. Throws std::domain_error naming the
/// first offending index when a value exceeds the bound or is not finite.
QuantizedParams quantize(std::span<const double> params, uint64_t scale, double bound);

/// Decode back to reals, dividing by (scale * n_divisor). Values are read
/// in the signed window (-scale*bound*n_divisor, +scale*bound*n_divisor);
/// anything outside throws std::overflow_error naming the index.
std::vector<double> dequantize(const QuantizedParams& qp, uint64_t scale, uint64_t n_divisor,
                               double bound = kDefaultMagnitudeBound);

/// Elementwise sum mod q. Lengths and scales must match.
QuantizedParams quantized_add(const QuantizedParams& a, const QuantizedParams& b);

/// Signed small-integer view of a scalar: value if < 2^63, -(q - value) if
/// q - value < 2^63, nullopt otherwise.
std::optional<int64_t> scalar_to_signed(const Scalar& s);

/// Scalar for a signed integer (negatives encoded as q - |v|).
Scalar scalar_from_signed(int64_t v);

}  // namespace fedring::crypto
