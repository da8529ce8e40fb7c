// SPDX-License-Identifier: Apache-2.0
#include "fedring/crypto/quantize.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fedring::crypto {

std::optional<int64_t> scalar_to_signed(const Scalar& s) {
    auto small_u63 = [](const std::array<uint8_t, 32>& b) -> std::optional<uint64_t> {
        for (int i = 8; i < 32; i++)
            if (b[i] != 0) return std::nullopt;
        uint64_t v = 0;
        for (int i = 7; i >= 0; i--) v = v << 8 | b[i];
        if (v > static_cast<uint64_t>(INT64_MAX)) return std::nullopt;
        return v;
    };
    if (auto pos = small_u63(s.bytes)) return static_cast<int64_t>(*pos);
    Scalar neg = scalar_negate(s);
    if (auto mag = small_u63(neg.bytes)) return -static_cast<int64_t>(*mag);
    return std::nullopt;
}

Scalar scalar_from_signed(int64_t v) {
    if (v >= 0) return scalar_from_u64(static_cast<uint64_t>(v));
    return scalar_negate(scalar_from_u64(static_cast<uint64_t>(-v)));
}

QuantizedParams quantize(std::span<const double> params, uint64_t scale, double bound) {
    if (scale == 0) throw std::invalid_argument("quantize: zero scale");
    QuantizedParams qp;
    qp.scale = scale;
    qp.values.reserve(params.size());
    for (size_t i = 0; i < params.size(); i++) {
        double v = params[i];
        if (!std::isfinite(v) || std::fabs(v) > bound)
            throw std::domain_error("quantize: value at index " + std::to_string(i) +
                                    " outside magnitude bound " + std::to_string(bound));
        qp.values.push_back(scalar_from_signed(std::llround(v * static_cast<double>(scale))));
    }
    return qp;
}

std::vector<double> dequantize(const QuantizedParams& qp, uint64_t scale, uint64_t n_divisor,
                               double bound) {
    if (scale == 0 || n_divisor == 0)
        throw std::invalid_argument("dequantize: zero scale or divisor");
    double window = static_cast<double>(scale) * bound * static_cast<double>(n_divisor);
    std::vector<double> out;
    out.reserve(qp.values.size());
    double denom = static_cast<double>(scale) * static_cast<double>(n_divisor);
    for (size_t i = 0; i < qp.values.size(); i++) {
        auto v = scalar_to_signed(qp.values[i]);
        if (!v || std::fabs(static_cast<double>(*v)) > window)
            throw std::overflow_error("dequantize: value at index " + std::to_string(i) +
                                      " outside the signed window");
        out.push_back(static_cast<double>(*v) / denom);
    }
    return out;
}

QuantizedParams quantized_add(const QuantizedParams& a, const QuantizedParams& b) {
    if (a.values.size() != b.values.size())
        throw std::invalid_argument("quantized_add: length mismatch");
    if (a.scale != b.scale) throw std::invalid_argument("quantized_add: scale mismatch");
    QuantizedParams r;
    r.scale = a.scale;
    r.values.resize(a.values.size());
    for (size_t i = 0; i < a.values.size(); i++) r.values[i] = scalar_add(a.values[i], b.values[i]);
    return r;
}

}  // namespace fedring::crypto
