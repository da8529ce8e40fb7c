// SPDX-License-Identifier: Apache-2.0
#include "fedring/crypto/homomorphic_hash.hpp"

#include <stdexcept>

namespace fedring::crypto {

HashCommitment hh_commit(const GroupParams& params, const QuantizedParams& qp) {
    if (params.chunk_width == 0 || !params.decoded_generators ||
        params.decoded_generators->size() != params.chunk_width)
        throw std::invalid_argument("hh_commit: malformed group params");

    const auto& gens = *params.decoded_generators;
    const size_t m = params.chunk_width;
    const size_t n = qp.values.size();

    HashCommitment out;
    out.vector_length = n;
    out.chunk_width = params.chunk_width;
    out.chunks.reserve((n + m - 1) / m);

    std::vector<int64_t> small;
    small.reserve(m);
    for (size_t start = 0; start < n; start += m) {
        size_t count = std::min(m, n - start);
        detail::Point acc = detail::point_identity();
        small.assign(count, 0);
        bool have_small = false;
        for (size_t j = 0; j < count; j++) {
            const Scalar& v = qp.values[start + j];
            if (auto sv = scalar_to_signed(v)) {
                small[j] = *sv;
                have_small |= *sv != 0;
            } else {
                // full-width exponent: fall back to plain scalar multiply
                acc = detail::point_add(acc, detail::scalarmult_vartime(gens[j], v.bytes));
            }
        }
        if (have_small)
            acc = detail::point_add(
                acc, detail::msm_i64_vartime(std::span(gens.data(), count), small));
        out.chunks.push_back(GroupElement{detail::point_encode(acc)});
    }
    return out;
}

HashCommitment hh_combine(std::span<const HashCommitment> cs) {
    if (cs.empty()) throw std::invalid_argument("hh_combine: empty input");
    HashCommitment out = cs[0];
    for (size_t i = 1; i < cs.size(); i++) {
        const auto& c = cs[i];
        if (c.vector_length != out.vector_length || c.chunk_width != out.chunk_width ||
            c.chunks.size() != out.chunks.size())
            throw std::invalid_argument("hh_combine: chunking metadata mismatch");
        for (size_t k = 0; k < out.chunks.size(); k++)
            out.chunks[k] = element_add(out.chunks[k], c.chunks[k]);
    }
    return out;
}

bool hh_verify_sum(const GroupParams& params, const QuantizedParams& claimed_sum,
                   std::span<const HashCommitment> cs) {
    HashCommitment lhs = hh_commit(params, claimed_sum);
    if (cs.empty()) {
        for (const auto& chunk : lhs.chunks)
            if (!element_is_identity(chunk)) return false;
        return true;
    }
    for (const auto& c : cs) {
        if (c.vector_length != lhs.vector_length || c.chunk_width != lhs.chunk_width)
            return false;
    }
    return lhs == hh_combine(cs);
}

Bytes hash_commitment_to_bytes(const HashCommitment& c) {
    Bytes out;
    out.reserve(12 + 32 * c.chunks.size());
    put_u64_le(out, c.vector_length);
    put_u32_le(out, c.chunk_width);
    for (const auto& chunk : c.chunks) out.insert(out.end(), chunk.bytes.begin(), chunk.bytes.end());
    return out;
}

std::optional<HashCommitment> hash_commitment_from_bytes(std::span<const uint8_t> data) {
    if (data.size() < 12) return std::nullopt;
    HashCommitment c;
    c.vector_length = get_u64_le(data.data());
    c.chunk_width = get_u32_le(data.data() + 8);
    if (c.chunk_width == 0) return std::nullopt;
    size_t expect_chunks = (c.vector_length + c.chunk_width - 1) / c.chunk_width;
    if (data.size() != 12 + 32 * expect_chunks) return std::nullopt;
    c.chunks.resize(expect_chunks);
    for (size_t k = 0; k < expect_chunks; k++)
        std::memcpy(c.chunks[k].bytes.data(), data.data() + 12 + 32 * k, 32);
    return c;
}

}  // namespace fedring::crypto
