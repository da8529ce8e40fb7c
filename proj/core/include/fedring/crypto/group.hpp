// SPDX-License-Identifier: Apache-2.0
//
// Prime-order group layer: ristretto255 (order q = 2^252 + delta), 32-byte
// canonical encodings for both scalars and group elements. Single group
// operations go through libsodium; the vector-commitment hot path uses the
// extended-coordinate unit in ristretto.hpp.
#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "fedring/bytes.hpp"
#include "fedring/crypto/ristretto.hpp"
#include "fedring/rng.hpp"

namespace fedring::crypto {

/// Scalar mod q, canonical 32-byte little-endian encoding (< q).
struct Scalar {
    std::array<uint8_t, 32> bytes{};
    bool operator==(const Scalar&) const = default;
};

/// Group element, canonical 32-byte ristretto encoding.
struct GroupElement {
    std::array<uint8_t, 32> bytes{};
    bool operator==(const GroupElement&) const = default;
};

// --- scalar arithmetic (mod q) ---

Scalar scalar_zero();
Scalar scalar_one();
Scalar scalar_from_u64(uint64_t v);
Scalar scalar_add(const Scalar& a, const Scalar& b);
Scalar scalar_sub(const Scalar& a, const Scalar& b);
Scalar scalar_mul(const Scalar& a, const Scalar& b);
Scalar scalar_negate(const Scalar& a);
bool scalar_is_zero(const Scalar& a);
bool scalar_is_canonical(const Scalar& a);

/// Reduce 64 uniform bytes mod q (uniform output).
Scalar scalar_reduce64(std::span<const uint8_t, 64> wide);

/// Uniform scalar in [1, q-1] from a deterministic stream.
Scalar random_nonzero_scalar(Rng& rng);

/// Group order q as 32 little-endian bytes.
const std::array<uint8_t, 32>& group_order_le();

/// Lexicographic-from-top comparison of 32-byte little-endian integers.
int cmp_le256(const std::array<uint8_t, 32>& a, const std::array<uint8_t, 32>& b);

// --- group element operations ---

GroupElement element_identity();
bool element_is_identity(const GroupElement& e);
bool element_is_valid(const GroupElement& e);
GroupElement element_add(const GroupElement& a, const GroupElement& b);
GroupElement element_sub(const GroupElement& a, const GroupElement& b);

/// s * P. Throws std::invalid_argument on an invalid encoding.
GroupElement scalarmult(const Scalar& s, const GroupElement& p);

/// s * g for the canonical base point g.
GroupElement scalarmult_base(const Scalar& s);

/// Map a domain-separation label to a group element with unknown discrete
/// log (hash-to-group via the one-way map over BLAKE2b-512).
GroupElement hash_to_group(std::string_view label);

/// Hash arbitrary byte strings to a uniform scalar.
Scalar hash_to_scalar(std::initializer_list<std::span<const uint8_t>> parts,
                      std::string_view domain);

// --- system parameters ---

/// Public group description: base point g and m independent generators
/// g_1..g_m for the vector hash.  Generators are derived by hash-to-group
/// from domain-separated labels, so no mutual discrete log is known by
/// construction.  Immutable after creation; copies share the decoded
/// generator cache.
struct GroupParams {
    GroupElement g;
    std::vector<GroupElement> generators;
    uint32_t chunk_width = 0;

    static GroupParams create(uint32_t m = kDefaultChunkWidth);

    static constexpr uint32_t kDefaultChunkWidth = 256;

    // decoded generators for the commitment fast path
    std::shared_ptr<const std::vector<detail::Point>> decoded_generators;
};

}  // namespace fedring::crypto
