// SPDX-License-Identifier: Apache-2.0
#include "fedring/crypto/group.hpp"

#include <sodium.h>

#include <cstring>
#include <stdexcept>

namespace fedring::crypto {

namespace {

void ensure_sodium() {
    if (sodium_init() < 0) throw std::runtime_error("libsodium initialization failed");
}

// q = 2^252 + 27742317777372353535851937790883648493
constexpr std::array<uint8_t, 32> kOrderLe = {
    0xed, 0xd3, 0xf5, 0x5c, 0x1a, 0x63, 0x12, 0x58, 0xd6, 0x9c, 0xf7,
    0xa2, 0xde, 0xf9, 0xde, 0x14, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00,
    0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x10};

}  // namespace

const std::array<uint8_t, 32>& group_order_le() { return kOrderLe; }

int cmp_le256(const std::array<uint8_t, 32>& a, const std::array<uint8_t, 32>& b) {
    for (int i = 31; i >= 0; i--) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

Scalar scalar_zero() { return Scalar{}; }

Scalar scalar_one() { return scalar_from_u64(1); }

Scalar scalar_from_u64(uint64_t v) {
    Scalar s;
    for (int i = 0; i < 8; i++) s.bytes[i] = static_cast<uint8_t>(v >> (8 * i));
    return s;
}

Scalar scalar_add(const Scalar& a, const Scalar& b) {
    Scalar r;
    crypto_core_ristretto255_scalar_add(r.bytes.data(), a.bytes.data(), b.bytes.data());
    return r;
}

Scalar scalar_sub(const Scalar& a, const Scalar& b) {
    Scalar r;
    crypto_core_ristretto255_scalar_sub(r.bytes.data(), a.bytes.data(), b.bytes.data());
    return r;
}

Scalar scalar_mul(const Scalar& a, const Scalar& b) {
    Scalar r;
    crypto_core_ristretto255_scalar_mul(r.bytes.data(), a.bytes.data(), b.bytes.data());
    return r;
}

Scalar scalar_negate(const Scalar& a) {
    Scalar r;
    crypto_core_ristretto255_scalar_negate(r.bytes.data(), a.bytes.data());
    return r;
}

bool scalar_is_zero(const Scalar& a) {
    uint8_t acc = 0;
    for (uint8_t x : a.bytes) acc |= x;
    return acc == 0;
}

bool scalar_is_canonical(const Scalar& a) { return cmp_le256(a.bytes, kOrderLe) < 0; }

Scalar scalar_reduce64(std::span<const uint8_t, 64> wide) {
    ensure_sodium();
    Scalar r;
    crypto_core_ristretto255_scalar_reduce(r.bytes.data(), wide.data());
    return r;
}

Scalar random_nonzero_scalar(Rng& rng) {
    for (;;) {
        uint8_t wide[64];
        rng.fill(wide, sizeof wide);
        Scalar s = scalar_reduce64(std::span<const uint8_t, 64>(wide, 64));
        if (!scalar_is_zero(s)) return s;
    }
}

GroupElement element_identity() { return GroupElement{}; }

bool element_is_identity(const GroupElement& e) {
    uint8_t acc = 0;
    for (uint8_t x : e.bytes) acc |= x;
    return acc == 0;
}

bool element_is_valid(const GroupElement& e) {
    ensure_sodium();
    return crypto_core_ristretto255_is_valid_point(e.bytes.data()) == 1;
}

GroupElement element_add(const GroupElement& a, const GroupElement& b) {
    ensure_sodium();
    if (element_is_identity(a)) return b;
    if (element_is_identity(b)) return a;
    GroupElement r;
    if (crypto_core_ristretto255_add(r.bytes.data(), a.bytes.data(), b.bytes.data()) != 0)
        throw std::invalid_argument("element_add: invalid group element");
    return r;
}

GroupElement element_sub(const GroupElement& a, const GroupElement& b) {
    ensure_sodium();
    if (element_is_identity(b)) return a;
    GroupElement r;
    if (crypto_core_ristretto255_sub(r.bytes.data(), a.bytes.data(), b.bytes.data()) != 0)
        throw std::invalid_argument("element_sub: invalid group element");
    return r;
}

GroupElement scalarmult(const Scalar& s, const GroupElement& p) {
    ensure_sodium();
    if (!element_is_valid(p) && !element_is_identity(p))
        throw std::invalid_argument("scalarmult: invalid group element");
    // libsodium refuses identity results, so handle the two ways they arise
    if (scalar_is_zero(s) || element_is_identity(p)) return element_identity();
    GroupElement r;
    if (crypto_scalarmult_ristretto255(r.bytes.data(), s.bytes.data(), p.bytes.data()) != 0)
        throw std::invalid_argument("scalarmult: invalid group element");
    return r;
}

GroupElement scalarmult_base(const Scalar& s) {
    ensure_sodium();
    if (scalar_is_zero(s)) return element_identity();
    GroupElement r;
    if (crypto_scalarmult_ristretto255_base(r.bytes.data(), s.bytes.data()) != 0)
        throw std::invalid_argument("scalarmult_base: zero scalar");
    return r;
}

GroupElement hash_to_group(std::string_view label) {
    ensure_sodium();
    uint8_t wide[64];
    crypto_generichash(wide, sizeof wide, reinterpret_cast<const uint8_t*>(label.data()),
                       label.size(), nullptr, 0);
    GroupElement r;
    crypto_core_ristretto255_from_hash(r.bytes.data(), wide);
    return r;
}

Scalar hash_to_scalar(std::initializer_list<std::span<const uint8_t>> parts,
                      std::string_view domain) {
    ensure_sodium();
    crypto_generichash_state st;
    crypto_generichash_init(&st, nullptr, 0, 64);
    crypto_generichash_update(&st, reinterpret_cast<const uint8_t*>(domain.data()),
                              domain.size());
    for (const auto& part : parts) crypto_generichash_update(&st, part.data(), part.size());
    uint8_t wide[64];
    crypto_generichash_final(&st, wide, sizeof wide);
    return scalar_reduce64(std::span<const uint8_t, 64>(wide, 64));
}

GroupParams GroupParams::create(uint32_t m) {
    ensure_sodium();
    if (m == 0) throw std::invalid_argument("GroupParams: chunk width must be positive");
    GroupParams params;
    params.g = scalarmult_base(scalar_one());
    params.chunk_width = m;
    params.generators.reserve(m);
    auto decoded = std::make_shared<std::vector<detail::Point>>();
    decoded->reserve(m);
    for (uint32_t j = 0; j < m; j++) {
        std::string label = "fedring.hh.generator.v1." + std::to_string(j);
        GroupElement gj = hash_to_group(label);
        params.generators.push_back(gj);
        auto pt = detail::point_decode(gj.bytes);
        if (!pt) throw std::runtime_error("GroupParams: generator decode failed");
        decoded->push_back(*pt);
    }
    params.decoded_generators = std::move(decoded);
    return params;
}

}  // namespace fedring::crypto
