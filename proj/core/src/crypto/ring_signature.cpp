// SPDX-License-Identifier: Apache-2.0
#include "fedring/crypto/ring_signature.hpp"

#include <sodium.h>

#include <stdexcept>

namespace fedring::crypto {

namespace {

// prefix = H(domain || r || ring || digest); binds every challenge to the
// exact ring and message
std::array<uint8_t, 64> chain_prefix(const Digest& digest, std::span<const GroupElement> ring) {
    static const char domain[] = "fedring.ringsig.v1";
    crypto_generichash_state st;
    crypto_generichash_init(&st, nullptr, 0, 64);
    crypto_generichash_update(&st, reinterpret_cast<const uint8_t*>(domain), sizeof(domain) - 1);
    uint8_t rsz[4];
    for (int i = 0; i < 4; i++) rsz[i] = static_cast<uint8_t>(ring.size() >> (8 * i));
    crypto_generichash_update(&st, rsz, 4);
    for (const auto& pk : ring) crypto_generichash_update(&st, pk.bytes.data(), pk.bytes.size());
    crypto_generichash_update(&st, digest.data(), digest.size());
    std::array<uint8_t, 64> prefix;
    crypto_generichash_final(&st, prefix.data(), prefix.size());
    return prefix;
}

// c_{i+1} = H(prefix || i || A_i) reduced to a scalar
Scalar challenge(const std::array<uint8_t, 64>& prefix, uint32_t position,
                 const GroupElement& commitment) {
    crypto_generichash_state st;
    crypto_generichash_init(&st, nullptr, 0, 64);
    crypto_generichash_update(&st, prefix.data(), prefix.size());
    uint8_t pos[4];
    for (int i = 0; i < 4; i++) pos[i] = static_cast<uint8_t>(position >> (8 * i));
    crypto_generichash_update(&st, pos, 4);
    crypto_generichash_update(&st, commitment.bytes.data(), commitment.bytes.size());
    uint8_t wide[64];
    crypto_generichash_final(&st, wide, sizeof wide);
    return scalar_reduce64(std::span<const uint8_t, 64>(wide, 64));
}

// g^s * pk^c
GroupElement chain_link(const Scalar& s, const GroupElement& pk, const Scalar& c) {
    return element_add(scalarmult_base(s), scalarmult(c, pk));
}

}  // namespace

RingSignature ring_sign(const Digest& digest, std::span<const GroupElement> ring,
                        size_t signer_index, const Scalar& sk, Rng& rng) {
    size_t r = ring.size();
    if (r < 2) throw std::invalid_argument("ring_sign: ring must hold at least 2 keys");
    if (signer_index >= r) throw std::invalid_argument("ring_sign: signer index out of range");
    if (scalarmult_base(sk) != ring[signer_index])
        throw std::invalid_argument("ring_sign: secret key does not match ring entry");

    auto prefix = chain_prefix(digest, ring);
    std::vector<Scalar> challenges(r);
    std::vector<Scalar> responses(r);

    // close the loop starting just after the signer
    Scalar alpha = random_nonzero_scalar(rng);
    challenges[(signer_index + 1) % r] =
        challenge(prefix, static_cast<uint32_t>(signer_index), scalarmult_base(alpha));

    for (size_t k = 1; k < r; k++) {
        size_t i = (signer_index + k) % r;
        responses[i] = random_nonzero_scalar(rng);
        GroupElement a = chain_link(responses[i], ring[i], challenges[i]);
        challenges[(i + 1) % r] = challenge(prefix, static_cast<uint32_t>(i), a);
    }

    // s_sigma = alpha - c_sigma * sk, so g^s * pk^c lands back on g^alpha
    responses[signer_index] = scalar_sub(alpha, scalar_mul(challenges[signer_index], sk));
    return RingSignature{challenges[0], std::move(responses)};
}

bool ring_verify(const Digest& digest, std::span<const GroupElement> ring,
                 const RingSignature& sig) {
    size_t r = ring.size();
    if (r < 2 || sig.responses.size() != r) return false;
    if (!scalar_is_canonical(sig.seed_challenge)) return false;
    for (const auto& s : sig.responses)
        if (!scalar_is_canonical(s)) return false;
    for (const auto& pk : ring)
        if (!element_is_valid(pk)) return false;

    auto prefix = chain_prefix(digest, ring);
    Scalar c = sig.seed_challenge;
    for (size_t i = 0; i < r; i++) {
        GroupElement a;
        try {
            a = chain_link(sig.responses[i], ring[i], c);
        } catch (const std::invalid_argument&) {
            return false;
        }
        c = challenge(prefix, static_cast<uint32_t>(i), a);
    }
    return c == sig.seed_challenge;
}

Bytes ring_signature_to_bytes(const RingSignature& sig) {
    Bytes out;
    out.reserve(4 + 32 * (sig.responses.size() + 1));
    put_u32_le(out, static_cast<uint32_t>(sig.responses.size()));
    out.insert(out.end(), sig.seed_challenge.bytes.begin(), sig.seed_challenge.bytes.end());
    for (const auto& s : sig.responses) out.insert(out.end(), s.bytes.begin(), s.bytes.end());
    return out;
}

std::optional<RingSignature> ring_signature_from_bytes(std::span<const uint8_t> data) {
    if (data.size() < 4) return std::nullopt;
    uint32_t n = get_u32_le(data.data());
    if (data.size() != 4 + size_t{32} * (n + 1)) return std::nullopt;
    RingSignature sig;
    std::memcpy(sig.seed_challenge.bytes.data(), data.data() + 4, 32);
    sig.responses.resize(n);
    for (uint32_t i = 0; i < n; i++)
        std::memcpy(sig.responses[i].bytes.data(), data.data() + 4 + 32 * (size_t{i} + 1), 32);
    return sig;
}

}  // namespace fedring::crypto
