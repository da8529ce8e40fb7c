// SPDX-License-Identifier: Apache-2.0
//
// Challenge-chained Schnorr ring signature (AOS style). A signature over a
// ring of r public keys is one seed challenge plus r response scalars; the
// verifier walks the challenge chain around the ring and accepts when it
// closes. Nothing in the signature or the verification procedure depends
// on which ring member held the private key.
#pragma once

#include <span>
#include <vector>

#include "fedring/bytes.hpp"
#include "fedring/crypto/digest.hpp"
#include "fedring/crypto/group.hpp"
#include "fedring/rng.hpp"

namespace fedring::crypto {

struct RingSignature {
    Scalar seed_challenge;          // c_0
    std::vector<Scalar> responses;  // s_0 .. s_{r-1}

    bool operator==(const RingSignature&) const = default;
};

/// Sign a digest against a ring. ring[signer_index] must equal g^sk and the
/// ring must hold at least 2 keys; violations throw std::invalid_argument.
RingSignature ring_sign(const Digest& digest, std::span<const GroupElement> ring,
                        size_t signer_index, const Scalar& sk, Rng& rng);

/// True iff sig was produced by a holder of some private key in the ring
/// over exactly this digest. Malformed input yields false, never a throw.
bool ring_verify(const Digest& digest, std::span<const GroupElement> ring,
                 const RingSignature& sig);

/// Canonical serialization: u32 ring size, then c_0, then the responses,
/// 32 bytes each little-endian.
Bytes ring_signature_to_bytes(const RingSignature& sig);
std::optional<RingSignature> ring_signature_from_bytes(std::span<const uint8_t> data);

}  // namespace fedring::crypto
