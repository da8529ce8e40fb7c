// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <variant>
#include <vector>

#include "fedring/crypto/digest.hpp"
#include "fedring/crypto/homomorphic_hash.hpp"
#include "fedring/crypto/quantize.hpp"
#include "fedring/crypto/ring_signature.hpp"

namespace fedring::transport {

using Pseudonym = std::array<uint8_t, 16>;

/// Round-scoped tag derived from the update content itself, so the
/// channel's view of a round is independent of which participant produced
/// which payload, and a participant can link its own commitment to its own
/// upload without revealing anything else.
Pseudonym derive_pseudonym(const crypto::QuantizedParams& params, uint64_t round);

/// Anonymous upload envelope. No field identifies the sender.
struct SignedUpdate {
    uint64_t round = 0;
    Pseudonym pseudonym{};
    crypto::QuantizedParams params;
    std::vector<crypto::GroupElement> ring;
    crypto::RingSignature signature;

    bool operator==(const SignedUpdate&) const = default;
};

struct CommitmentEntry {
    uint64_t round = 0;
    Pseudonym pseudonym{};
    crypto::HashCommitment commitment;

    bool operator==(const CommitmentEntry&) const = default;
};

/// The server's per-round announcement: the exact quantized sum, how many
/// updates went into it, and the pseudonym set it aggregated. Clients
/// verify the hash sum over exactly that set.
struct GlobalSumBroadcast {
    uint64_t round = 0;
    uint32_t count = 0;
    crypto::QuantizedParams sum;
    std::vector<Pseudonym> included;

    bool operator==(const GlobalSumBroadcast&) const = default;
};

struct ModelDownload {
    uint64_t round = 0;
    std::vector<double> weights;

    bool operator==(const ModelDownload&) const = default;
};

using Message = std::variant<SignedUpdate, CommitmentEntry, GlobalSumBroadcast, ModelDownload>;

}  // namespace fedring::transport
