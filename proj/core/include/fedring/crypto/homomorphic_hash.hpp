// SPDX-License-Identifier: Apache-2.0
//
// Additively homomorphic vector hash: each chunk of m coordinates commits
// as prod_j g_j^{v_j}, so the product of everyone's hashes equals the hash
// of the coordinate-wise sum. Participants use this to check the server's
// aggregation without seeing each other's parameters.
#pragma once

#include <span>
#include <vector>

#include "fedring/bytes.hpp"
#include "fedring/crypto/group.hpp"
#include "fedring/crypto/quantize.hpp"

namespace fedring::crypto {

struct HashCommitment {
    std::vector<GroupElement> chunks;
    uint64_t vector_length = 0;
    uint32_t chunk_width = 0;

    bool operator==(const HashCommitment&) const = default;
};

/// Commit to a quantized vector. The all-zeros vector commits to identity
/// elements in every chunk.
HashCommitment hh_commit(const GroupParams& params, const QuantizedParams& qp);

/// Group-operation fold of the inputs. All commitments must share chunking
/// metadata; mismatch throws std::invalid_argument.
HashCommitment hh_combine(std::span<const HashCommitment> cs);

/// True iff hh_commit(claimed_sum) equals hh_combine(cs). An empty
/// commitment list accepts exactly the all-zeros sum.
bool hh_verify_sum(const GroupParams& params, const QuantizedParams& claimed_sum,
                   std::span<const HashCommitment> cs);

/// Canonical serialization: u64 vector length, u32 chunk width, chunk
/// elements 32 bytes each.
Bytes hash_commitment_to_bytes(const HashCommitment& c);
std::optional<HashCommitment> hash_commitment_from_bytes(std::span<const uint8_t> data);

}  // namespace fedring::crypto
