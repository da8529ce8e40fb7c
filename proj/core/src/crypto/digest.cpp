// SPDX-License-Identifier: Apache-2.0
#include "fedring/crypto/digest.hpp"

#include <sodium.h>

namespace fedring::crypto {

Digest digest_params(const QuantizedParams& qp, uint64_t round) {
    static const char domain[] = "fedring.params.digest.v1";
    crypto_generichash_state st;
    crypto_generichash_init(&st, nullptr, 0, 32);
    crypto_generichash_update(&st, reinterpret_cast<const uint8_t*>(domain), sizeof(domain) - 1);
    uint8_t hdr[16];
    for (int i = 0; i < 8; i++) hdr[i] = static_cast<uint8_t>(round >> (8 * i));
    uint64_t len = qp.values.size();
    for (int i = 0; i < 8; i++) hdr[8 + i] = static_cast<uint8_t>(len >> (8 * i));
    crypto_generichash_update(&st, hdr, sizeof hdr);
    for (const Scalar& v : qp.values)
        crypto_generichash_update(&st, v.bytes.data(), v.bytes.size());
    Digest d;
    crypto_generichash_final(&st, d.data(), d.size());
    return d;
}

}  // namespace fedring::crypto
