// SPDX-License-Identifier: Apache-2.0
//
// Paillier additively homomorphic encryption. Present only as the cost
// baseline the ring-signature upload path is compared against; nothing in
// the protocol depends on it.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <vector>

#include "fedring/rng.hpp"

namespace fedring::crypto {

struct PaillierKey {
    mpz_class n;       // modulus, product of two primes
    mpz_class n2;      // n^2
    mpz_class lambda;  // lcm(p-1, q-1)
    mpz_class mu;      // (L(g^lambda mod n^2))^-1 mod n
    int bits = 0;
};

inline constexpr int kPaillierMinimumBits = 2048;

/// Deterministic keypair from the rng stream. bits must be >= 2048.
PaillierKey paillier_keygen(int bits, Rng& rng);

/// E(m) = (1+n)^m * r^n mod n^2. Throws std::domain_error when m >= n or
/// m < 0.
mpz_class paillier_encrypt(const PaillierKey& key, const mpz_class& m, Rng& rng);

mpz_class paillier_decrypt(const PaillierKey& key, const mpz_class& c);

/// E(a) * E(b) decrypts to a + b.
mpz_class paillier_add(const PaillierKey& key, const mpz_class& a, const mpz_class& b);

struct PaillierBenchResult {
    double per_element_mean_s = 0.0;
    size_t measured_elements = 0;
};

/// Encrypt each element independently and report the mean wall time per
/// element. Used to extrapolate the per-round cost of encrypting a full
/// parameter vector.
PaillierBenchResult paillier_encrypt_bench(const PaillierKey& key,
                                           std::span<const uint64_t> values, Rng& rng);

}  // namespace fedring::crypto
