// SPDX-License-Identifier: Apache-2.0
#include "fedring/crypto/paillier.hpp"

#include <chrono>
#include <stdexcept>

namespace fedring::crypto {

namespace {

mpz_class mpz_from_rng(Rng& rng, int bits) {
    size_t nbytes = (static_cast<size_t>(bits) + 7) / 8;
    std::vector<uint8_t> buf(nbytes);
    rng.fill(buf.data(), buf.size());
    mpz_class v;
    mpz_import(v.get_mpz_t(), buf.size(), 1, 1, 0, 0, buf.data());
    // trim to exactly `bits` and force the top bit
    mpz_fdiv_r_2exp(v.get_mpz_t(), v.get_mpz_t(), bits);
    mpz_setbit(v.get_mpz_t(), bits - 1);
    return v;
}

mpz_class random_prime(Rng& rng, int bits) {
    mpz_class p = mpz_from_rng(rng, bits);
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    return p;
}

// L(x) = (x - 1) / n
mpz_class paillier_l(const mpz_class& x, const mpz_class& n) { return (x - 1) / n; }

}  // namespace

PaillierKey paillier_keygen(int bits, Rng& rng) {
    if (bits < kPaillierMinimumBits)
        throw std::invalid_argument("paillier_keygen: modulus below 2048 bits");
    PaillierKey key;
    key.bits = bits;
    mpz_class p = random_prime(rng, bits / 2);
    mpz_class q;
    do {
        q = random_prime(rng, bits - bits / 2);
    } while (q == p);
    key.n = p * q;
    key.n2 = key.n * key.n;
    mpz_class pm1 = p - 1, qm1 = q - 1;
    mpz_lcm(key.lambda.get_mpz_t(), pm1.get_mpz_t(), qm1.get_mpz_t());
    // with g = n + 1, L(g^lambda mod n^2) = lambda mod n, so mu = lambda^-1 mod n
    mpz_class glambda;
    mpz_class g = key.n + 1;
    mpz_powm(glambda.get_mpz_t(), g.get_mpz_t(), key.lambda.get_mpz_t(), key.n2.get_mpz_t());
    mpz_class l = paillier_l(glambda, key.n);
    if (mpz_invert(key.mu.get_mpz_t(), l.get_mpz_t(), key.n.get_mpz_t()) == 0)
        throw std::runtime_error("paillier_keygen: mu inversion failed");
    return key;
}

mpz_class paillier_encrypt(const PaillierKey& key, const mpz_class& m, Rng& rng) {
    if (m < 0 || m >= key.n) throw std::domain_error("paillier_encrypt: message outside [0, n)");
    mpz_class r;
    mpz_class gcd;
    do {
        r = mpz_from_rng(rng, key.bits) % key.n;
        if (r == 0) continue;
        mpz_gcd(gcd.get_mpz_t(), r.get_mpz_t(), key.n.get_mpz_t());
    } while (r == 0 || gcd != 1);
    // (1 + m*n) * r^n mod n^2 -- the g = n+1 shortcut
    mpz_class rn;
    mpz_powm(rn.get_mpz_t(), r.get_mpz_t(), key.n.get_mpz_t(), key.n2.get_mpz_t());
    mpz_class c = ((1 + m * key.n) % key.n2) * rn % key.n2;
    return c;
}

mpz_class paillier_decrypt(const PaillierKey& key, const mpz_class& c) {
    mpz_class clambda;
    mpz_powm(clambda.get_mpz_t(), c.get_mpz_t(), key.lambda.get_mpz_t(), key.n2.get_mpz_t());
    return paillier_l(clambda, key.n) * key.mu % key.n;
}

mpz_class paillier_add(const PaillierKey& key, const mpz_class& a, const mpz_class& b) {
    return a * b % key.n2;
}

PaillierBenchResult paillier_encrypt_bench(const PaillierKey& key,
                                           std::span<const uint64_t> values, Rng& rng) {
    using clock = std::chrono::steady_clock;
    PaillierBenchResult result;
    result.measured_elements = values.size();
    if (values.empty()) return result;
    auto t0 = clock::now();
    for (uint64_t v : values) {
        volatile bool sink = paillier_encrypt(key, mpz_class(static_cast<unsigned long>(v)), rng) > 0;
        (void)sink;
    }
    auto t1 = clock::now();
    result.per_element_mean_s =
        std::chrono::duration<double>(t1 - t0).count() / static_cast<double>(values.size());
    return result;
}

}  // namespace fedring::crypto
