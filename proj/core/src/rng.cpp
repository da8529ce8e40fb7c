// SPDX-License-Identifier: Apache-2.0
#include "fedring/rng.hpp"

#include <sodium.h>

#include <cmath>
#include <cstring>
#include <numbers>
#include <stdexcept>

namespace fedring {

namespace {

void ensure_sodium() {
    if (sodium_init() < 0) throw std::runtime_error("libsodium initialization failed");
}

std::array<uint8_t, 32> key_from_seed(uint64_t seed) {
    ensure_sodium();
    static const char domain[] = "fedring.rng.v1";
    uint8_t msg[sizeof(domain) - 1 + 8];
    std::memcpy(msg, domain, sizeof(domain) - 1);
    for (int i = 0; i < 8; i++) msg[sizeof(domain) - 1 + i] = static_cast<uint8_t>(seed >> (8 * i));
    std::array<uint8_t, 32> key{};
    crypto_generichash(key.data(), key.size(), msg, sizeof(msg), nullptr, 0);
    return key;
}

}  // namespace

Rng::Rng(uint64_t seed) : key_(key_from_seed(seed)), pos_(buf_.size()) {}

Rng::Rng(const std::array<uint8_t, 32>& key) : key_(key), pos_(buf_.size()) {
    ensure_sodium();
}

void Rng::refill() {
    uint8_t nonce[crypto_stream_chacha20_NONCEBYTES] = {0};
    for (int i = 0; i < 8; i++) nonce[i] = static_cast<uint8_t>(block_counter_ >> (8 * i));
    crypto_stream_chacha20(buf_.data(), buf_.size(), nonce, key_.data());
    block_counter_++;
    pos_ = 0;
}

void Rng::fill(void* out, size_t n) {
    auto* dst = static_cast<uint8_t*>(out);
    while (n > 0) {
        if (pos_ == buf_.size()) refill();
        size_t take = std::min(n, buf_.size() - pos_);
        std::memcpy(dst, buf_.data() + pos_, take);
        pos_ += take;
        dst += take;
        n -= take;
    }
}

uint64_t Rng::u64() {
    uint8_t b[8];
    fill(b, 8);
    uint64_t v = 0;
    for (int i = 7; i >= 0; i--) v = v << 8 | b[i];
    return v;
}

uint64_t Rng::below(uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below: zero bound");
    // rejection sampling; min is 2^64 mod bound
    uint64_t min = (-bound) % bound;
    for (;;) {
        uint64_t r = u64();
        if (r >= min) return r % bound;
    }
}

double Rng::unit() {
    return static_cast<double>(u64() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // Box-Muller; u1 shifted into (0,1] so log() is finite
    double u1 = (static_cast<double>(u64() >> 11) + 1.0) * 0x1.0p-53;
    double u2 = unit();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
}

Rng Rng::split(std::string_view label) const {
    std::array<uint8_t, 32> child{};
    crypto_generichash(child.data(), child.size(),
                       reinterpret_cast<const uint8_t*>(label.data()), label.size(),
                       key_.data(), key_.size());
    return Rng(child);
}

}  // namespace fedring
