// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

namespace fedring {

/// Deterministic random stream backed by a ChaCha20 keystream.
///
/// Every random choice in the system (keys, nonces, shuffles, SGD batch
/// order, synthetic data) flows through one of these, so a whole experiment
/// is a pure function of its master seed. Child streams created with
/// split() are statistically independent and may be consumed concurrently
/// without affecting the parent, which is what makes multi-threaded runs
/// reproducible.
class Rng {
public:
    explicit Rng(uint64_t seed);
    explicit Rng(const std::array<uint8_t, 32>& key);

    void fill(void* out, size_t n);

    uint64_t u64();

    /// Uniform in [0, bound). bound must be nonzero.
    uint64_t below(uint64_t bound);

    /// Uniform in [0, 1) with 53 bits of precision.
    double unit();

    /// Standard normal via Box-Muller.
    double normal();

    template <class T>
    void shuffle(std::vector<T>& v) {
        if (v.size() < 2) return;
        for (size_t i = v.size() - 1; i > 0; i--) {
            size_t j = static_cast<size_t>(below(i + 1));
            std::swap(v[i], v[j]);
        }
    }

    /// Independent child stream; same (parent key, label) always yields the
    /// same child.
    Rng split(std::string_view label) const;

private:
    void refill();

    std::array<uint8_t, 32> key_;
    uint64_t block_counter_ = 0;
    std::array<uint8_t, 512> buf_{};
    size_t pos_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace fedring
