// SPDX-License-Identifier: Apache-2.0
//
// Leveled access keys for the model market. One master key at level A; each
// lower level's key is a one-way KDF step from the level above, so holding
// a high-level key grants everything below it and nothing above. Per-user
// copies are AEAD-wrapped under a user-unique key so no two users share
// bytes.
#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "fedring/bytes.hpp"
#include "fedring/rng.hpp"

namespace fedring::crypto {

enum class Level : uint8_t { A = 0, B = 1, C = 2, D = 3 };

/// A dominates B dominates C dominates D.
inline bool level_dominates(Level holder, Level target) {
    return static_cast<uint8_t>(holder) <= static_cast<uint8_t>(target);
}

const char* level_name(Level level);
Level level_from_name(std::string_view name);

struct LevelKey {
    Level level;
    std::array<uint8_t, 32> key;

    bool operator==(const LevelKey&) const = default;
};

struct AuthorizationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DecryptionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Fresh level-A master key.
LevelKey make_master_level_key(Rng& rng);

/// Walk the KDF chain down to target. Requesting a level above the holder's
/// throws AuthorizationError.
LevelKey derive_level_key(const LevelKey& top, Level target);

/// Authenticated encryption (XChaCha20-Poly1305, random nonce prepended).
Bytes encrypt_model(std::span<const uint8_t> model, const LevelKey& key, Rng& rng);

/// Throws DecryptionError when the key is wrong or the blob was tampered
/// with; never returns garbage plaintext.
Bytes decrypt_model(std::span<const uint8_t> ciphertext, const LevelKey& key);

struct UserSecretKey {
    std::string user_id;
    Level level;
    Bytes wrapped;  // AEAD-wrapped LevelKey under the user's wrapping key
};

/// Per-user wrapping key from the issuer's master secret.
std::array<uint8_t, 32> user_wrapping_key(const std::array<uint8_t, 32>& master_secret,
                                          std::string_view user_id);

UserSecretKey wrap_level_key(const LevelKey& key, std::string user_id,
                             const std::array<uint8_t, 32>& wrapping_key, Rng& rng);

/// Throws DecryptionError on a mismatched wrapping key or tampered blob.
LevelKey unwrap_level_key(const UserSecretKey& usk,
                          const std::array<uint8_t, 32>& wrapping_key);

}  // namespace fedring::crypto
