// SPDX-License-Identifier: Apache-2.0
#include "fedring/crypto/level_keys.hpp"

#include <sodium.h>

#include <cstring>

namespace fedring::crypto {

namespace {

constexpr size_t kNonceBytes = crypto_aead_xchacha20poly1305_ietf_NPUBBYTES;
constexpr size_t kTagBytes = crypto_aead_xchacha20poly1305_ietf_ABYTES;

std::array<uint8_t, 32> kdf_step(const std::array<uint8_t, 32>& key, std::string_view label) {
    std::array<uint8_t, 32> out{};
    crypto_generichash(out.data(), out.size(), reinterpret_cast<const uint8_t*>(label.data()),
                       label.size(), key.data(), key.size());
    return out;
}

Bytes aead_encrypt(std::span<const uint8_t> plain, const std::array<uint8_t, 32>& key, Rng& rng) {
    Bytes out(kNonceBytes + plain.size() + kTagBytes);
    rng.fill(out.data(), kNonceBytes);
    unsigned long long clen = 0;
    crypto_aead_xchacha20poly1305_ietf_encrypt(out.data() + kNonceBytes, &clen, plain.data(),
                                               plain.size(), nullptr, 0, nullptr, out.data(),
                                               key.data());
    out.resize(kNonceBytes + clen);
    return out;
}

Bytes aead_decrypt(std::span<const uint8_t> blob, const std::array<uint8_t, 32>& key,
                   const char* what) {
    if (blob.size() < kNonceBytes + kTagBytes) throw DecryptionError(what);
    Bytes plain(blob.size() - kNonceBytes - kTagBytes);
    unsigned long long plen = 0;
    if (crypto_aead_xchacha20poly1305_ietf_decrypt(plain.data(), &plen, nullptr,
                                                   blob.data() + kNonceBytes,
                                                   blob.size() - kNonceBytes, nullptr, 0,
                                                   blob.data(), key.data()) != 0)
        throw DecryptionError(what);
    plain.resize(plen);
    return plain;
}

}  // namespace

const char* level_name(Level level) {
    switch (level) {
        case Level::A: return "A";
        case Level::B: return "B";
        case Level::C: return "C";
        case Level::D: return "D";
    }
    throw std::invalid_argument("level_name: bad level");
}

Level level_from_name(std::string_view name) {
    if (name == "A") return Level::A;
    if (name == "B") return Level::B;
    if (name == "C") return Level::C;
    if (name == "D") return Level::D;
    throw std::invalid_argument("level_from_name: expected one of A, B, C, D");
}

LevelKey make_master_level_key(Rng& rng) {
    LevelKey k;
    k.level = Level::A;
    rng.fill(k.key.data(), k.key.size());
    return k;
}

LevelKey derive_level_key(const LevelKey& top, Level target) {
    if (!level_dominates(top.level, target))
        throw AuthorizationError(std::string("derive_level_key: level ") + level_name(top.level) +
                                 " cannot derive level " + level_name(target));
    LevelKey k = top;
    while (k.level != target) {
        Level next = static_cast<Level>(static_cast<uint8_t>(k.level) + 1);
        k.key = kdf_step(k.key, std::string("fedring.level.") + level_name(next));
        k.level = next;
    }
    return k;
}

Bytes encrypt_model(std::span<const uint8_t> model, const LevelKey& key, Rng& rng) {
    return aead_encrypt(model, key.key, rng);
}

Bytes decrypt_model(std::span<const uint8_t> ciphertext, const LevelKey& key) {
    return aead_decrypt(ciphertext, key.key, "decrypt_model: authentication failed");
}

std::array<uint8_t, 32> user_wrapping_key(const std::array<uint8_t, 32>& master_secret,
                                          std::string_view user_id) {
    return kdf_step(master_secret, std::string("fedring.user-wrap.") + std::string(user_id));
}

UserSecretKey wrap_level_key(const LevelKey& key, std::string user_id,
                             const std::array<uint8_t, 32>& wrapping_key, Rng& rng) {
    Bytes plain(1 + key.key.size());
    plain[0] = static_cast<uint8_t>(key.level);
    std::memcpy(plain.data() + 1, key.key.data(), key.key.size());
    return UserSecretKey{std::move(user_id), key.level, aead_encrypt(plain, wrapping_key, rng)};
}

LevelKey unwrap_level_key(const UserSecretKey& usk,
                          const std::array<uint8_t, 32>& wrapping_key) {
    Bytes plain = aead_decrypt(usk.wrapped, wrapping_key, "unwrap_level_key: bad wrapping key");
    if (plain.size() != 33 || plain[0] > static_cast<uint8_t>(Level::D))
        throw DecryptionError("unwrap_level_key: malformed payload");
    LevelKey k;
    k.level = static_cast<Level>(plain[0]);
    std::memcpy(k.key.data(), plain.data() + 1, 32);
    return k;
}

}  // namespace fedring::crypto
