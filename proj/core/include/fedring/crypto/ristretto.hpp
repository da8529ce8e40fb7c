// SPDX-License-Identifier: Apache-2.0
//
// Variable-time ristretto255 group arithmetic on extended Edwards
// coordinates. libsodium's ristretto API re-encodes the point after every
// operation, which makes vector commitments over tens of thousands of
// coordinates impractically slow; this unit keeps points in extended form
// so multi-term commitments cost one encode per chunk instead of one per
// group operation. Encodings are byte-identical to libsodium's, and the
// test suite cross-checks every operation against it.
//
// Not constant-time. Use only on public data (commitments, verification).
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>

namespace fedring::crypto::detail {

// Field element mod 2^255-19, radix 2^51, 5 limbs.
struct Fe {
    uint64_t v[5];
};

// Point in extended coordinates (X:Y:Z:T), x = X/Z, y = Y/Z, x*y = T/Z.
struct Point {
    Fe X, Y, Z, T;
};

Point point_identity();
Point point_add(const Point& a, const Point& b);
Point point_sub(const Point& a, const Point& b);
Point point_neg(const Point& a);

// Canonical ristretto255 decode/encode (RFC 9496 semantics).
std::optional<Point> point_decode(const std::array<uint8_t, 32>& enc);
std::array<uint8_t, 32> point_encode(const Point& p);

// Equality as ristretto group elements (coset-aware, no encode needed).
bool point_eq(const Point& a, const Point& b);

// p * scalar, scalar given as 32 little-endian bytes (< 2^255).
Point scalarmult_vartime(const Point& p, const std::array<uint8_t, 32>& scalar_le);

// p * k for small k.
Point mul_u64_vartime(const Point& p, uint64_t k);

// Sum of points[i] * exps[i] with signed small exponents, sharing the
// doubling chain across all terms. This is the commitment hot path.
Point msm_i64_vartime(std::span<const Point> points, std::span<const int64_t> exps);

}  // namespace fedring::crypto::detail
