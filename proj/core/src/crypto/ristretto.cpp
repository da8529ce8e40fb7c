// SPDX-License-Identifier: Apache-2.0
#include "fedring/crypto/ristretto.hpp"

#include <cstring>
#include <vector>

namespace fedring::crypto::detail {

namespace {

using u128 = unsigned __int128;

constexpr uint64_t MASK51 = (1ULL << 51) - 1;

// curve constants, radix 2^51
constexpr Fe FE_D = {{0x34dca135978a3ULL, 0x1a8283b156ebdULL, 0x5e7a26001c029ULL,
                      0x739c663a03cbbULL, 0x52036cee2b6ffULL}};
constexpr Fe FE_D2 = {{0x69b9426b2f159ULL, 0x35050762add7aULL, 0x3cf44c0038052ULL,
                       0x6738cc7407977ULL, 0x2406d9dc56dffULL}};
constexpr Fe FE_SQRT_M1 = {{0x61b274a0ea0b0ULL, 0xd5a5fc8f189dULL, 0x7ef5e9cbd0c60ULL,
                            0x78595a6804c9eULL, 0x2b8324804fc1dULL}};
constexpr Fe FE_INVSQRT_A_MINUS_D = {{0xfdaa805d40eaULL, 0x2eb482e57d339ULL, 0x7610274bc58ULL,
                                      0x6510b613dc8ffULL, 0x786c8905cfaffULL}};

Fe fe_zero() { return Fe{{0, 0, 0, 0, 0}}; }
Fe fe_one() { return Fe{{1, 0, 0, 0, 0}}; }

// One carry pass; limbs come out < 2^51 + epsilon.
void fe_weak_reduce(Fe& t) {
    t.v[1] += t.v[0] >> 51; t.v[0] &= MASK51;
    t.v[2] += t.v[1] >> 51; t.v[1] &= MASK51;
    t.v[3] += t.v[2] >> 51; t.v[2] &= MASK51;
    t.v[4] += t.v[3] >> 51; t.v[3] &= MASK51;
    t.v[0] += 19 * (t.v[4] >> 51); t.v[4] &= MASK51;
}

Fe fe_add(const Fe& a, const Fe& b) {
    Fe r;
    for (int i = 0; i < 5; i++) r.v[i] = a.v[i] + b.v[i];
    fe_weak_reduce(r);
    return r;
}

// a - b; inputs must have limbs < 2^52 (true for everything this unit stores)
Fe fe_sub(const Fe& a, const Fe& b) {
    // add 2p limbwise so nothing underflows
    Fe r;
    r.v[0] = a.v[0] + 0xFFFFFFFFFFFDAULL - b.v[0];
    r.v[1] = a.v[1] + 0xFFFFFFFFFFFFEULL - b.v[1];
    r.v[2] = a.v[2] + 0xFFFFFFFFFFFFEULL - b.v[2];
    r.v[3] = a.v[3] + 0xFFFFFFFFFFFFEULL - b.v[3];
    r.v[4] = a.v[4] + 0xFFFFFFFFFFFFEULL - b.v[4];
    fe_weak_reduce(r);
    return r;
}

Fe fe_neg(const Fe& a) { return fe_sub(fe_zero(), a); }

Fe fe_mul(const Fe& f, const Fe& g) {
    uint64_t f0 = f.v[0], f1 = f.v[1], f2 = f.v[2], f3 = f.v[3], f4 = f.v[4];
    uint64_t g0 = g.v[0], g1 = g.v[1], g2 = g.v[2], g3 = g.v[3], g4 = g.v[4];
    uint64_t g1_19 = 19 * g1, g2_19 = 19 * g2, g3_19 = 19 * g3, g4_19 = 19 * g4;

    u128 r0 = (u128)f0 * g0 + (u128)f1 * g4_19 + (u128)f2 * g3_19 + (u128)f3 * g2_19 + (u128)f4 * g1_19;
    u128 r1 = (u128)f0 * g1 + (u128)f1 * g0 + (u128)f2 * g4_19 + (u128)f3 * g3_19 + (u128)f4 * g2_19;
    u128 r2 = (u128)f0 * g2 + (u128)f1 * g1 + (u128)f2 * g0 + (u128)f3 * g4_19 + (u128)f4 * g3_19;
    u128 r3 = (u128)f0 * g3 + (u128)f1 * g2 + (u128)f2 * g1 + (u128)f3 * g0 + (u128)f4 * g4_19;
    u128 r4 = (u128)f0 * g4 + (u128)f1 * g3 + (u128)f2 * g2 + (u128)f3 * g1 + (u128)f4 * g0;

    Fe out;
    uint64_t c;
    out.v[0] = (uint64_t)r0 & MASK51; c = (uint64_t)(r0 >> 51);
    r1 += c;
    out.v[1] = (uint64_t)r1 & MASK51; c = (uint64_t)(r1 >> 51);
    r2 += c;
    out.v[2] = (uint64_t)r2 & MASK51; c = (uint64_t)(r2 >> 51);
    r3 += c;
    out.v[3] = (uint64_t)r3 & MASK51; c = (uint64_t)(r3 >> 51);
    r4 += c;
    out.v[4] = (uint64_t)r4 & MASK51; c = (uint64_t)(r4 >> 51);
    out.v[0] += c * 19;
    out.v[1] += out.v[0] >> 51; out.v[0] &= MASK51;
    return out;
}

Fe fe_sq(const Fe& f) { return fe_mul(f, f); }

// Canonical little-endian encoding (value fully reduced mod p).
void fe_tobytes(uint8_t out[32], const Fe& f) {
    uint64_t t0 = f.v[0], t1 = f.v[1], t2 = f.v[2], t3 = f.v[3], t4 = f.v[4];
    auto carry = [&] {
        t1 += t0 >> 51; t0 &= MASK51;
        t2 += t1 >> 51; t1 &= MASK51;
        t3 += t2 >> 51; t2 &= MASK51;
        t4 += t3 >> 51; t3 &= MASK51;
        t0 += 19 * (t4 >> 51); t4 &= MASK51;
    };
    carry();
    carry();
    // offset-by-19 canonicalization: value becomes (f mod p) + 19, then
    // adding p and dropping bit 255 leaves exactly f mod p
    t0 += 19;
    carry();
    t0 += (MASK51 + 1) - 19;
    t1 += MASK51;
    t2 += MASK51;
    t3 += MASK51;
    t4 += MASK51;
    t1 += t0 >> 51; t0 &= MASK51;
    t2 += t1 >> 51; t1 &= MASK51;
    t3 += t2 >> 51; t2 &= MASK51;
    t4 += t3 >> 51; t3 &= MASK51;
    t4 &= MASK51;

    uint64_t w0 = t0 | t1 << 51;
    uint64_t w1 = t1 >> 13 | t2 << 38;
    uint64_t w2 = t2 >> 26 | t3 << 25;
    uint64_t w3 = t3 >> 39 | t4 << 12;
    std::memcpy(out, &w0, 8);
    std::memcpy(out + 8, &w1, 8);
    std::memcpy(out + 16, &w2, 8);
    std::memcpy(out + 24, &w3, 8);
}

Fe fe_frombytes(const uint8_t in[32]) {
    uint64_t w0, w1, w2, w3;
    std::memcpy(&w0, in, 8);
    std::memcpy(&w1, in + 8, 8);
    std::memcpy(&w2, in + 16, 8);
    std::memcpy(&w3, in + 24, 8);
    Fe r;
    r.v[0] = w0 & MASK51;
    r.v[1] = (w0 >> 51 | w1 << 13) & MASK51;
    r.v[2] = (w1 >> 38 | w2 << 26) & MASK51;
    r.v[3] = (w2 >> 25 | w3 << 39) & MASK51;
    r.v[4] = w3 >> 12 & MASK51;  // drops bit 255
    return r;
}

bool fe_is_zero(const Fe& f) {
    uint8_t b[32];
    fe_tobytes(b, f);
    uint8_t acc = 0;
    for (int i = 0; i < 32; i++) acc |= b[i];
    return acc == 0;
}

bool fe_eq(const Fe& a, const Fe& b) { return fe_is_zero(fe_sub(a, b)); }

bool fe_is_negative(const Fe& f) {
    uint8_t b[32];
    fe_tobytes(b, f);
    return (b[0] & 1) != 0;
}

Fe fe_abs(const Fe& f) { return fe_is_negative(f) ? fe_neg(f) : f; }

// f^(2^252 - 3), the core of both invert and inverse-sqrt
Fe fe_pow22523(const Fe& z) {
    Fe t0 = fe_sq(z);                                   // 2
    Fe t1 = fe_sq(fe_sq(t0));                           // 8
    t1 = fe_mul(z, t1);                                 // 9
    t0 = fe_mul(t0, t1);                                // 11
    t0 = fe_sq(t0);                                     // 22
    t0 = fe_mul(t1, t0);                                // 31 = 2^5 - 1
    t1 = fe_sq(t0);
    for (int i = 0; i < 4; i++) t1 = fe_sq(t1);         // 2^10 - 2^5
    t0 = fe_mul(t1, t0);                                // 2^10 - 1
    t1 = fe_sq(t0);
    for (int i = 0; i < 9; i++) t1 = fe_sq(t1);         // 2^20 - 2^10
    t1 = fe_mul(t1, t0);                                // 2^20 - 1
    Fe t2 = fe_sq(t1);
    for (int i = 0; i < 19; i++) t2 = fe_sq(t2);        // 2^40 - 2^20
    t1 = fe_mul(t2, t1);                                // 2^40 - 1
    for (int i = 0; i < 10; i++) t1 = fe_sq(t1);        // 2^50 - 2^10
    t0 = fe_mul(t1, t0);                                // 2^50 - 1
    t1 = fe_sq(t0);
    for (int i = 0; i < 49; i++) t1 = fe_sq(t1);        // 2^100 - 2^50
    t1 = fe_mul(t1, t0);                                // 2^100 - 1
    t2 = fe_sq(t1);
    for (int i = 0; i < 99; i++) t2 = fe_sq(t2);        // 2^200 - 2^100
    t1 = fe_mul(t2, t1);                                // 2^200 - 1
    for (int i = 0; i < 50; i++) t1 = fe_sq(t1);        // 2^250 - 2^50
    t0 = fe_mul(t1, t0);                                // 2^250 - 1
    t0 = fe_sq(fe_sq(t0));                              // 2^252 - 4
    return fe_mul(t0, z);                               // 2^252 - 3
}

struct SqrtRatioResult {
    bool was_square;
    Fe root;
};

// Nonnegative sqrt(u/v) when u/v is square, else sqrt(SQRT_M1 * u/v).
SqrtRatioResult sqrt_ratio_m1(const Fe& u, const Fe& v) {
    Fe v3 = fe_mul(fe_sq(v), v);
    Fe v7 = fe_mul(fe_sq(v3), v);
    Fe r = fe_mul(fe_mul(u, v3), fe_pow22523(fe_mul(u, v7)));
    Fe check = fe_mul(v, fe_sq(r));

    bool correct_sign = fe_eq(check, u);
    Fe neg_u = fe_neg(u);
    bool flipped_sign = fe_eq(check, neg_u);
    bool flipped_sign_i = fe_eq(check, fe_mul(neg_u, FE_SQRT_M1));

    if (flipped_sign || flipped_sign_i) r = fe_mul(r, FE_SQRT_M1);
    return {correct_sign || flipped_sign, fe_abs(r)};
}

}  // namespace

Point point_identity() { return Point{fe_zero(), fe_one(), fe_one(), fe_zero()}; }

// Unified extended-coordinate addition for a = -1 (add-2008-hwcd-3); also
// used for doubling.
Point point_add(const Point& p, const Point& q) {
    Fe a = fe_mul(fe_sub(p.Y, p.X), fe_sub(q.Y, q.X));
    Fe b = fe_mul(fe_add(p.Y, p.X), fe_add(q.Y, q.X));
    Fe c = fe_mul(fe_mul(p.T, FE_D2), q.T);
    Fe d = fe_mul(fe_add(p.Z, p.Z), q.Z);
    Fe e = fe_sub(b, a);
    Fe f = fe_sub(d, c);
    Fe g = fe_add(d, c);
    Fe h = fe_add(b, a);
    return Point{fe_mul(e, f), fe_mul(g, h), fe_mul(f, g), fe_mul(e, h)};
}

Point point_neg(const Point& p) { return Point{fe_neg(p.X), p.Y, p.Z, fe_neg(p.T)}; }

Point point_sub(const Point& a, const Point& b) { return point_add(a, point_neg(b)); }

bool point_eq(const Point& a, const Point& b) {
    // ristretto equality: X1*Y2 == Y1*X2 or Y1*Y2 == X1*X2
    return fe_eq(fe_mul(a.X, b.Y), fe_mul(a.Y, b.X)) ||
           fe_eq(fe_mul(a.Y, b.Y), fe_mul(a.X, b.X));
}

std::optional<Point> point_decode(const std::array<uint8_t, 32>& enc) {
    if ((enc[31] & 0x80) != 0) return std::nullopt;
    Fe s = fe_frombytes(enc.data());
    uint8_t canon[32];
    fe_tobytes(canon, s);
    if (std::memcmp(canon, enc.data(), 32) != 0) return std::nullopt;
    if (fe_is_negative(s)) return std::nullopt;

    Fe ss = fe_sq(s);
    Fe u1 = fe_sub(fe_one(), ss);
    Fe u2 = fe_add(fe_one(), ss);
    Fe u2_sqr = fe_sq(u2);
    Fe v = fe_sub(fe_neg(fe_mul(FE_D, fe_sq(u1))), u2_sqr);

    auto [was_square, invsqrt] = sqrt_ratio_m1(fe_one(), fe_mul(v, u2_sqr));

    Fe den_x = fe_mul(invsqrt, u2);
    Fe den_y = fe_mul(fe_mul(invsqrt, den_x), v);

    Fe x = fe_abs(fe_mul(fe_add(s, s), den_x));
    Fe y = fe_mul(u1, den_y);
    Fe t = fe_mul(x, y);

    if (!was_square || fe_is_negative(t) || fe_is_zero(y)) return std::nullopt;
    return Point{x, y, fe_one(), t};
}

std::array<uint8_t, 32> point_encode(const Point& p) {
    Fe u1 = fe_mul(fe_add(p.Z, p.Y), fe_sub(p.Z, p.Y));
    Fe u2 = fe_mul(p.X, p.Y);
    auto [_, invsqrt] = sqrt_ratio_m1(fe_one(), fe_mul(u1, fe_sq(u2)));

    Fe den1 = fe_mul(invsqrt, u1);
    Fe den2 = fe_mul(invsqrt, u2);
    Fe z_inv = fe_mul(fe_mul(den1, den2), p.T);

    Fe x = p.X;
    Fe y = p.Y;
    Fe den_inv = den2;
    if (fe_is_negative(fe_mul(p.T, z_inv))) {
        x = fe_mul(p.Y, FE_SQRT_M1);
        y = fe_mul(p.X, FE_SQRT_M1);
        den_inv = fe_mul(den1, FE_INVSQRT_A_MINUS_D);
    }
    if (fe_is_negative(fe_mul(x, z_inv))) y = fe_neg(y);

    Fe s = fe_abs(fe_mul(den_inv, fe_sub(p.Z, y)));
    std::array<uint8_t, 32> out{};
    fe_tobytes(out.data(), s);
    return out;
}

Point scalarmult_vartime(const Point& p, const std::array<uint8_t, 32>& scalar_le) {
    int top = -1;
    for (int bit = 254; bit >= 0; bit--) {
        if (scalar_le[bit / 8] >> (bit % 8) & 1) { top = bit; break; }
    }
    if (top < 0) return point_identity();
    Point acc = p;
    for (int bit = top - 1; bit >= 0; bit--) {
        acc = point_add(acc, acc);
        if (scalar_le[bit / 8] >> (bit % 8) & 1) acc = point_add(acc, p);
    }
    return acc;
}

Point mul_u64_vartime(const Point& p, uint64_t k) {
    if (k == 0) return point_identity();
    int top = 63;
    while (!(k >> top & 1)) top--;
    Point acc = p;
    for (int bit = top - 1; bit >= 0; bit--) {
        acc = point_add(acc, acc);
        if (k >> bit & 1) acc = point_add(acc, p);
    }
    return acc;
}

Point msm_i64_vartime(std::span<const Point> points, std::span<const int64_t> exps) {
    size_t n = std::min(points.size(), exps.size());
    std::vector<Point> base;
    std::vector<uint64_t> mag;
    base.reserve(n);
    mag.reserve(n);
    uint64_t all = 0;
    for (size_t j = 0; j < n; j++) {
        if (exps[j] == 0) continue;
        if (exps[j] < 0) {
            base.push_back(point_neg(points[j]));
            mag.push_back(static_cast<uint64_t>(-exps[j]));
        } else {
            base.push_back(points[j]);
            mag.push_back(static_cast<uint64_t>(exps[j]));
        }
        all |= mag.back();
    }
    if (base.empty()) return point_identity();
    int top = 63;
    while (!(all >> top & 1)) top--;

    // One shared doubling chain; adds cost ~popcount per term.
    Point acc = point_identity();
    for (int bit = top; bit >= 0; bit--) {
        acc = point_add(acc, acc);
        for (size_t j = 0; j < base.size(); j++)
            if (mag[j] >> bit & 1) acc = point_add(acc, base[j]);
    }
    return acc;
}

}  // namespace fedring::crypto::detail
