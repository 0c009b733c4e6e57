#pragma once

/*
 * Digit extraction for the power-2-decaying Gauss-like expansion
 *
 *     x = sum_i 2^{-(d_1 + ... + d_i)},  d_i >= 1,
 *
 * together with the underlying shift map T and exact cylinder-interval
 * geometry. The digit of x is the unique d with x in (2^{-d}, 2^{-d+1}]
 * (branches are left-open, right-closed, so d(1) = 1 and d(2^{-k}) = k+1),
 * and T x = 2^d x - 1 maps each branch onto (0,1].
 *
 * Everything here is exact integer arithmetic; rounding never enters.
 */

#include "rational.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace p2dgl {

using digit_t = std::int64_t;
using DigitWord = std::vector<digit_t>;

/// The branch index d >= 1 with x in (2^{-d}, 2^{-d+1}].
inline digit_t digit_of(const RationalPoint& x) {
    BigInt p = x.numerator(), q = x.denominator();
    if (p == q) return 1;
    // Largest e with p * 2^e <= q; then d = e + 1.
    auto e = static_cast<std::int64_t>(boost::multiprecision::msb(q)) -
             static_cast<std::int64_t>(boost::multiprecision::msb(p));
    if ((p << static_cast<unsigned>(e)) > q) --e;
    return e + 1;
}

/// One step of the shift map: T x = 2^{d(x)} x - 1, again in (0,1].
inline RationalPoint apply_T(const RationalPoint& x) {
    digit_t d = digit_of(x);
    BigInt p = x.numerator(), q = x.denominator();
    BigInt num = (p << static_cast<unsigned>(d)) - q;
    return RationalPoint(std::move(num), std::move(q));
}

/// First n digits of x, by iterating digit extraction and T.
inline DigitWord expand(const RationalPoint& x, std::size_t n) {
    DigitWord w;
    w.reserve(n);
    RationalPoint cur = x;
    for (std::size_t i = 0; i < n; ++i) {
        digit_t d = digit_of(cur);
        w.push_back(d);
        BigInt p = cur.numerator(), q = cur.denominator();
        cur = RationalPoint((p << static_cast<unsigned>(d)) - q, std::move(q));
    }
    return w;
}

/// Eventually periodic digit stream of a rational point. The preperiod is
/// minimal and the period is the minimal cycle of the T-orbit.
struct PeriodicExpansion {
    DigitWord preperiod;
    DigitWord period; // nonempty

    digit_t digit_at(std::size_t i) const { // zero-based
        if (i < preperiod.size()) return preperiod[i];
        return period[(i - preperiod.size()) % period.size()];
    }

    DigitWord first_digits(std::size_t n) const {
        DigitWord w;
        w.reserve(n);
        for (std::size_t i = 0; i < n; ++i) w.push_back(digit_at(i));
        return w;
    }
};

/// Cycle detection on the T-orbit (Brent's algorithm; O(1) extra state).
/// Every rational has a finite orbit since T maps p/q to (2^d p - q)/q.
inline PeriodicExpansion expand_periodic(const RationalPoint& x) {
    auto step = [](const RationalPoint& r) { return apply_T(r); };

    // cycle length
    std::size_t power = 1, lambda = 1;
    RationalPoint tortoise = x;
    RationalPoint hare = step(x);
    while (!(tortoise == hare)) {
        if (power == lambda) {
            tortoise = hare;
            power *= 2;
            lambda = 0;
        }
        hare = step(hare);
        ++lambda;
    }
    // start of the cycle
    RationalPoint a = x, b = x;
    for (std::size_t i = 0; i < lambda; ++i) b = step(b);
    std::size_t mu = 0;
    while (!(a == b)) {
        a = step(a);
        b = step(b);
        ++mu;
    }

    DigitWord all = expand(x, mu + lambda);
    PeriodicExpansion pe;
    pe.preperiod.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(mu));
    pe.period.assign(all.begin() + static_cast<std::ptrdiff_t>(mu), all.end());
    return pe;
}

inline std::int64_t digit_sum(const DigitWord& w) {
    std::int64_t s = 0;
    for (digit_t d : w) s += d;
    return s;
}

/// The set of points whose expansion starts with a fixed digit word:
/// the half-open interval (left, right] with exact dyadic endpoints and
/// length 2^{-(d_1+...+d_n)}.
struct Cylinder {
    DigitWord word;
    BigRat left;
    BigRat right;
    std::int64_t sum = 0; // digit sum; length = 2^{-sum}

    BigRat length() const { return pow2_inv(sum); }
    bool contains(const BigRat& x) const { return left < x && x <= right; }
};

/// Left endpoint sum_i 2^{-(d_1+...+d_i)} of the word's cylinder.
inline RationalPoint reconstruct(const DigitWord& word) {
    if (word.empty()) throw std::invalid_argument("reconstruct: empty digit word");
    BigRat acc = 0;
    std::int64_t s = 0;
    for (digit_t d : word) {
        if (d < 1) throw std::invalid_argument("reconstruct: digits must be >= 1");
        s += d;
        acc += pow2_inv(s);
    }
    return RationalPoint(std::move(acc));
}

inline Cylinder cylinder(const DigitWord& word) {
    if (word.empty()) throw std::invalid_argument("cylinder: empty digit word");
    Cylinder c;
    c.word = word;
    c.left = reconstruct(word).value();
    c.sum = digit_sum(word);
    c.right = c.left + pow2_inv(c.sum);
    return c;
}

/*
 * Fixed-width dyadic fast path. A point p/2^e with 0 < p <= 2^e is one
 * 64-bit word; the digit is read off the most significant bit of p and
 * T strips that bit. Used for bulk grid experiments (e <= 62).
 */
struct DyadicU64 {
    std::uint64_t num; // 1 <= num <= 2^exp
    int exp;           // value = num / 2^exp
};

inline int msb_index_u64(std::uint64_t v) { return 63 - std::countl_zero(v); }

/// Digit of a dyadic point together with its image under T.
inline std::pair<digit_t, DyadicU64> dyadic_digit_and_shift(DyadicU64 x) {
    int m = msb_index_u64(x.num);
    if (x.num == (std::uint64_t{1} << m)) {
        // x = 2^{m-exp}: right endpoint of its branch, maps to 1.
        return {x.exp - m + 1, DyadicU64{1, 0}};
    }
    std::uint64_t p = x.num - (std::uint64_t{1} << m); // strip the msb
    int tz = std::countr_zero(p);
    int red = tz < m ? tz : m;
    return {x.exp - m, DyadicU64{p >> red, m - red}};
}

} // namespace p2dgl
