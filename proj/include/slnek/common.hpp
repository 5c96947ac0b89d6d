#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace slnek {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128_t;
using u128 = __uint128_t;

// floor(sqrt(n)) computed exactly; double sqrt plus integer fixup.
inline i64 isqrt64(i64 n) {
    if (n < 0) throw std::domain_error("isqrt64: negative argument");
    if (n == 0) return 0;
    i64 r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Division rounding toward -inf / +inf for possibly negative operands, b > 0 or b < 0 (b != 0).
constexpr i64 floor_div(i64 a, i64 b) {
    i64 q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

constexpr i64 ceil_div(i64 a, i64 b) {
    i64 q = a / b, r = a % b;
    return (r != 0 && ((r < 0) == (b < 0))) ? q + 1 : q;
}

// Extended Euclid: returns gcd(a, m) and sets inv to a^{-1} mod m when the gcd is 1.
// Requires 0 <= a < m, m >= 1.
inline i64 mod_inverse(i64 a, i64 m, i64& inv) {
    i64 old_r = a, r = m;
    i64 old_s = 1, s = 0;
    while (r != 0) {
        i64 q = old_r / r;
        i64 t = old_r - q * r; old_r = r; r = t;
        t = old_s - q * s; old_s = s; s = t;
    }
    inv = ((old_s % m) + m) % m;
    return old_r < 0 ? -old_r : old_r;
}

// Exact rational with int64 numerator/denominator, reduced, den > 0.
// Arithmetic goes through 128-bit intermediates; results that do not fit back
// into int64 raise overflow_error (callers that want a fallback use try_*).
struct Rational {
    i64 num = 0;
    i64 den = 1;

    Rational() = default;
    Rational(i64 n, i64 d) : num(n), den(d) { normalize(); }
    static Rational integer(i64 n) { return Rational(n, 1); }

    void normalize() {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        i64 g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

namespace detail {
inline i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) { i128 t = a % b; a = b; b = t; }
    return a;
}
constexpr i128 kI64Max = std::numeric_limits<i64>::max();
inline bool reduce_to_rational(i128 n, i128 d, Rational& out) {
    if (d < 0) { n = -n; d = -d; }
    i128 g = gcd128(n, d);
    if (g > 1) { n /= g; d /= g; }
    if (n > kI64Max || n < -kI64Max || d > kI64Max) return false;
    out.num = static_cast<i64>(n);
    out.den = static_cast<i64>(d);
    return true;
}
}  // namespace detail

inline bool try_add(const Rational& a, const Rational& b, Rational& out) {
    i128 n = static_cast<i128>(a.num) * b.den + static_cast<i128>(b.num) * a.den;
    i128 d = static_cast<i128>(a.den) * b.den;
    return detail::reduce_to_rational(n, d, out);
}

inline bool try_mul(const Rational& a, const Rational& b, Rational& out) {
    i128 n = static_cast<i128>(a.num) * b.num;
    i128 d = static_cast<i128>(a.den) * b.den;
    return detail::reduce_to_rational(n, d, out);
}

inline bool try_sub(const Rational& a, const Rational& b, Rational& out) {
    return try_add(a, Rational(-b.num, b.den), out);
}

inline Rational operator+(const Rational& a, const Rational& b) {
    Rational r;
    if (!try_add(a, b, r)) throw std::overflow_error("Rational addition overflow");
    return r;
}

inline Rational operator*(const Rational& a, const Rational& b) {
    Rational r;
    if (!try_mul(a, b, r)) throw std::overflow_error("Rational multiplication overflow");
    return r;
}

inline Rational operator-(const Rational& a, const Rational& b) {
    Rational r;
    if (!try_sub(a, b, r)) throw std::overflow_error("Rational subtraction overflow");
    return r;
}

}  // namespace slnek
