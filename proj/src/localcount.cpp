#include "slnek/localcount.hpp"

namespace slnek::localcount {

bool is_prime_small(i64 p) {
    if (p < 2) return false;
    for (i64 d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

bool is_squarefree_small(i64 q) {
    if (q < 1) return false;
    for (i64 d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            q /= d;
            if (q % d == 0) return false;
        }
    }
    return true;
}

namespace {

u64 checked_to_u64(u128 v, const char* what) {
    if (v > static_cast<u128>(std::numeric_limits<u64>::max()))
        throw std::overflow_error(std::string(what) + ": result exceeds 64 bits");
    return static_cast<u64>(v);
}

u128 pow_u128(i64 base, int exp) {
    u128 r = 1;
    for (int k = 0; k < exp; ++k) r *= static_cast<u128>(base);
    return r;
}

// prod over k = 1..n-1 of (p^n - p^k), the shared tail of both closed forms.
u128 gl_tail(int n, i64 p, const char* what) {
    const u128 pn = pow_u128(p, n);
    u128 acc = 1;
    for (int k = 1; k < n; ++k) {
        u128 term = pn - pow_u128(p, k);
        if (term != 0 && acc > static_cast<u128>(-1) / term)
            throw std::overflow_error(std::string(what) + ": 128-bit overflow");
        acc *= term;
    }
    return acc;
}

// (p^e - 1)/(p - 1) = 1 + p + ... + p^{e-1}
u128 geometric_sum(i64 p, int e) {
    u128 acc = 0, pw = 1;
    for (int k = 0; k < e; ++k) { acc += pw; pw *= static_cast<u128>(p); }
    return acc;
}

void check_np(int n, i64 p, const char* what) {
    if (n < 2) throw std::invalid_argument(std::string(what) + ": n must be >= 2");
    if (n > 6) throw std::invalid_argument(std::string(what) + ": n too large for exact 64-bit counts");
    if (!is_prime_small(p)) throw std::invalid_argument(std::string(what) + ": p is not prime");
}

template <class PerPrime>
u64 multiply_over_primes(int n, i64 q, const char* what, PerPrime&& f) {
    if (q < 1) throw std::invalid_argument(std::string(what) + ": q must be positive");
    if (!is_squarefree_small(q)) throw std::invalid_argument(std::string(what) + ": q is not squarefree");
    u128 acc = 1;
    for (i64 p = 2; q > 1; ++p) {
        if (q % p == 0) {
            q /= p;
            u128 term = f(n, p);
            if (term != 0 && acc > static_cast<u128>(-1) / term)
                throw std::overflow_error(std::string(what) + ": 128-bit overflow");
            acc *= term;
        }
    }
    return checked_to_u64(acc, what);
}

}  // namespace

u64 sl_order(int n, i64 p) {
    check_np(n, p, "sl_order");
    // (p^n - 1)/(p - 1) * prod_{k=1..n-1} (p^n - p^k)
    u128 head = geometric_sum(p, n);
    u128 tail = gl_tail(n, p, "sl_order");
    if (tail != 0 && head > static_cast<u128>(-1) / tail)
        throw std::overflow_error("sl_order: 128-bit overflow");
    return checked_to_u64(head * tail, "sl_order");
}

u64 sl_order_q(int n, i64 q) {
    return multiply_over_primes(n, q, "sl_order_q",
                                [](int nn, i64 p) { return static_cast<u128>(sl_order(nn, p)); });
}

u64 zero_entry_count(int n, i64 p) {
    check_np(n, p, "zero_entry_count");
    // (p^{n-1} - 1)/(p - 1) * prod_{k=1..n-1} (p^n - p^k)
    u128 head = geometric_sum(p, n - 1);
    u128 tail = gl_tail(n, p, "zero_entry_count");
    if (tail != 0 && head > static_cast<u128>(-1) / tail)
        throw std::overflow_error("zero_entry_count: 128-bit overflow");
    return checked_to_u64(head * tail, "zero_entry_count");
}

u64 zero_entry_count_q(int n, i64 q) {
    return multiply_over_primes(n, q, "zero_entry_count_q",
                                [](int nn, i64 p) { return static_cast<u128>(zero_entry_count(nn, p)); });
}

Rational expected_share(int n, i64 q) {
    if (q < 1) throw std::invalid_argument("expected_share: q must be positive");
    if (!is_squarefree_small(q)) throw std::invalid_argument("expected_share: q is not squarefree");
    Rational acc = Rational::integer(1);
    for (i64 p = 2; q > 1; ++p) {
        if (q % p == 0) {
            q /= p;
            i128 pn1 = 1;
            for (int k = 0; k < n - 1; ++k) pn1 *= p;
            Rational density;
            if (!slnek::detail::reduce_to_rational(pn1 - 1, pn1 * p - 1, density))
                throw std::overflow_error("expected_share: overflow");
            acc = acc * density;
        }
    }
    return acc;
}

namespace detail {

i64 det_mod(int n, const std::array<i64, 9>& e, i64 q) {
    i64 d;
    if (n == 2) {
        d = e[0] * e[3] - e[1] * e[2];
    } else {
        d = e[0] * (e[4] * e[8] - e[5] * e[7]) - e[1] * (e[3] * e[8] - e[5] * e[6]) +
            e[2] * (e[3] * e[7] - e[4] * e[6]);
    }
    return ((d % q) + q) % q;
}

void check_brute_args(int n, i64 q) {
    if (n != 2 && n != 3) throw std::invalid_argument("brute_force_count: n must be 2 or 3");
    if (q < 1) throw std::invalid_argument("brute_force_count: q must be positive");
    i128 space = 1;
    for (int k = 0; k < n * n; ++k) {
        space *= q;
        if (space > kBruteForceCap)
            throw std::invalid_argument("brute_force_count: search space exceeds the exhaustive cap");
    }
}

}  // namespace detail

u64 brute_force_order(int n, i64 q) {
    return brute_force_count(n, q, [](const std::array<i64, 9>&) { return true; });
}

u64 brute_force_zero_entry(int n, i64 q, int i, int j) {
    if (i < 1 || i > n || j < 1 || j > n)
        throw std::out_of_range("brute_force_zero_entry: position out of range");
    const int idx = (i - 1) * n + (j - 1);
    return brute_force_count(n, q, [idx](const std::array<i64, 9>& e) { return e[idx] == 0; });
}

}  // namespace slnek::localcount
