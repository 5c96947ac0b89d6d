#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "slnek/common.hpp"

namespace slnek::arith {

// Smallest-prime-factor table for 2..limit, built once with a linear sieve.
// Immutable afterwards; all queries are lock-free reads, so one sieve can be
// shared across enumeration partitions.
class FactorSieve {
  public:
    explicit FactorSieve(i64 limit);

    i64 limit() const { return limit_; }
    const std::vector<i64>& primes() const { return primes_; }

    i64 spf(i64 m) const;            // smallest prime factor, 2 <= m <= limit
    bool is_prime(i64 m) const;
    bool is_squarefree(i64 q) const; // q >= 1, q <= limit

    // Number of distinct prime factors of |m|; omega(0) = 0, omega(+-1) = 0.
    int omega(i64 m) const;

    // Distinct prime factors of |m| that are <= z (the truncated omega_P with
    // P = all primes <= z). omega_truncated(0, .) = 0.
    int omega_truncated(i64 m, double z) const;

    // Visits the distinct prime factors of |m| in increasing order.
    template <class Fn>
    void for_each_prime_factor(i64 m, Fn&& fn) const {
        if (m < 0) m = -m;
        check_range(m);
        while (m > 1) {
            i64 p = spf_[m];
            fn(p);
            while (m % p == 0) m /= p;
        }
    }

  private:
    void check_range(i64 m) const {
        if (m > limit_) throw std::out_of_range("FactorSieve: value exceeds sieve limit");
    }
    i64 limit_;
    std::vector<i64> spf_;
    std::vector<i64> primes_;
};

// P = { p prime : p <= z }, kept with the threshold that produced it.
struct PrimeSet {
    double z = 0.0;
    std::vector<i64> primes;
};

PrimeSet prime_set(const FactorSieve& sieve, double z);

struct SieveMoments {
    double mu = 0.0;      // sum of h(p)/p over P
    double sigma2 = 0.0;  // sum of (h(p)/p)(1 - h(p)/p)
};

// omega(m) - omega_P(m) <= log|m| / log z for every |m| > 1, z > 1; this
// checks the inequality for one value (it holds unconditionally: at most
// log|m|/log z prime factors of m exceed z, even with multiplicity).
bool truncation_gap_ok(const FactorSieve& sieve, i64 m, double z);

// epsilon(T) = (log log T)^(-psi). Requires T >= e^e (the value at T = e^e is
// exactly 1) and psi strictly inside (0, 1/2).
double truncation_epsilon(double T, double psi);

// h(p)/p = (p^{n-1} - 1) / (p^n - 1), the density of a fixed zero entry in
// SL_n(F_p), as an exact rational.
Rational local_density(int n, i64 p, const FactorSieve& sieve);

// h(q)/q = prod_{p | q} h(p)/p for squarefree q (h(1) = 1); non-squarefree q
// is rejected rather than mapped to 0.
Rational h_density(int n, i64 q, const FactorSieve& sieve);

// h(q) itself (= q * h_density; rational in general).
Rational h_value(int n, i64 q, const FactorSieve& sieve);

// mu_P and sigma_P^2 accumulated in long double from exact per-prime densities.
SieveMoments sieve_moments(const PrimeSet& P, int n, const FactorSieve& sieve);

// Exact-rational route for the same sums. int64 rationals overflow once the
// running denominator outgrows 2^63 (a few dozen primes), in which case this
// returns nullopt and callers fall back to the double version above.
std::optional<std::pair<Rational, Rational>> sieve_moments_exact(const PrimeSet& P, int n,
                                                                 const FactorSieve& sieve);

// C_k = Gamma(k+1) / (2^{k/2} Gamma(k/2 + 1)); equals (k-1)!! for even k.
double gaussian_moment(int k);

}  // namespace slnek::arith
