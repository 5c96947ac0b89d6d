#include "slnek/arith.hpp"

#include <algorithm>
#include <cmath>

namespace slnek::arith {

FactorSieve::FactorSieve(i64 limit) : limit_(limit) {
    if (limit < 1) throw std::invalid_argument("FactorSieve: limit must be >= 1");
    spf_.assign(static_cast<size_t>(limit) + 1, 0);
    // Linear sieve: each composite is crossed off exactly once, by its
    // smallest prime factor.
    for (i64 m = 2; m <= limit; ++m) {
        if (spf_[m] == 0) {
            spf_[m] = m;
            primes_.push_back(m);
        }
        for (i64 p : primes_) {
            if (p > spf_[m] || p * m > limit) break;
            spf_[p * m] = p;
        }
    }
}

i64 FactorSieve::spf(i64 m) const {
    if (m < 2) throw std::out_of_range("FactorSieve::spf: argument below 2");
    check_range(m);
    return spf_[m];
}

bool FactorSieve::is_prime(i64 m) const {
    if (m < 2) return false;
    check_range(m);
    return spf_[m] == m;
}

bool FactorSieve::is_squarefree(i64 q) const {
    if (q < 1) throw std::invalid_argument("is_squarefree: argument must be positive");
    check_range(q);
    while (q > 1) {
        i64 p = spf_[q];
        q /= p;
        if (q % p == 0) return false;
    }
    return true;
}

int FactorSieve::omega(i64 m) const {
    if (m == 0) return 0;  // omega(0) = 0 by convention
    if (m < 0) m = -m;
    check_range(m);
    int w = 0;
    while (m > 1) {
        i64 p = spf_[m];
        ++w;
        while (m % p == 0) m /= p;
    }
    return w;
}

int FactorSieve::omega_truncated(i64 m, double z) const {
    if (m == 0) return 0;  // mirrors omega(0) = 0
    if (m < 0) m = -m;
    check_range(m);
    int w = 0;
    while (m > 1) {
        i64 p = spf_[m];
        if (static_cast<double>(p) <= z) ++w;
        while (m % p == 0) m /= p;
    }
    return w;
}

PrimeSet prime_set(const FactorSieve& sieve, double z) {
    PrimeSet P;
    P.z = z;
    for (i64 p : sieve.primes()) {
        if (static_cast<double>(p) > z) break;
        P.primes.push_back(p);
    }
    return P;
}

bool truncation_gap_ok(const FactorSieve& sieve, i64 m, double z) {
    if (m == 0) throw std::invalid_argument("truncation_gap_ok: m must be nonzero");
    i64 a = m < 0 ? -m : m;
    if (a <= 1) throw std::invalid_argument("truncation_gap_ok: |m| must exceed 1");
    if (!(z > 1.0)) throw std::invalid_argument("truncation_gap_ok: z must exceed 1");
    int gap = sieve.omega(a) - sieve.omega_truncated(a, z);
    return static_cast<double>(gap) <= std::log(static_cast<double>(a)) / std::log(z);
}

double truncation_epsilon(double T, double psi) {
    if (!(psi > 0.0 && psi < 0.5))
        throw std::domain_error("truncation_epsilon: psi must lie strictly in (0, 1/2)");
    const double e_to_e = std::exp(std::exp(1.0));
    if (!(T >= e_to_e))
        throw std::domain_error("truncation_epsilon: T must be at least e^e");
    return std::pow(std::log(std::log(T)), -psi);
}

Rational local_density(int n, i64 p, const FactorSieve& sieve) {
    if (n < 2) throw std::invalid_argument("local_density: n must be >= 2");
    if (!sieve.is_prime(p)) throw std::invalid_argument("local_density: p is not prime");
    i128 pn1 = 1;  // p^{n-1}
    for (int k = 0; k < n - 1; ++k) pn1 *= p;
    i128 pn = pn1 * p;
    Rational r;
    if (!detail::reduce_to_rational(pn1 - 1, pn - 1, r))
        throw std::overflow_error("local_density: overflow");
    return r;
}

Rational h_density(int n, i64 q, const FactorSieve& sieve) {
    if (q < 1) throw std::invalid_argument("h_density: q must be positive");
    if (!sieve.is_squarefree(q)) throw std::invalid_argument("h_density: q is not squarefree");
    Rational acc = Rational::integer(1);
    sieve.for_each_prime_factor(q, [&](i64 p) { acc = acc * local_density(n, p, sieve); });
    return acc;
}

Rational h_value(int n, i64 q, const FactorSieve& sieve) {
    return h_density(n, q, sieve) * Rational::integer(q);
}

SieveMoments sieve_moments(const PrimeSet& P, int n, const FactorSieve& sieve) {
    long double mu = 0.0L, s2 = 0.0L;
    for (i64 p : P.primes) {
        Rational d = local_density(n, p, sieve);
        long double theta = static_cast<long double>(d.num) / static_cast<long double>(d.den);
        mu += theta;
        s2 += theta * (1.0L - theta);
    }
    return SieveMoments{static_cast<double>(mu), static_cast<double>(s2)};
}

std::optional<std::pair<Rational, Rational>> sieve_moments_exact(const PrimeSet& P, int n,
                                                                 const FactorSieve& sieve) {
    Rational mu = Rational::integer(0), s2 = Rational::integer(0);
    for (i64 p : P.primes) {
        Rational theta = local_density(n, p, sieve);
        Rational one_minus, term;
        if (!try_sub(Rational::integer(1), theta, one_minus)) return std::nullopt;
        if (!try_mul(theta, one_minus, term)) return std::nullopt;
        if (!try_add(mu, theta, mu)) return std::nullopt;
        if (!try_add(s2, term, s2)) return std::nullopt;
    }
    return std::make_pair(mu, s2);
}

double gaussian_moment(int k) {
    if (k < 1) throw std::invalid_argument("gaussian_moment: k must be >= 1");
    long double lg = std::lgamma(static_cast<long double>(k) + 1.0L) -
                     (static_cast<long double>(k) / 2.0L) * std::log(2.0L) -
                     std::lgamma(static_cast<long double>(k) / 2.0L + 1.0L);
    return static_cast<double>(std::exp(lg));
}

}  // namespace slnek::arith
