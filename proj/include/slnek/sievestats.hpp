#pragma once

#include <span>
#include <vector>

#include "slnek/arith.hpp"
#include "slnek/histogram.hpp"

// Congruence counts A_q with residuals against the local densities, the
// squarefree product sets D_k(P), and truncated moment sums.  Everything
// here consumes the exact value histogram produced by enumeration, so one
// pass over the ball serves every modulus, threshold and moment order.

namespace slnek::sievestats {

struct CongruenceReport {
    i64 q = 1;
    u64 observed = 0;    // A_q = #{ a : q | a }, with q | 0 for every q
    double expected = 0; // h(q)/q * x
    double residual = 0; // observed - expected
    u64 x = 0;
};

std::vector<CongruenceReport> congruence_counts(const ValueHistogram& hist,
                                                std::span<const i64> q_list, int n,
                                                const arith::FactorSieve& sieve);

CongruenceReport congruence_count(const ValueHistogram& hist, i64 q, int n,
                                  const arith::FactorSieve& sieve);

// All squarefree q <= q_max (including 1), ascending.
std::vector<i64> squarefree_moduli(i64 q_max, const arith::FactorSieve& sieve);

struct SquarefreeProducts {
    std::vector<u64> values;  // ascending, includes the empty product 1
    u64 overflowed = 0;       // how many products exceeded the cap (tallied, not dropped)
};

// D_k(P): squarefree products of at most k distinct elements of P, up to cap.
SquarefreeProducts squarefree_products(const arith::PrimeSet& P, int k,
                                       u64 cap = std::numeric_limits<u64>::max() / 2);

// omega histogram of a value histogram: full omega, or omega_P with P = primes <= z.
OmegaHistogram omega_histogram(const ValueHistogram& hist, const arith::FactorSieve& sieve);
OmegaHistogram omega_histogram_truncated(const ValueHistogram& hist,
                                         const arith::FactorSieve& sieve, double z);

// sum over the sample of (omega_P(a) - mu)^k, evaluated from the omega
// histogram so every order shares one enumeration pass.
double moment_sum(const OmegaHistogram& oh, int k, double mu);

struct MomentReport {
    int k = 0;
    double raw_sum = 0;     // sum (omega_P - mu_P)^k
    double normalized = 0;  // raw_sum / (x sigma_P^k)
    double reference = 0;   // C_k for even k, 0 for odd k
};

std::vector<MomentReport> normalized_moments(const OmegaHistogram& oh,
                                             const arith::SieveMoments& moments, int k_max);

struct ResidualRow {
    i64 B = 0;
    i64 q = 1;
    u64 x = 0;
    u64 observed = 0;
    double expected = 0;
    double residual = 0;
};

// Residuals across a grid of squared-norm bounds, sorted by (B, q).
std::vector<ResidualRow> residual_profile(int n, int i, int j, std::span<const i64> q_list,
                                          std::span<const i64> B_grid, int partitions,
                                          const arith::FactorSieve& sieve);

// Least-squares slope of log(|r_q|/x) against log x over the grid rows of one
// modulus; descriptive only.  Rows with r_q = 0 are skipped; returns 0 when
// fewer than two usable rows remain.
double residual_decay_slope(std::span<const ResidualRow> rows_for_q);

}  // namespace slnek::sievestats
