#pragma once

#include <span>
#include <utility>
#include <vector>

#include "slnek/arith.hpp"
#include "slnek/histogram.hpp"

// The distributional endgame: standardized omega statistics over a norm
// ball, empirical CDFs, and Kolmogorov-Smirnov distances against the
// standard normal, computed across a grid of squared-norm bounds.

namespace slnek::cltlab {

// (w - loglog T) / sqrt(loglog T); requires T >= e^e.
double standardize_full(double w, double T);

// (w - mu_P) / sigma_P; requires sigma_P > 0.
double standardize_truncated(double w, const arith::SieveMoments& moments);

// standardize_full(w, T) = scale * (standardize_truncated(w) + shift) for
// every w, with scale = sigma_P / sqrt(loglog T) and
// shift = (mu_P - loglog T) / sigma_P.
struct Recentering {
    double scale = 1.0;
    double shift = 0.0;
};
Recentering recentering_decompose(double T, const arith::SieveMoments& moments);

// Phi(x), absolute accuracy well below 1e-10.
double normal_cdf(double x);

// Step CDF with jump points in strictly increasing order.
struct EmpiricalDistribution {
    std::vector<std::pair<double, u64>> jumps;
    u64 mass = 0;

    double cdf(double v) const;
};

// Maps an omega histogram through w -> (w - center)/spread, spread > 0.
EmpiricalDistribution standardized_distribution(const OmegaHistogram& oh, double center,
                                                double spread);

// sup over jump points v of max(|F(v) - Phi(v)|, |F(v-) - Phi(v)|).
double ks_distance(const EmpiricalDistribution& emp);

struct EksPoint {
    i64 B = 0;
    i64 T = 0;
    u64 x = 0;
    double loglog_t = 0;
    double epsilon = 0;
    double z = 0;
    double mu = 0;
    double sigma2 = 0;
    double scale = 1;
    double shift = 0;
    u64 zero_entries = 0;  // samples with entry 0 (they carry omega = 0)
    OmegaHistogram omega_full;
    OmegaHistogram omega_trunc;
    double ks_full = 0;
    double ks_trunc = 0;
};

// For each B in the grid (B = T^2 with integer T > e^e): enumerate the ball
// once, histogram omega and omega_P of the chosen entry, and measure both
// standardized distributions against Phi.
std::vector<EksPoint> eks_experiment(int n, int i, int j, std::span<const i64> B_grid, double psi,
                                     int partitions, const arith::FactorSieve& sieve);

// Grid point driver shared with the CLI: same pipeline for one B.
EksPoint eks_point(int n, int i, int j, i64 B, double psi, int partitions,
                   const arith::FactorSieve& sieve);

}  // namespace slnek::cltlab
