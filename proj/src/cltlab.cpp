#include "slnek/cltlab.hpp"

#include <algorithm>
#include <cmath>

#include "slnek/matgen.hpp"
#include "slnek/sievestats.hpp"

namespace slnek::cltlab {

namespace {

double loglog_checked(double T, const char* what) {
    const double e_to_e = std::exp(std::exp(1.0));
    if (!(T >= e_to_e)) throw std::domain_error(std::string(what) + ": T must be at least e^e");
    return std::log(std::log(T));
}

}  // namespace

double standardize_full(double w, double T) {
    const double llt = loglog_checked(T, "standardize_full");
    return (w - llt) / std::sqrt(llt);
}

double standardize_truncated(double w, const arith::SieveMoments& moments) {
    if (!(moments.sigma2 > 0.0))
        throw std::domain_error("standardize_truncated: degenerate sigma");
    return (w - moments.mu) / std::sqrt(moments.sigma2);
}

Recentering recentering_decompose(double T, const arith::SieveMoments& moments) {
    const double llt = loglog_checked(T, "recentering_decompose");
    if (!(moments.sigma2 > 0.0))
        throw std::domain_error("recentering_decompose: degenerate sigma");
    const double sigma = std::sqrt(moments.sigma2);
    return Recentering{sigma / std::sqrt(llt), (moments.mu - llt) / sigma};
}

double normal_cdf(double x) {
    // Phi(x) = erfc(-x / sqrt(2)) / 2; erfc keeps full relative accuracy in
    // the left tail where 1 - Phi would cancel.
    return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

double EmpiricalDistribution::cdf(double v) const {
    u64 cum = 0;
    for (const auto& [val, cnt] : jumps) {
        if (val > v) break;
        cum += cnt;
    }
    return mass == 0 ? 0.0 : static_cast<double>(cum) / static_cast<double>(mass);
}

EmpiricalDistribution standardized_distribution(const OmegaHistogram& oh, double center,
                                                double spread) {
    if (!(spread > 0.0))
        throw std::domain_error("standardized_distribution: spread must be positive");
    EmpiricalDistribution emp;
    emp.mass = oh.total;
    for (size_t w = 0; w < oh.count.size(); ++w)
        if (oh.count[w] > 0)
            emp.jumps.emplace_back((static_cast<double>(w) - center) / spread, oh.count[w]);
    return emp;
}

double ks_distance(const EmpiricalDistribution& emp) {
    if (emp.mass == 0) throw std::invalid_argument("ks_distance: empty distribution");
    double d = 0.0;
    u64 cum = 0;
    const double mass = static_cast<double>(emp.mass);
    for (const auto& [v, cnt] : emp.jumps) {
        const double lo = static_cast<double>(cum) / mass;
        cum += cnt;
        const double hi = static_cast<double>(cum) / mass;
        const double phi = normal_cdf(v);
        d = std::max({d, std::fabs(hi - phi), std::fabs(lo - phi)});
    }
    return d;
}

EksPoint eks_point(int n, int i, int j, i64 B, double psi, int partitions,
                   const arith::FactorSieve& sieve) {
    EksPoint pt;
    pt.B = B;
    pt.T = isqrt64(B);
    if (pt.T * pt.T != B)
        throw std::invalid_argument("eks_point: B must be a perfect square (B = T^2, integer T)");
    const double T = static_cast<double>(pt.T);
    pt.loglog_t = loglog_checked(T, "eks_point");
    pt.epsilon = arith::truncation_epsilon(T, psi);
    pt.z = std::pow(T, pt.epsilon);
    if (sieve.limit() < pt.T)
        throw std::out_of_range("eks_point: sieve limit below sqrt(B)");

    ValueHistogram hist = matgen::entry_histogram(n, B, i, j, partitions);
    pt.x = hist.total();
    pt.zero_entries = hist.at(0);
    pt.omega_full = sievestats::omega_histogram(hist, sieve);
    pt.omega_trunc = sievestats::omega_histogram_truncated(hist, sieve, pt.z);

    arith::PrimeSet P = arith::prime_set(sieve, pt.z);
    arith::SieveMoments mom = arith::sieve_moments(P, n, sieve);
    pt.mu = mom.mu;
    pt.sigma2 = mom.sigma2;
    Recentering rc = recentering_decompose(T, mom);
    pt.scale = rc.scale;
    pt.shift = rc.shift;

    EmpiricalDistribution emp_full =
        standardized_distribution(pt.omega_full, pt.loglog_t, std::sqrt(pt.loglog_t));
    EmpiricalDistribution emp_trunc =
        standardized_distribution(pt.omega_trunc, mom.mu, std::sqrt(mom.sigma2));
    pt.ks_full = ks_distance(emp_full);
    pt.ks_trunc = ks_distance(emp_trunc);
    return pt;
}

std::vector<EksPoint> eks_experiment(int n, int i, int j, std::span<const i64> B_grid, double psi,
                                     int partitions, const arith::FactorSieve& sieve) {
    std::vector<i64> grid(B_grid.begin(), B_grid.end());
    std::sort(grid.begin(), grid.end());
    std::vector<EksPoint> out;
    out.reserve(grid.size());
    for (i64 B : grid) out.push_back(eks_point(n, i, j, B, psi, partitions, sieve));
    return out;
}

}  // namespace slnek::cltlab
