#include "slnek/sievestats.hpp"

#include <algorithm>
#include <cmath>

#include "slnek/matgen.hpp"

namespace slnek::sievestats {

CongruenceReport congruence_count(const ValueHistogram& hist, i64 q, int n,
                                  const arith::FactorSieve& sieve) {
    if (q < 1) throw std::invalid_argument("congruence_count: q must be positive");
    if (!sieve.is_squarefree(q)) throw std::invalid_argument("congruence_count: q is not squarefree");
    CongruenceReport r;
    r.q = q;
    r.x = hist.total();
    u64 obs = hist.at(0);  // q | 0 for every q
    for (i64 v = q; v <= hist.vmax(); v += q) obs += hist.at(v) + hist.at(-v);
    r.observed = obs;
    r.expected = arith::h_density(n, q, sieve).to_double() * static_cast<double>(r.x);
    r.residual = static_cast<double>(obs) - r.expected;
    return r;
}

std::vector<CongruenceReport> congruence_counts(const ValueHistogram& hist,
                                                std::span<const i64> q_list, int n,
                                                const arith::FactorSieve& sieve) {
    std::vector<CongruenceReport> out;
    out.reserve(q_list.size());
    for (i64 q : q_list) out.push_back(congruence_count(hist, q, n, sieve));
    return out;
}

std::vector<i64> squarefree_moduli(i64 q_max, const arith::FactorSieve& sieve) {
    std::vector<i64> out;
    for (i64 q = 1; q <= q_max; ++q)
        if (sieve.is_squarefree(q)) out.push_back(q);
    return out;
}

namespace {

u128 binomial_u128_saturating(u64 n, int k) {
    if (k < 0 || static_cast<u64>(k) > n) return 0;
    u128 r = 1;
    const u128 cap = static_cast<u128>(-1) / 2;
    for (int j = 1; j <= k; ++j) {
        const u128 factor = static_cast<u128>(n - j + 1);
        if (r > cap / factor) return cap;  // saturate
        r = r * factor / static_cast<u128>(j);
    }
    return r;
}

}  // namespace

SquarefreeProducts squarefree_products(const arith::PrimeSet& P, int k, u64 cap) {
    if (k < 0) throw std::invalid_argument("squarefree_products: k must be >= 0");
    SquarefreeProducts out;
    out.values.push_back(1);
    // DFS over index/product; subtrees starting above the cap are pruned and
    // their member count charged to the overflow tally.
    struct Frame { size_t idx; u64 prod; int used; };
    std::vector<Frame> stack;
    stack.push_back({0, 1, 0});
    const size_t np = P.primes.size();
    u128 overflow = 0;
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        for (size_t i = f.idx; i < np; ++i) {
            if (f.used + 1 > k) break;
            const u64 p = static_cast<u64>(P.primes[i]);
            if (f.prod > cap / p) {
                // every extension with this or a later prime overflows; count
                // the subsets of at most k - used elements from the remainder
                for (int extra = 1; extra <= k - f.used; ++extra)
                    overflow += binomial_u128_saturating(static_cast<u64>(np - i), extra);
                break;
            }
            const u64 prod = f.prod * p;
            out.values.push_back(prod);
            if (f.used + 1 < k && i + 1 < np) stack.push_back({i + 1, prod, f.used + 1});
        }
    }
    std::sort(out.values.begin(), out.values.end());
    const u128 sat = static_cast<u128>(std::numeric_limits<u64>::max());
    out.overflowed = overflow > sat ? std::numeric_limits<u64>::max() : static_cast<u64>(overflow);
    return out;
}

namespace {

OmegaHistogram omega_histogram_impl(const ValueHistogram& hist, const arith::FactorSieve& sieve,
                                    bool truncated, double z) {
    if (hist.vmax() > sieve.limit())
        throw std::out_of_range("omega_histogram: values exceed the sieve limit");
    OmegaHistogram oh;
    for (i64 v = -hist.vmax(); v <= hist.vmax(); ++v) {
        const u64 c = hist.at(v);
        if (c == 0) continue;
        const int w = truncated ? sieve.omega_truncated(v, z) : sieve.omega(v);
        oh.add(w, c);
    }
    return oh;
}

}  // namespace

OmegaHistogram omega_histogram(const ValueHistogram& hist, const arith::FactorSieve& sieve) {
    return omega_histogram_impl(hist, sieve, false, 0.0);
}

OmegaHistogram omega_histogram_truncated(const ValueHistogram& hist,
                                         const arith::FactorSieve& sieve, double z) {
    return omega_histogram_impl(hist, sieve, true, z);
}

double moment_sum(const OmegaHistogram& oh, int k, double mu) {
    if (k < 0) throw std::invalid_argument("moment_sum: k must be >= 0");
    long double total = 0.0L;
    for (size_t w = 0; w < oh.count.size(); ++w) {
        if (oh.count[w] == 0) continue;
        const long double dev = static_cast<long double>(w) - static_cast<long double>(mu);
        long double pw = 1.0L;
        for (int j = 0; j < k; ++j) pw *= dev;
        total += pw * static_cast<long double>(oh.count[w]);
    }
    return static_cast<double>(total);
}

std::vector<MomentReport> normalized_moments(const OmegaHistogram& oh,
                                             const arith::SieveMoments& moments, int k_max) {
    if (k_max < 1) throw std::invalid_argument("normalized_moments: k_max must be >= 1");
    if (!(moments.sigma2 > 0.0))
        throw std::domain_error("normalized_moments: degenerate prime set (sigma = 0)");
    const double sigma = std::sqrt(moments.sigma2);
    const double x = static_cast<double>(oh.total);
    std::vector<MomentReport> out;
    out.reserve(static_cast<size_t>(k_max));
    double sigk = 1.0;
    for (int k = 1; k <= k_max; ++k) {
        sigk *= sigma;
        MomentReport m;
        m.k = k;
        m.raw_sum = moment_sum(oh, k, moments.mu);
        m.normalized = m.raw_sum / (x * sigk);
        m.reference = (k % 2 == 0) ? arith::gaussian_moment(k) : 0.0;
        out.push_back(m);
    }
    return out;
}

std::vector<ResidualRow> residual_profile(int n, int i, int j, std::span<const i64> q_list,
                                          std::span<const i64> B_grid, int partitions,
                                          const arith::FactorSieve& sieve) {
    std::vector<ResidualRow> out;
    std::vector<i64> grid(B_grid.begin(), B_grid.end());
    std::sort(grid.begin(), grid.end());
    for (i64 B : grid) {
        ValueHistogram hist = matgen::entry_histogram(n, B, i, j, partitions);
        for (i64 q : q_list) {
            CongruenceReport c = congruence_count(hist, q, n, sieve);
            out.push_back(ResidualRow{B, q, c.x, c.observed, c.expected, c.residual});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const ResidualRow& a, const ResidualRow& b) {
                  return a.B != b.B ? a.B < b.B : a.q < b.q;
              });
    return out;
}

double residual_decay_slope(std::span<const ResidualRow> rows_for_q) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int m = 0;
    for (const auto& r : rows_for_q) {
        if (r.residual == 0.0 || r.x == 0) continue;
        const double lx = std::log(static_cast<double>(r.x));
        const double ly = std::log(std::fabs(r.residual) / static_cast<double>(r.x));
        sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
        ++m;
    }
    if (m < 2) return 0.0;
    const double denom = m * sxx - sx * sx;
    return denom == 0.0 ? 0.0 : (m * sxy - sx * sy) / denom;
}

}  // namespace slnek::sievestats
