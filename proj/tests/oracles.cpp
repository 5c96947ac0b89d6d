#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace slnek::oracle {

std::vector<std::array<i64, 4>> cube_search2(i64 B) {
    std::vector<std::array<i64, 4>> out;
    if (B < 0) return out;
    const i64 m = isqrt64(B);
    for (i64 a = -m; a <= m; ++a)
        for (i64 b = -m; b <= m; ++b) {
            if (a * a + b * b > B) continue;
            for (i64 c = -m; c <= m; ++c) {
                if (a * a + b * b + c * c > B) continue;
                for (i64 d = -m; d <= m; ++d) {
                    if (a * a + b * b + c * c + d * d > B) continue;
                    if (a * d - b * c == 1) out.push_back({a, b, c, d});
                }
            }
        }
    return out;
}

std::vector<std::array<i64, 9>> cube_search3(i64 B) {
    std::vector<std::array<i64, 9>> out;
    if (B < 0) return out;
    const i64 m = isqrt64(B);
    std::array<i64, 9> e{};
    // nine nested levels, budget-pruned, determinant checked at the leaf
    auto det = [&]() {
        return e[0] * (e[4] * e[8] - e[5] * e[7]) - e[1] * (e[3] * e[8] - e[5] * e[6]) +
               e[2] * (e[3] * e[7] - e[4] * e[6]);
    };
    auto rec = [&](auto&& self, int k, i64 used) -> void {
        if (k == 9) {
            if (det() == 1) out.push_back(e);
            return;
        }
        for (i64 v = -m; v <= m; ++v) {
            const i64 nu = used + v * v;
            if (nu > B) continue;
            e[k] = v;
            self(self, k + 1, nu);
        }
        e[k] = 0;
    };
    rec(rec, 0, 0);
    return out;
}

int omega_trial(i64 m) {
    if (m == 0) return 0;
    if (m < 0) m = -m;
    int w = 0;
    for (i64 p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            ++w;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) ++w;
    return w;
}

int omega_trial_truncated(i64 m, double z) {
    if (m == 0) return 0;
    if (m < 0) m = -m;
    int w = 0;
    for (i64 p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            if (static_cast<double>(p) <= z) ++w;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1 && static_cast<double>(m) <= z) ++w;
    return w;
}

double phi_quadrature(double x) {
    // Phi(x) = 1/2 + integral_0^x of the density; composite Simpson with a
    // step small enough for ~1e-13 absolute error on [-8, 8].
    const double lo = 0.0, hi = std::fabs(x);
    const int steps = 40000;  // even
    const double h = (hi - lo) / steps;
    auto dens = [](double t) { return std::exp(-0.5 * t * t); };
    double acc = dens(lo) + dens(hi);
    for (int k = 1; k < steps; ++k) acc += dens(lo + k * h) * (k % 2 == 1 ? 4.0 : 2.0);
    const double integral = acc * h / 3.0 / std::sqrt(8.0 * std::atan(1.0));
    return x >= 0 ? 0.5 + integral : 0.5 - integral;
}

SubsetProducts subset_products(const std::vector<i64>& primes, int k, u64 cap) {
    if (primes.size() > 20) throw std::invalid_argument("subset_products: prime set too large");
    SubsetProducts out;
    const unsigned n = static_cast<unsigned>(primes.size());
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) > k) continue;
        u128 prod = 1;
        for (unsigned i = 0; i < n; ++i)
            if (mask & (1u << i)) prod *= static_cast<u128>(primes[i]);
        if (prod <= cap)
            out.values.push_back(static_cast<u64>(prod));
        else
            ++out.overflowed;
    }
    std::sort(out.values.begin(), out.values.end());
    return out;
}

}  // namespace slnek::oracle
