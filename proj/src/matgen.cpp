#include "slnek/matgen.hpp"

#include <cmath>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace slnek::matgen {

void validate_ball(int n, i64 B) {
    if (n != 2 && n != 3) throw std::invalid_argument("unsupported dimension: n must be 2 or 3");
    if (B < 0) throw std::invalid_argument("squared-norm bound must be non-negative");
    if (B > kMaxSquaredNormBound)
        throw std::overflow_error("squared-norm bound too large: ball count would overflow");
}

namespace {

template <class PartFn>
void run_partitions(int partitions, PartFn&& body) {
    if (partitions <= 1) {
        body(0, 1);
        return;
    }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (int p = 0; p < partitions; ++p) body(p, partitions);
}

}  // namespace

u64 count_ball(int n, i64 B, int partitions) {
    validate_ball(n, B);
    if (partitions < 1) partitions = 1;
    std::vector<u64> per(static_cast<size_t>(partitions), 0);
    run_partitions(partitions, [&](int p, int np) {
        auto sink2 = [](i64, i64, i64, i64) {};
        auto sink3 = [](const std::array<i64, 9>&) {};
        per[p] = (n == 2) ? scan_ball2(B, p, np, sink2) : scan_ball3(B, p, np, sink3);
    });
    u64 total = 0;
    for (u64 c : per) total += c;
    return total;
}

namespace {

void validate_position(int n, int i, int j) {
    if (i < 1 || i > n || j < 1 || j > n)
        throw std::out_of_range("entry index out of range for dimension n");
}

}  // namespace

ValueHistogram entry_histogram(int n, i64 B, int i, int j, int partitions) {
    validate_ball(n, B);
    validate_position(n, i, j);
    if (partitions < 1) partitions = 1;
    const i64 vmax = isqrt64(B);
    const int idx = (i - 1) * n + (j - 1);
    std::vector<ValueHistogram> per(static_cast<size_t>(partitions));
    run_partitions(partitions, [&](int p, int np) {
        ValueHistogram h(vmax);
        if (n == 2) {
            scan_ball2(B, p, np, [&](i64 a, i64 b, i64 c, i64 d) {
                const i64 v[4] = {a, b, c, d};
                h.add(v[idx]);
            });
        } else {
            scan_ball3(B, p, np, [&](const std::array<i64, 9>& e) { h.add(e[idx]); });
        }
        per[p] = std::move(h);
    });
    ValueHistogram out(vmax);
    for (auto& h : per) out.merge(h);
    return out;
}

std::vector<ValueHistogram> entry_histograms_all(int n, i64 B, int partitions) {
    validate_ball(n, B);
    if (partitions < 1) partitions = 1;
    const i64 vmax = isqrt64(B);
    const int nn = n * n;
    std::vector<std::vector<ValueHistogram>> per(static_cast<size_t>(partitions));
    run_partitions(partitions, [&](int p, int np) {
        std::vector<ValueHistogram> h(nn, ValueHistogram(vmax));
        if (n == 2) {
            scan_ball2(B, p, np, [&](i64 a, i64 b, i64 c, i64 d) {
                h[0].add(a); h[1].add(b); h[2].add(c); h[3].add(d);
            });
        } else {
            scan_ball3(B, p, np, [&](const std::array<i64, 9>& e) {
                for (int k = 0; k < 9; ++k) h[k].add(e[k]);
            });
        }
        per[p] = std::move(h);
    });
    std::vector<ValueHistogram> out(nn, ValueHistogram(vmax));
    for (auto& hs : per)
        for (int k = 0; k < nn; ++k) out[k].merge(hs[k]);
    return out;
}

void enumerate_ball(int n, i64 B, const std::function<void(const UnimodularMatrix&)>& consumer) {
    validate_ball(n, B);
    if (n == 2) {
        scan_ball2(B, 0, 1, [&](i64 a, i64 b, i64 c, i64 d) {
            UnimodularMatrix g;
            g.n = 2;
            g.e = {a, b, c, d, 0, 0, 0, 0, 0};
            consumer(g);
        });
    } else {
        scan_ball3(B, 0, 1, [&](const std::array<i64, 9>& e) {
            UnimodularMatrix g;
            g.n = 3;
            g.e = e;
            consumer(g);
        });
    }
}

std::vector<UnimodularMatrix> collect_ball(int n, i64 B) {
    std::vector<UnimodularMatrix> out;
    enumerate_ball(n, B, [&](const UnimodularMatrix& g) { out.push_back(g); });
    return out;
}

void entry_stream(int n, i64 B, int i, int j, const std::function<void(i64)>& consumer) {
    validate_ball(n, B);
    validate_position(n, i, j);
    const int idx = (i - 1) * n + (j - 1);
    if (n == 2) {
        scan_ball2(B, 0, 1, [&](i64 a, i64 b, i64 c, i64 d) {
            const i64 v[4] = {a, b, c, d};
            consumer(v[idx]);
        });
    } else {
        scan_ball3(B, 0, 1, [&](const std::array<i64, 9>& e) { consumer(e[idx]); });
    }
}

std::vector<i64> entry_stream_collect(int n, i64 B, int i, int j) {
    std::vector<i64> out;
    entry_stream(n, B, i, j, [&](i64 v) { out.push_back(v); });
    return out;
}

double zeta_int(int s) {
    if (s < 2) throw std::invalid_argument("zeta_int: s must be >= 2");
    const int N = 100;
    long double sum = 0.0L;
    for (int k = 1; k <= N; ++k) sum += std::pow(static_cast<long double>(k), -s);
    const long double Nl = static_cast<long double>(N);
    const long double sl = static_cast<long double>(s);
    // Euler-Maclaurin tail after the partial sum up to N
    sum += std::pow(Nl, 1.0L - sl) / (sl - 1.0L);
    sum -= 0.5L * std::pow(Nl, -sl);
    sum += sl / 12.0L * std::pow(Nl, -sl - 1.0L);
    sum -= sl * (sl + 1.0L) * (sl + 2.0L) / 720.0L * std::pow(Nl, -sl - 3.0L);
    sum += sl * (sl + 1.0L) * (sl + 2.0L) * (sl + 3.0L) * (sl + 4.0L) / 30240.0L *
           std::pow(Nl, -sl - 5.0L);
    return static_cast<double>(sum);
}

double asymptotic_constant(int n) {
    if (n < 2 || n > 10)
        throw std::invalid_argument("asymptotic_constant: n must lie in [2, 10]");
    const long double pi = 3.14159265358979323846264338327950288L;
    long double log_c = (static_cast<long double>(n) * n / 2.0L) * std::log(pi);
    log_c -= std::lgamma(static_cast<long double>(n) / 2.0L);
    log_c -= std::lgamma((static_cast<long double>(n) * n - n + 2.0L) / 2.0L);
    for (int s = 2; s <= n; ++s) log_c -= std::log(static_cast<long double>(zeta_int(s)));
    return static_cast<double>(std::exp(log_c));
}

}  // namespace slnek::matgen
