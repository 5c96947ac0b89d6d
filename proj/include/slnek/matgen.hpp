#pragma once

#include <array>
#include <functional>
#include <vector>

#include "slnek/common.hpp"
#include "slnek/histogram.hpp"

// Exact enumeration of norm balls in SL_n(Z):
//
//   V(B) = { g in SL_n(Z) : sum of squared entries <= B },
//
// i.e. Frobenius norm at most T with B = T^2 kept as an integer so every
// membership test is exact.
//
// n = 2: write g = (a b; c d), det = ad - bc = 1.  For a != 0 the pair (a, b)
// admits a solution iff gcd(a, b) = 1, and the valid c form one residue class
// c = -b^{-1} (mod |a|); d = (1 + bc)/a is then an exact integer and moves by
// b*sign(a) per progression step, so the inner loop is division-free.  The
// walk is clamped to |1 + bc| <= |a| * floor(sqrt(S)) before the exact budget
// check c^2 + d^2 <= S = B - a^2 - b^2.  For a = 0, bc = -1 forces
// (b, c) = (-1, 1) or (1, -1) with d free inside the budget.
//
// n = 3: depth-first search over the nine entries in lexicographic order with
// running squared-norm budget pruning; subtrees whose first two rows are
// linearly dependent (vanishing cross product) are cut, and the last entry is
// solved from the determinant cofactor identity rather than scanned.
//
// Partitioning: the ball is split by the value of the first entry (n = 2) or
// by the index of the first row (n = 3).  Each partition is enumerated
// independently in lexicographic order; with one partition the global
// delivery order is lexicographic on the flattened entry tuple.  Counts and
// histograms are merged associatively, so totals do not depend on the
// partition count.

namespace slnek::matgen {

// Squared-norm bound cap guarding the 64-bit count (the count grows like
// 6*B for n = 2); far beyond anything enumerable anyway.
inline constexpr i64 kMaxSquaredNormBound = 400'000'000'000'000'000LL;

struct UnimodularMatrix {
    int n = 2;
    std::array<i64, 9> e{};  // row-major, first n*n entries used

    i64 entry(int i, int j) const { return e[static_cast<size_t>((i - 1) * n + (j - 1))]; }
    i64 det() const {
        if (n == 2) return e[0] * e[3] - e[1] * e[2];
        return e[6] * (e[1] * e[5] - e[2] * e[4]) + e[7] * (e[2] * e[3] - e[0] * e[5]) +
               e[8] * (e[0] * e[4] - e[1] * e[3]);
    }
    i64 norm2() const {
        i64 s = 0;
        for (int k = 0; k < n * n; ++k) s += e[k] * e[k];
        return s;
    }
    friend bool operator==(const UnimodularMatrix& x, const UnimodularMatrix& y) {
        return x.n == y.n && x.e == y.e;
    }
    friend bool operator<(const UnimodularMatrix& x, const UnimodularMatrix& y) { return x.e < y.e; }
};

void validate_ball(int n, i64 B);

// Minimal squared norm attained in SL_n(Z): n (at signed permutation-type
// matrices), so the ball is empty iff B < n.
inline i64 min_norm2(int n) { return n; }

// --- n = 2 kernel ------------------------------------------------------
// Emits every (a, b, c, d) of the partition, lexicographically within it.
template <class Fn>
u64 scan_ball2(i64 B, int part, int nparts, Fn&& emit) {
    if (B < 2) return 0;
    u64 delivered = 0;
    const i64 amax = isqrt64(B);
    for (i64 a = -amax; a <= amax; ++a) {
        if (nparts > 1 && (a + amax) % nparts != part) continue;
        if (a == 0) {
            const i64 dmax = isqrt64(B - 2);
            for (i64 d = -dmax; d <= dmax; ++d) { emit(i64(0), i64(-1), i64(1), d); ++delivered; }
            for (i64 d = -dmax; d <= dmax; ++d) { emit(i64(0), i64(1), i64(-1), d); ++delivered; }
            continue;
        }
        const i64 m = a < 0 ? -a : a;
        const i64 a2 = a * a;
        const i64 bmax = isqrt64(B - a2);
        for (i64 b = -bmax; b <= bmax; ++b) {
            const i64 S = B - a2 - b * b;  // remaining budget for c^2 + d^2
            i64 r = 0;                     // progression residue: c = r (mod m)
            if (m > 1) {
                i64 bm = ((b % m) + m) % m;
                i64 inv;
                if (mod_inverse(bm, m, inv) != 1) continue;  // gcd(a,b) > 1: no unimodular completion
                r = (m - inv) % m;
            }
            const i64 cdmax = isqrt64(S);
            i64 lo = -cdmax, hi = cdmax;
            if (b != 0) {
                // |1 + b c| <= m * cdmax is necessary for the d budget
                const i64 span = m * cdmax;
                i64 clo, chi;
                if (b > 0) { clo = ceil_div(-1 - span, b); chi = floor_div(-1 + span, b); }
                else       { clo = ceil_div(-1 + span, b); chi = floor_div(-1 - span, b); }
                if (clo > lo) lo = clo;
                if (chi < hi) hi = chi;
            }
            if (lo > hi) continue;
            i64 c = r + m * ceil_div(lo - r, m);
            if (c > hi) continue;
            i64 d = (1 + b * c) / a;  // exact: a | 1 + bc on the progression
            const i64 dstep = a > 0 ? b : -b;
            for (; c <= hi; c += m, d += dstep) {
                if (c * c + d * d <= S) { emit(a, b, c, d); ++delivered; }
            }
        }
    }
    return delivered;
}

// --- n = 3 kernel ------------------------------------------------------
template <class Fn>
u64 scan_ball3(i64 B, int part, int nparts, Fn&& emit) {
    if (B < 3) return 0;
    u64 delivered = 0;
    std::array<i64, 9> e{};
    const i64 m0 = isqrt64(B);
    u64 row_index = 0;  // lexicographic index of the first row, for partitioning
    for (e[0] = -m0; e[0] <= m0; ++e[0]) {
        const i64 r0 = B - e[0] * e[0];
        const i64 m1 = isqrt64(r0);
        for (e[1] = -m1; e[1] <= m1; ++e[1]) {
            const i64 r1 = r0 - e[1] * e[1];
            const i64 m2 = isqrt64(r1);
            for (e[2] = -m2; e[2] <= m2; ++e[2]) {
                const u64 my_row = row_index++;
                if (nparts > 1 && my_row % static_cast<u64>(nparts) != static_cast<u64>(part)) continue;
                if (e[0] == 0 && e[1] == 0 && e[2] == 0) continue;  // zero row: det 0
                const i64 r2 = r1 - e[2] * e[2];
                const i64 m3 = isqrt64(r2);
                for (e[3] = -m3; e[3] <= m3; ++e[3]) {
                    const i64 r3 = r2 - e[3] * e[3];
                    const i64 m4 = isqrt64(r3);
                    for (e[4] = -m4; e[4] <= m4; ++e[4]) {
                        const i64 r4 = r3 - e[4] * e[4];
                        const i64 m5 = isqrt64(r4);
                        for (e[5] = -m5; e[5] <= m5; ++e[5]) {
                            // cofactors of the third row = cross(row1, row2)
                            const i64 c0 = e[1] * e[5] - e[2] * e[4];
                            const i64 c1 = e[2] * e[3] - e[0] * e[5];
                            const i64 c2 = e[0] * e[4] - e[1] * e[3];
                            if (c0 == 0 && c1 == 0 && c2 == 0) continue;  // dependent rows
                            const i64 r5 = r4 - e[5] * e[5];
                            const i64 m6 = isqrt64(r5);
                            for (e[6] = -m6; e[6] <= m6; ++e[6]) {
                                const i64 r6 = r5 - e[6] * e[6];
                                const i64 m7 = isqrt64(r6);
                                for (e[7] = -m7; e[7] <= m7; ++e[7]) {
                                    const i64 r7 = r6 - e[7] * e[7];
                                    const i64 t = 1 - e[6] * c0 - e[7] * c1;
                                    if (c2 != 0) {
                                        if (t % c2 != 0) continue;
                                        e[8] = t / c2;
                                        if (e[8] * e[8] > r7) continue;
                                        emit(e);
                                        ++delivered;
                                    } else if (t == 0) {
                                        const i64 m8 = isqrt64(r7);
                                        for (e[8] = -m8; e[8] <= m8; ++e[8]) {
                                            emit(e);
                                            ++delivered;
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    return delivered;
}

// --- drivers ------------------------------------------------------------

// Exact cardinality of the ball, OpenMP across partitions.
u64 count_ball(int n, i64 B, int partitions = 1);

// Histogram of the entry at 1-based position (i, j) over the ball.
ValueHistogram entry_histogram(int n, i64 B, int i, int j, int partitions = 1);

// All n*n positions in a single enumeration pass.
std::vector<ValueHistogram> entry_histograms_all(int n, i64 B, int partitions = 1);

// Serial single-partition enumeration in lexicographic order (reference path;
// also the spine of the small-ball helpers below).
void enumerate_ball(int n, i64 B, const std::function<void(const UnimodularMatrix&)>& consumer);

std::vector<UnimodularMatrix> collect_ball(int n, i64 B);

// The multiset { g_{i,j} : g in ball }, in enumeration order.
void entry_stream(int n, i64 B, int i, int j, const std::function<void(i64)>& consumer);
std::vector<i64> entry_stream_collect(int n, i64 B, int i, int j);

// c_n = pi^{n^2/2} / (Gamma(n/2) Gamma((n^2-n+2)/2) zeta(2)...zeta(n)); the
// ball count is asymptotic to c_n T^{n^2-n}.
double asymptotic_constant(int n);

// zeta(s) for integer s >= 2 by Euler-Maclaurin (used by asymptotic_constant).
double zeta_int(int s);

}  // namespace slnek::matgen
