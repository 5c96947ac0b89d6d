#pragma once

#include <array>

#include "slnek/common.hpp"

// Exact counting in SL_n over Z/qZ for squarefree q: the closed-form group
// orders and fixed-zero-entry counts, plus the exhaustive search that every
// closed form is checked against.  All results are exact integers; overflow
// is reported, never wrapped.

namespace slnek::localcount {

// Hard guard on the exhaustive search space q^(n^2); larger requests are an
// error, never a silent sample.
inline constexpr i64 kBruteForceCap = 10'000'000;

bool is_prime_small(i64 p);       // trial division; the moduli here are tiny
bool is_squarefree_small(i64 q);  // trial-division factorization

// #SL_n(F_p) = (p^n - 1)(p^n - p) ... (p^n - p^{n-1}) / (p - 1).
u64 sl_order(int n, i64 p);

// #SL_n(Z/qZ) = prod_{p | q} #SL_n(F_p) for squarefree q; this is also the
// index of the principal congruence subgroup of level q.
u64 sl_order_q(int n, i64 q);

// #{ g in SL_n(F_p) : g_{i,j} = 0 } = (p^{n-1} - 1)(p^n - p) ... (p^n - p^{n-1}) / (p - 1),
// the same for every position (i, j).
u64 zero_entry_count(int n, i64 p);

u64 zero_entry_count_q(int n, i64 q);

// zero_entry_count_q / sl_order_q, reduced: prod_{p | q} (p^{n-1}-1)/(p^n-1).
Rational expected_share(int n, i64 q);

namespace detail {
i64 det_mod(int n, const std::array<i64, 9>& e, i64 q);
void check_brute_args(int n, i64 q);
}

// Exhaustive count of n x n matrices over Z/qZ with det = 1 satisfying pred.
// pred receives the entries row-major (first n^2 slots used) and must be safe
// to call concurrently (the scan is partitioned by the first entry residue).
template <class Pred>
u64 brute_force_count(int n, i64 q, Pred&& pred) {
    detail::check_brute_args(n, q);
    const int cells = n * n;
    const i64 want = 1 % q;
    u64 total = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(+ : total)
#endif
    for (i64 first = 0; first < q; ++first) {
        std::array<i64, 9> e{};
        e[0] = first;
        // odometer over the remaining cells
        int pos = 1;
        for (int k = 1; k < cells; ++k) e[k] = 0;
        while (true) {
            if (detail::det_mod(n, e, q) == want && pred(e)) ++total;
            pos = cells - 1;
            while (pos >= 1 && e[pos] == q - 1) { e[pos] = 0; --pos; }
            if (pos < 1) break;
            ++e[pos];
        }
    }
    return total;
}

u64 brute_force_order(int n, i64 q);
u64 brute_force_zero_entry(int n, i64 q, int i, int j);

}  // namespace slnek::localcount
