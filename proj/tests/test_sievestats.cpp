#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "slnek/matgen.hpp"
#include "slnek/sievestats.hpp"

using namespace slnek;
using namespace slnek::sievestats;

namespace {
const arith::FactorSieve& shared_sieve() {
    static arith::FactorSieve sieve(100'000);
    return sieve;
}
}  // namespace

TEST_CASE("congruence counts on the four-matrix fixture") {
    const auto& sieve = shared_sieve();
    auto hist = matgen::entry_histogram(2, 2, 1, 1);
    REQUIRE(hist.total() == 4);  // entries {1, -1, 0, 0}

    auto r2 = congruence_count(hist, 2, 2, sieve);
    CHECK(r2.observed == 2);  // the two zeros
    CHECK(r2.expected == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
    CHECK(r2.residual == doctest::Approx(2.0 / 3.0).epsilon(1e-12));

    auto r3 = congruence_count(hist, 3, 2, sieve);
    CHECK(r3.observed == 2);
    CHECK(r3.expected == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(r3.residual == doctest::Approx(1.0).epsilon(1e-12));

    auto r1 = congruence_count(hist, 1, 2, sieve);
    CHECK(r1.observed == 4);
    CHECK(r1.residual == 0.0);

    CHECK_THROWS_AS(congruence_count(hist, 4, 2, sieve), std::invalid_argument);
}

TEST_CASE("congruence counts on an empty stream") {
    const auto& sieve = shared_sieve();
    auto hist = matgen::entry_histogram(2, 0, 1, 1);
    REQUIRE(hist.total() == 0);
    for (i64 q : {1, 2, 3}) {
        auto r = congruence_count(hist, q, 2, sieve);
        CHECK(r.observed == 0);
        CHECK(r.expected == 0.0);
    }
}

TEST_CASE("divisibility counts are monotone and Bonferroni-consistent") {
    const auto& sieve = shared_sieve();
    for (i64 B : {i64(100), i64(10000)}) {
        auto hist = matgen::entry_histogram(2, B, 1, 1);
        const u64 x = hist.total();
        auto A = [&](i64 q) { return congruence_count(hist, q, 2, sieve).observed; };
        CHECK(A(1) == x);
        CHECK(A(6) <= A(2));
        CHECK(A(6) <= A(3));
        CHECK(A(30) <= A(6));
        CHECK(A(10) <= A(5));
        // inclusion bound for coprime moduli
        CHECK(A(6) + x >= A(2) + A(3));
        CHECK(A(15) + x >= A(3) + A(5));
    }
}

TEST_CASE("congruence counts match a direct residue scan") {
    const auto& sieve = shared_sieve();
    auto entries = matgen::entry_stream_collect(2, 400, 1, 2);
    auto hist = matgen::entry_histogram(2, 400, 1, 2);
    for (i64 q : {1, 2, 3, 5, 6, 7, 10}) {
        u64 direct = 0;
        for (i64 v : entries)
            if (v % q == 0) ++direct;
        CHECK(congruence_count(hist, q, 2, sieve).observed == direct);
    }
}

TEST_CASE("squarefree moduli list") {
    const auto& sieve = shared_sieve();
    auto qs = squarefree_moduli(30, sieve);
    std::vector<i64> want = {1,  2,  3,  5,  6,  7,  10, 11, 13, 14,
                             15, 17, 19, 21, 22, 23, 26, 29, 30};
    CHECK(qs == want);
}

TEST_CASE("product sets D_k(P)") {
    const auto& sieve = shared_sieve();
    auto P23 = arith::prime_set(sieve, 3.0);

    auto d2 = squarefree_products(P23, 2);
    CHECK(d2.values == std::vector<u64>{1, 2, 3, 6});
    CHECK(d2.overflowed == 0);

    auto d1 = squarefree_products(P23, 1);
    CHECK(d1.values == std::vector<u64>{1, 2, 3});

    arith::PrimeSet empty;
    auto d0 = squarefree_products(empty, 3);
    CHECK(d0.values == std::vector<u64>{1});

    auto d235 = squarefree_products(arith::prime_set(sieve, 5.0), 3, 10);
    CHECK(d235.values == std::vector<u64>{1, 2, 3, 5, 6, 10});
    CHECK(d235.overflowed == 2);  // 15 and 30 exceed the cap
}

TEST_CASE("product set cardinality and agreement with subset enumeration") {
    const auto& sieve = shared_sieve();
    std::mt19937_64 rng(5150);
    std::uniform_real_distribution<double> zdist(2.0, 40.0);
    std::uniform_int_distribution<int> kdist(0, 5);
    for (int t = 0; t < 40; ++t) {
        auto P = arith::prime_set(sieve, zdist(rng));
        int k = kdist(rng);
        auto got = squarefree_products(P, k);
        auto want = oracle::subset_products(P.primes, k, std::numeric_limits<u64>::max() / 2);
        CHECK(got.values == want.values);
        CHECK(got.overflowed == want.overflowed);
        // no cap hit: cardinality is sum_j C(|P|, j)
        u64 expect = 0;
        for (int j = 0; j <= k && j <= static_cast<int>(P.primes.size()); ++j) {
            u64 c = 1;
            for (int i = 1; i <= j; ++i)
                c = c * (static_cast<u64>(P.primes.size()) - i + 1) / i;
            expect += c;
        }
        CHECK(got.values.size() == expect);

        // capped runs tally instead of dropping
        auto capped = squarefree_products(P, k, 50);
        CHECK(capped.values.size() + capped.overflowed == expect);
        auto want_capped = oracle::subset_products(P.primes, k, 50);
        CHECK(capped.values == want_capped.values);
        CHECK(capped.overflowed == want_capped.overflowed);
    }
}

TEST_CASE("moment sums from the omega histogram") {
    const auto& sieve = shared_sieve();
    auto hist = matgen::entry_histogram(2, 2, 1, 1);
    auto oh = omega_histogram_truncated(hist, sieve, 3.0);
    REQUIRE(oh.total == 4);
    CHECK(oh.at(0) == 4);  // entries {1,-1,0,0} all have omega_P = 0

    const double mu = 7.0 / 12.0;
    CHECK(moment_sum(oh, 0, mu) == doctest::Approx(4.0));
    CHECK(moment_sum(oh, 1, mu) == doctest::Approx(-7.0 / 3.0).epsilon(1e-14));
    CHECK(moment_sum(oh, 2, mu) == doctest::Approx(49.0 / 36.0).epsilon(1e-14));
}

TEST_CASE("histogram route equals direct streaming powers") {
    const auto& sieve = shared_sieve();
    std::mt19937_64 rng(321);
    std::uniform_int_distribution<i64> vdist(-9999, 9999);
    for (int t = 0; t < 20; ++t) {
        ValueHistogram hist(10000);
        std::vector<i64> vals;
        for (int i = 0; i < 500; ++i) {
            i64 v = vdist(rng);
            vals.push_back(v);
            hist.add(v);
        }
        double z = (t % 2 == 0) ? 10.0 : 100.0;
        auto oh = omega_histogram_truncated(hist, sieve, z);
        CHECK(oh.total == 500);
        double mu = 1.1;
        for (int k : {1, 2, 3, 4}) {
            long double direct = 0;
            for (i64 v : vals) {
                long double dev = sieve.omega_truncated(v, z) - mu;
                long double pw = 1;
                for (int j = 0; j < k; ++j) pw *= dev;
                direct += pw;
            }
            CHECK(moment_sum(oh, k, mu) ==
                  doctest::Approx(static_cast<double>(direct)).epsilon(1e-9));
        }
    }
}

TEST_CASE("normalized moments carry the right references") {
    const auto& sieve = shared_sieve();
    auto hist = matgen::entry_histogram(2, 10000, 1, 1);
    auto oh = omega_histogram_truncated(hist, sieve, 20.0);
    auto P = arith::prime_set(sieve, 20.0);
    auto mom = arith::sieve_moments(P, 2, sieve);
    auto reports = normalized_moments(oh, mom, 6);
    REQUIRE(reports.size() == 6);
    CHECK(reports[1].k == 2);
    CHECK(reports[1].reference == doctest::Approx(1.0));
    CHECK(reports[3].reference == doctest::Approx(3.0));
    CHECK(reports[5].reference == doctest::Approx(15.0));
    CHECK(reports[0].reference == 0.0);
    CHECK(reports[2].reference == 0.0);
    for (const auto& r : reports)
        CHECK(r.normalized == doctest::Approx(moment_sum(oh, r.k, mom.mu) /
                                              (static_cast<double>(oh.total) *
                                               std::pow(std::sqrt(mom.sigma2), r.k))));
    arith::SieveMoments degenerate{0.0, 0.0};
    CHECK_THROWS_AS(normalized_moments(oh, degenerate, 2), std::domain_error);
}

TEST_CASE("position symmetry of congruence counts, n = 2") {
    const auto& sieve = shared_sieve();
    for (i64 B : {i64(100), i64(2500)}) {
        auto h11 = matgen::entry_histogram(2, B, 1, 1);
        auto h22 = matgen::entry_histogram(2, B, 2, 2);
        auto h12 = matgen::entry_histogram(2, B, 1, 2);
        auto h21 = matgen::entry_histogram(2, B, 2, 1);
        for (i64 q : {1, 2, 3, 5, 6, 7, 10}) {
            CHECK(congruence_count(h11, q, 2, sieve).observed ==
                  congruence_count(h22, q, 2, sieve).observed);
            CHECK(congruence_count(h12, q, 2, sieve).observed ==
                  congruence_count(h21, q, 2, sieve).observed);
        }
    }
}

TEST_CASE("residual profile over a grid") {
    const auto& sieve = shared_sieve();
    std::vector<i64> qs = {1, 2};
    std::vector<i64> grid = {2, 100, 400};
    auto rows = residual_profile(2, 1, 1, qs, grid, 2, sieve);
    REQUIRE(rows.size() == 6);
    // sorted by (B, q)
    CHECK(rows[0].B == 2);
    CHECK(rows[0].q == 1);
    CHECK(rows[1].q == 2);
    CHECK(rows[1].residual == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    for (const auto& r : rows)
        if (r.q == 1) CHECK(r.residual == 0.0);
    // slope of a clean power law comes back right
    std::vector<ResidualRow> fake;
    for (double lx : {10.0, 12.0, 14.0}) {
        ResidualRow r;
        r.x = static_cast<u64>(std::exp(lx));
        r.residual = std::exp(-0.5 * lx) * static_cast<double>(r.x);
        fake.push_back(r);
    }
    CHECK(residual_decay_slope(fake) == doctest::Approx(-0.5).epsilon(1e-4));  // x rounds to u64
}

TEST_CASE("histogram bookkeeping") {
    ValueHistogram h(10);
    h.add(0);
    h.add(-10);
    h.add(10);
    h.add(3);
    CHECK(h.total() == 4);
    CHECK(h.at(0) == 1);
    CHECK(h.at(-10) == 1);
    CHECK(h.at(11) == 0);
    ValueHistogram other(5);
    other.add(3);
    h.merge(other);
    CHECK(h.total() == 5);
    CHECK(h.at(3) == 2);
}
