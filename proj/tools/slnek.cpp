// slnek: exact SL_n(Z) norm-ball enumeration and prime-factor statistics.
//
// Subcommands
//   count       exact ball cardinality, the asymptotic constant, and their ratio
//   densities   finite-field group orders and zero-entry counts, formula vs search
//   congruence  divisibility counts A_q with expected densities and residuals (CSV)
//   moments     normalized truncated moments against Gaussian references (CSV)
//   clt         standardized omega statistics and KS distances over a B-grid (JSON)
//   fixtures    small exact values for CI consumption (JSON)
//
// Exit codes: 0 success, 2 invalid arguments/config, 3 I/O failure.
// Output files are byte-stable for a fixed config, whatever the partition count.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "slnek/arith.hpp"
#include "slnek/cltlab.hpp"
#include "slnek/localcount.hpp"
#include "slnek/matgen.hpp"
#include "slnek/sievestats.hpp"

using json = nlohmann::json;
using namespace slnek;

namespace {

std::string fmt_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

struct Options {
    int n = 2;
    std::vector<i64> b;
    std::vector<i64> t;
    std::string pos = "1,1";
    double psi = 0.25;
    i64 q_max = 30;
    int k_max = 6;
    int partitions = 8;
    i64 p_max = 13;
    std::string out;
    std::string format;
};

std::pair<int, int> parse_pos(const std::string& pos) {
    int i = 0, j = 0;
    char comma = 0;
    std::istringstream ss(pos);
    if (!(ss >> i >> comma >> j) || comma != ',')
        throw std::invalid_argument("--pos expects \"i,j\"");
    return {i, j};
}

// B values from --b (squared bound) or --t (Frobenius bound, B = t^2).
std::vector<i64> resolve_b(const Options& opt, std::vector<i64> fallback) {
    if (!opt.b.empty() && !opt.t.empty())
        throw std::invalid_argument("give either --b or --t, not both");
    if (!opt.b.empty()) return opt.b;
    if (!opt.t.empty()) {
        std::vector<i64> out;
        for (i64 t : opt.t) {
            if (t < 0) throw std::invalid_argument("--t must be non-negative");
            if (t > 600'000'000) throw std::invalid_argument("--t too large");
            out.push_back(t * t);
        }
        return out;
    }
    return fallback;
}

i64 resolve_single_b(const Options& opt, i64 fallback) {
    auto v = resolve_b(opt, {fallback});
    if (v.size() != 1) throw std::invalid_argument("this subcommand takes a single --b/--t");
    return v[0];
}

void emit(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        if (!std::cout) throw std::ios_base::failure("write to stdout failed");
        return;
    }
    std::ofstream f(opt.out, std::ios::binary | std::ios::trunc);
    if (!f) throw std::ios_base::failure("cannot open output file: " + opt.out);
    f << text;
    f.flush();
    if (!f) throw std::ios_base::failure("write failed: " + opt.out);
}

arith::FactorSieve make_sieve(i64 min_limit) {
    return arith::FactorSieve(std::max<i64>(min_limit, 100));
}

int cmd_count(const Options& opt) {
    const i64 B = resolve_single_b(opt, 1'000'000);
    const u64 count = matgen::count_ball(opt.n, B, opt.partitions);
    const double cn = matgen::asymptotic_constant(opt.n);
    const double t_power =
        std::pow(static_cast<double>(B), static_cast<double>(opt.n * opt.n - opt.n) / 2.0);
    std::ostringstream os;
    os << "n " << opt.n << "\n";
    os << "B " << B << "\n";
    os << "T " << fmt_double(std::sqrt(static_cast<double>(B))) << "\n";
    os << "count " << count << "\n";
    os << "c_n " << fmt_double(cn) << "\n";
    os << "count/T^(n^2-n) "
       << fmt_double(t_power > 0 ? static_cast<double>(count) / t_power : 0.0) << "\n";
    emit(opt, os.str());
    return 0;
}

int cmd_densities(const Options& opt) {
    auto sieve = make_sieve(opt.p_max);
    std::ostringstream os;
    os << "p,order_formula,order_brute,zero_formula,zero_brute,density\n";
    for (i64 p : sieve.primes()) {
        if (p > opt.p_max) break;
        const u64 of = localcount::sl_order(opt.n, p);
        const u64 ob = localcount::brute_force_order(opt.n, p);
        const u64 zf = localcount::zero_entry_count(opt.n, p);
        const u64 zb = localcount::brute_force_zero_entry(opt.n, p, 1, 1);
        os << p << ',' << of << ',' << ob << ',' << zf << ',' << zb << ','
           << localcount::expected_share(opt.n, p).str() << "\n";
    }
    emit(opt, os.str());
    return 0;
}

int cmd_congruence(const Options& opt) {
    auto [i, j] = parse_pos(opt.pos);
    auto grid = resolve_b(opt, {4'000'000});
    i64 max_b = *std::max_element(grid.begin(), grid.end());
    auto sieve = make_sieve(std::max(isqrt64(max_b), opt.q_max));
    auto qs = sievestats::squarefree_moduli(opt.q_max, sieve);
    auto rows = sievestats::residual_profile(opt.n, i, j, qs, grid, opt.partitions, sieve);

    std::string text;
    if (opt.format == "json") {
        json out = json::array();
        for (const auto& r : rows)
            out.push_back({{"B", r.B},
                           {"q", r.q},
                           {"x", r.x},
                           {"A_q", r.observed},
                           {"expected", r.expected},
                           {"residual", r.residual}});
        text = out.dump(2) + "\n";
    } else {
        std::ostringstream os;
        os << "B,q,x,A_q,expected,residual\n";
        for (const auto& r : rows)
            os << r.B << ',' << r.q << ',' << r.x << ',' << r.observed << ','
               << fmt_double(r.expected) << ',' << fmt_double(r.residual) << "\n";
        text = os.str();
    }
    emit(opt, text);

    if (grid.size() > 1) {
        // descriptive decay of |r_q|/x across the grid, to stderr so files stay clean
        for (i64 q : qs) {
            std::vector<sievestats::ResidualRow> forq;
            for (const auto& r : rows)
                if (r.q == q) forq.push_back(r);
            std::cerr << "slope q=" << q << " "
                      << fmt_double(sievestats::residual_decay_slope(forq)) << "\n";
        }
    }
    return 0;
}

int cmd_moments(const Options& opt) {
    auto [i, j] = parse_pos(opt.pos);
    auto grid = resolve_b(opt, {10'000});
    std::sort(grid.begin(), grid.end());
    i64 max_b = *std::max_element(grid.begin(), grid.end());
    auto sieve = make_sieve(isqrt64(max_b));

    std::ostringstream os;
    json jout = json::array();
    os << "B,k,x,raw_sum,normalized,reference\n";
    for (i64 B : grid) {
        const i64 T = isqrt64(B);
        if (T * T != B) throw std::invalid_argument("moments: B must be a perfect square");
        const double eps = arith::truncation_epsilon(static_cast<double>(T), opt.psi);
        const double z = std::pow(static_cast<double>(T), eps);
        auto hist = matgen::entry_histogram(opt.n, B, i, j, opt.partitions);
        auto oh = sievestats::omega_histogram_truncated(hist, sieve, z);
        auto mom = arith::sieve_moments(arith::prime_set(sieve, z), opt.n, sieve);
        auto reports = sievestats::normalized_moments(oh, mom, opt.k_max);
        for (const auto& r : reports) {
            os << B << ',' << r.k << ',' << oh.total << ',' << fmt_double(r.raw_sum) << ','
               << fmt_double(r.normalized) << ',' << fmt_double(r.reference) << "\n";
            jout.push_back({{"B", B},
                            {"k", r.k},
                            {"x", oh.total},
                            {"raw_sum", r.raw_sum},
                            {"normalized", r.normalized},
                            {"reference", r.reference}});
        }
    }
    emit(opt, opt.format == "json" ? jout.dump(2) + "\n" : os.str());
    return 0;
}

int cmd_clt(const Options& opt) {
    auto [i, j] = parse_pos(opt.pos);
    auto grid = resolve_b(opt, {10'000, 1'000'000, 100'000'000});
    std::sort(grid.begin(), grid.end());
    i64 max_b = *std::max_element(grid.begin(), grid.end());
    auto sieve = make_sieve(isqrt64(max_b));
    auto pts = cltlab::eks_experiment(opt.n, i, j, grid, opt.psi, opt.partitions, sieve);

    json out;
    out["grid"] = grid;
    json ks_full = json::array(), ks_trunc = json::array(), zeros = json::array();
    json hists = json::array();
    for (const auto& pt : pts) {
        ks_full.push_back(pt.ks_full);
        ks_trunc.push_back(pt.ks_trunc);
        zeros.push_back(pt.zero_entries);
        json h;
        h["B"] = pt.B;
        h["T"] = pt.T;
        h["x"] = pt.x;
        h["loglog_t"] = pt.loglog_t;
        h["epsilon"] = pt.epsilon;
        h["z"] = pt.z;
        h["mu"] = pt.mu;
        h["sigma2"] = pt.sigma2;
        h["scale"] = pt.scale;
        h["shift"] = pt.shift;
        json of = json::array(), ot = json::array();
        for (size_t w = 0; w < pt.omega_full.count.size(); ++w)
            if (pt.omega_full.count[w] > 0) of.push_back({w, pt.omega_full.count[w]});
        for (size_t w = 0; w < pt.omega_trunc.count.size(); ++w)
            if (pt.omega_trunc.count[w] > 0) ot.push_back({w, pt.omega_trunc.count[w]});
        h["omega_full"] = of;
        h["omega_truncated"] = ot;
        hists.push_back(h);
    }
    out["ks_full"] = ks_full;
    out["ks_truncated"] = ks_trunc;
    out["zero_entry_counts"] = zeros;
    out["histograms"] = hists;
    emit(opt, out.dump(2) + "\n");
    return 0;
}

int cmd_fixtures(const Options& opt) {
    auto sieve = make_sieve(1000);
    json out;

    auto ball = matgen::collect_ball(2, 2);
    out["ball_n2_B2"]["count"] = ball.size();
    std::vector<i64> e11 = matgen::entry_stream_collect(2, 2, 1, 1);
    std::sort(e11.begin(), e11.end());
    out["ball_n2_B2"]["entry_11_sorted"] = e11;
    std::vector<i64> e12 = matgen::entry_stream_collect(2, 2, 1, 2);
    std::sort(e12.begin(), e12.end());
    out["ball_n2_B2"]["entry_12_sorted"] = e12;
    out["ball_n3_B3"]["count"] = matgen::count_ball(3, 3);

    auto hist = matgen::entry_histogram(2, 2, 1, 1);
    auto c2 = sievestats::congruence_count(hist, 2, 2, sieve);
    out["congruence_n2_B2_q2"] = {{"A_q", c2.observed}, {"expected", c2.expected},
                                  {"residual", c2.residual}};

    for (i64 p : {2, 3, 5}) {
        out["sl2"][std::to_string(p)] = {{"order", localcount::sl_order(2, p)},
                                         {"zero_entry", localcount::zero_entry_count(2, p)},
                                         {"density", localcount::expected_share(2, p).str()}};
    }
    for (i64 p : {2, 3}) {
        out["sl3"][std::to_string(p)] = {{"order", localcount::sl_order(3, p)},
                                         {"zero_entry", localcount::zero_entry_count(3, p)},
                                         {"density", localcount::expected_share(3, p).str()}};
    }

    auto mom = arith::sieve_moments_exact(arith::prime_set(sieve, 3.0), 2, sieve);
    out["moments_P23"] = {{"mu", mom->first.str()}, {"sigma2", mom->second.str()}};
    out["gaussian_moments"] = {{"C2", arith::gaussian_moment(2)},
                               {"C4", arith::gaussian_moment(4)},
                               {"C6", arith::gaussian_moment(6)}};
    out["asymptotic_constant"] = {{"c2", matgen::asymptotic_constant(2)},
                                  {"c3", matgen::asymptotic_constant(3)}};
    emit(opt, out.dump(2) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact SL_n(Z) norm-ball enumeration and prime-factor statistics"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--n", opt.n, "matrix dimension (2 or 3)");
        sub->add_option("--b", opt.b, "squared norm bound(s) B")->delimiter(',');
        sub->add_option("--t", opt.t, "Frobenius norm bound(s) T (B = T^2)")->delimiter(',');
        sub->add_option("--pos", opt.pos, "entry position i,j (1-based)");
        sub->add_option("--psi", opt.psi, "truncation exponent psi in (0, 1/2)");
        sub->add_option("--q-max", opt.q_max, "largest modulus (squarefree q <= q-max)");
        sub->add_option("--k-max", opt.k_max, "largest moment order");
        sub->add_option("--partitions", opt.partitions, "enumeration partition count");
        sub->add_option("--out", opt.out, "output file (default stdout)");
        sub->add_option("--format", opt.format, "csv or json where applicable");
        sub->add_option("--p-max", opt.p_max, "largest prime (densities)");
    };

    CLI::App* c_count = app.add_subcommand("count", "exact ball cardinality");
    CLI::App* c_dens = app.add_subcommand("densities", "finite-field counts, formula vs search");
    CLI::App* c_cong = app.add_subcommand("congruence", "divisibility counts and residuals");
    CLI::App* c_mom = app.add_subcommand("moments", "normalized truncated moments");
    CLI::App* c_clt = app.add_subcommand("clt", "standardized statistics and KS distances");
    CLI::App* c_fix = app.add_subcommand("fixtures", "small exact values for CI");
    for (CLI::App* sub : {c_count, c_dens, c_cong, c_mom, c_clt, c_fix}) add_common(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (c_count->parsed()) return cmd_count(opt);
        if (c_dens->parsed()) return cmd_densities(opt);
        if (c_cong->parsed()) return cmd_congruence(opt);
        if (c_mom->parsed()) return cmd_moments(opt);
        if (c_clt->parsed()) return cmd_clt(opt);
        if (c_fix->parsed()) return cmd_fixtures(opt);
    } catch (const std::ios_base::failure& e) {
        std::cerr << "slnek: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "slnek: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
