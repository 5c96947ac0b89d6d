// Benchmark: serial single-partition enumeration against the OpenMP-parallel
// partitioned path, checking along the way that counts and histograms agree.
//
//   ./bench_enum [B] [position partitions list...]
//   ./bench_enum 10000000 1 2 4 8

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "slnek/matgen.hpp"

using namespace slnek;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    i64 B = 10'000'000;
    std::vector<int> parts = {1, 2, 4, 8};
    if (argc > 1) B = std::atoll(argv[1]);
    if (argc > 2) {
        parts.clear();
        for (int k = 2; k < argc; ++k) parts.push_back(std::atoi(argv[k]));
    }

    std::printf("ball n=2 B=%lld\n", static_cast<long long>(B));
    std::printf("%10s %12s %12s %10s\n", "partitions", "count[s]", "hist[s]", "speedup");

    double serial_total = -1.0;
    u64 ref_count = 0;
    ValueHistogram ref_hist;
    for (int p : parts) {
        auto t0 = clock_type::now();
        u64 count = matgen::count_ball(2, B, p);
        double t_count = seconds_since(t0);

        t0 = clock_type::now();
        ValueHistogram hist = matgen::entry_histogram(2, B, 1, 1, p);
        double t_hist = seconds_since(t0);

        if (serial_total < 0) {
            serial_total = t_count + t_hist;
            ref_count = count;
            ref_hist = hist;
        }
        if (count != ref_count || hist.total() != count || !(hist == ref_hist)) {
            std::fprintf(stderr, "mismatch at %d partitions\n", p);
            return 1;
        }
        std::printf("%10d %12.3f %12.3f %9.2fx\n", p, t_count, t_hist,
                    serial_total / (t_count + t_hist));
    }
    std::printf("count %llu  count/B %.6f\n", static_cast<unsigned long long>(ref_count),
                static_cast<double>(ref_count) / static_cast<double>(B));
    return 0;
}
