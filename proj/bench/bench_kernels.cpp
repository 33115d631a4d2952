// Microbenchmarks for the parallel kernels against their serial references.
#include <chrono>
#include <cstdio>

#include "vir/numerology.hpp"
#include "vir/verma.hpp"

using namespace vir;
using Clock = std::chrono::steady_clock;

namespace {

double seconds(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

}  // namespace

int main() {
    std::printf("%-28s %12s %12s %8s\n", "kernel", "serial (s)", "parallel (s)",
                "speedup");

    for (int n : {8, 10, 12}) {
        Clock::time_point t0 = Clock::now();
        GramData s = gram_serial(n);
        Clock::time_point t1 = Clock::now();
        Clock::time_point t2 = Clock::now();
        const GramData& g = gram(n);  // parallel, first call is cold
        Clock::time_point t3 = Clock::now();
        if (!(g.entries == s.entries)) {
            std::fprintf(stderr, "gram(%d) mismatch between kernels\n", n);
            return 1;
        }
        char label[32];
        std::snprintf(label, sizeof label, "gram level %d", n);
        double ts = seconds(t0, t1), tp = seconds(t2, t3);
        std::printf("%-28s %12.3f %12.3f %8.2f\n", label, ts, tp,
                    tp > 0 ? ts / tp : 0.0);
    }

    for (long max_den : {2000L, 10000L}) {
        Clock::time_point t0 = Clock::now();
        auto s = brute_force_d1_scan(max_den, false);
        Clock::time_point t1 = Clock::now();
        auto p = brute_force_d1_scan(max_den, true);
        Clock::time_point t2 = Clock::now();
        if (s != p) {
            std::fprintf(stderr, "d1 scan mismatch at max_den=%ld\n", max_den);
            return 1;
        }
        char label[32];
        std::snprintf(label, sizeof label, "d1 scan max_den %ld", max_den);
        double ts = seconds(t0, t1), tp = seconds(t1, t2);
        std::printf("%-28s %12.3f %12.3f %8.2f\n", label, ts, tp,
                    tp > 0 ? ts / tp : 0.0);
    }
    return 0;
}
