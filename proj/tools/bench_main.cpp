// Serial reference vs. OpenMP search kernels on the same workloads. The
// two must return identical witnesses; this binary reports timings and
// asserts the agreement.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "largesets/gadgets.hpp"
#include "largesets/generators.hpp"
#include "largesets/reductions.hpp"
#include "largesets/search.hpp"

using namespace largesets;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void run_case(const std::string& label, const Coloring& f, const SolutionKind& kind, int m,
              int N) {
    const FinSet universe = interval_universe(0, N);

    const auto t0 = Clock::now();
    const auto serial = find_solution_serial(f, kind, m, universe);
    const double serial_ms = ms_since(t0);

    const auto t1 = Clock::now();
    const auto parallel = find_solution_parallel(f, kind, m, universe);
    const double parallel_ms = ms_since(t1);

    const bool agree = serial == parallel;
    std::printf("%-28s N=%-3d m=%-2d serial %9.2f ms   omp %9.2f ms   speedup %5.2fx   %s\n",
                label.c_str(), N, m, serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
                agree ? "identical" : "MISMATCH");
    if (!agree) std::exit(1);
}

}  // namespace

int main(int argc, char** argv) {
    int N = 18;
    if (argc > 1) N = std::atoi(argv[1]);
#ifdef _OPENMP
    std::printf("openmp: %d threads\n", omp_get_max_threads());
#else
    std::printf("openmp: unavailable (serial twice)\n");
#endif

    SplitMix64 rng(7);
    const Coloring bounded = random_k_bounded(rng, DomainFamily::schreier(), N, 2);
    run_case("rainbow / 2-bounded", bounded, SolutionKind::rainbow(), 7, N);
    run_case("homogeneous / recoded", red_rrt_from_rt(bounded, 2, N),
             SolutionKind::homogeneous(), 7, N);

    const Coloring biased = random_scalar(rng, DomainFamily::schreier(), N, N, 60);
    run_case("free / biased scalar", biased, SolutionKind::free_scalar(), 8, N);
    run_case("thin-for / size gadget", cex_ts_all_finite(), SolutionKind::thin_for(3), 7,
             std::min(N, 16));
    return 0;
}
