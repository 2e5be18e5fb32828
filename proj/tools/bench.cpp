// Wall-time comparison of the serial reference kernels against their OpenMP
// variants, on workloads large enough to show a spread. Every pair is also
// checked for result equality; a mismatch aborts the run.

#include "perfmix/construct.hpp"
#include "perfmix/error.hpp"
#include "perfmix/grm.hpp"
#include "perfmix/mdsq.hpp"
#include "perfmix/partition.hpp"
#include "perfmix/scan.hpp"
#include "perfmix/space.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

using namespace perfmix;

namespace {

double ms(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const std::string& name, const std::string& workload, double serial,
         double parallel) {
    std::printf("%-24s %-28s %9.1f ms %9.1f ms %6.2fx\n", name.c_str(),
                workload.c_str(), serial, parallel,
                parallel > 0 ? serial / parallel : 0.0);
}

} // namespace

int main() {
#ifdef _OPENMP
    if (const char* env = std::getenv("PERFMIX_THREADS")) {
        int t = std::atoi(env);
        if (t >= 1) omp_set_num_threads(t);
    }
    std::printf("OpenMP enabled, max threads %d\n\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP: parallel variants run serially\n\n");
#endif
    std::printf("%-24s %-28s %12s %12s %7s\n", "kernel", "workload", "serial",
                "parallel", "speed");

    {
        GrmCode gc = grm_generate(2, 4, 2); // [16, 11, 4]
        Code c = grm_expand(gc);
        PackedCode pc = pack_words(c.words());
        int ds = 0, dp = 0;
        double ts = ms([&] { ds = min_distance_scan_serial(pc); });
        double tp = ms([&] { dp = min_distance_scan_omp(pc); });
        require(ds == dp, "Internal", "min-distance kernels disagree");
        row("min_distance_scan", "RM(2,4) 2048 words", ts, tp);
    }

    {
        Code c = theorem5_concatenate(coset_partition_rm(3, 2),
                                      hamming_coset_partition(3, 2), {});
        int rs = 0, rp = 0;
        double ts = ms([&] {
            rs = covering_radius_bfs_serial(c.space(), c.words(), kGateCeiling);
        });
        double tp = ms([&] {
            rp = covering_radius_bfs_omp(c.space(), c.words(), kGateCeiling);
        });
        require(rs == rp, "Internal", "covering-radius kernels disagree");
        row("covering_radius_bfs", "ternary [13], |V|=3^13", ts, tp);
    }

    {
        Quasigroup g = qg_affine(5, 7, 0, std::vector<Symbol>(7, 1));
        bool ls = false, lp = false;
        double ts = ms([&] { ls = is_latin_serial(g); });
        double tp = ms([&] { lp = is_latin(g); });
        require(ls == lp && ls, "Internal", "Latin-check kernels disagree");
        row("is_latin", "order 5, arity 7", ts, tp);
    }

    {
        GrmCode gc = grm_generate(3, 3, 2); // k = 17, 3^17 words streamed
        std::uint64_t gate = std::uint64_t(1) << 27;
        std::vector<std::uint64_t> w1, wn;
#ifdef _OPENMP
        int saved = omp_get_max_threads();
        omp_set_num_threads(1);
        double ts = ms([&] { w1 = weight_distribution_stream(gc.gen, gate); });
        omp_set_num_threads(saved);
        double tp = ms([&] { wn = weight_distribution_stream(gc.gen, gate); });
#else
        double ts = ms([&] { w1 = weight_distribution_stream(gc.gen, gate); });
        double tp = ms([&] { wn = weight_distribution_stream(gc.gen, gate); });
#endif
        require(w1 == wn, "Internal", "weight-stream runs disagree");
        row("weight_distribution", "RM_3(2,3) 3^17 words", ts, tp);
    }

    return 0;
}
