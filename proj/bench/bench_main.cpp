// Compares the serial reference kernels against the OpenMP-parallel ones:
// assignment enumeration and the pair-exclusion loop of the 3D decision.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>

#include "ctx/assignments.hpp"
#include "ctx/decide.hpp"
#include "ctx/scenario.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace ctx;

namespace {

double time_ms(const std::function<void()>& fn, int repeats) {
    double best = 1e300;
    for (int i = 0; i < repeats; ++i) {
        const auto start = std::chrono::steady_clock::now();
        fn();
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        if (ms < best) best = ms;
    }
    return best;
}

// Synthetic 3D scenario with a controlled assignment count: n disjoint
// orthogonal bases, so |A| = 3^n exactly and the pair loop sees 3n rays.
Scenario product_scenario(unsigned seed, int bases) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> coord(-6, 6);
    Scenario s;
    s.dimension = 3;
    s.origin = ScenarioOrigin::Explicit;
    for (int b = 0; b < bases; ++b) {
        RayVector v1, v2, v3;
        while (true) {
            std::vector<Int> a(3), c(3);
            for (auto& x : a) x = coord(rng);
            for (auto& x : c) x = coord(rng);
            if ((a[0] == 0 && a[1] == 0 && a[2] == 0) ||
                (c[0] == 0 && c[1] == 0 && c[2] == 0))
                continue;
            v1 = RayVector::canonicalize(std::move(a));
            RayVector w = RayVector::canonicalize(std::move(c));
            if (v1 == w) continue;
            v2 = cross3(v1, w);
            v3 = cross3(v1, v2);
            break;
        }
        std::size_t base_id = s.rays.size();
        for (const RayVector& v : {v1, v2, v3}) {
            Ray r;
            r.id = s.rays.size();
            r.label = "b" + std::to_string(b) + "_" + std::to_string(r.id - base_id);
            r.vector = v;
            s.rays.push_back(std::move(r));
        }
        s.contexts.push_back(Context{{base_id, base_id + 1, base_id + 2}});
    }
    return s;
}

void bench_scenario(const char* name, const Scenario& s) {
    const auto serial_list = enumerate_assignments_serial(s);
    const double enum_serial = time_ms([&] { enumerate_assignments_serial(s); }, 5);
    const double enum_parallel = time_ms([&] { enumerate_assignments(s); }, 5);

    std::printf("%-22s rays=%zu contexts=%zu assignments=%zu\n", name, s.rays.size(),
                s.contexts.size(), serial_list.size());
    std::printf("  enumerate   serial %8.3f ms   parallel %8.3f ms\n", enum_serial,
                enum_parallel);

    if (s.dimension == 3 && !serial_list.empty()) {
        const AnalysisReport ref = decide_3d(s, serial_list, 1);
        const double pairs_serial = time_ms([&] { decide_3d(s, serial_list, 1); }, 5);
        const double pairs_parallel = time_ms([&] { decide_3d(s, serial_list, 0); }, 5);
        const AnalysisReport par = decide_3d(s, serial_list, 0);
        std::printf("  pair loop   serial %8.3f ms   parallel %8.3f ms   (verdicts %s)\n",
                    pairs_serial, pairs_parallel,
                    ref.verdict == par.verdict ? "agree" : "DISAGREE");
    }
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP: up to %d threads (CTX_THREADS=%d)\n", omp_get_max_threads(),
                env_thread_cap());
#else
    std::printf("built without OpenMP; both columns run the serial path\n");
#endif
    bench_scenario("yu-oh-completed", load_fixture("yu-oh-completed"));
    bench_scenario("cabello-18", load_fixture("cabello-18"));
    bench_scenario("product-6", product_scenario(1, 6));
    bench_scenario("product-8", product_scenario(2, 8));
    return 0;
}
