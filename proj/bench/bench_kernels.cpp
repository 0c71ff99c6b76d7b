// Timings for the enumeration kernels, serial reference vs OpenMP. Run with
// no arguments for the default sizes, or pass levels: bench_kernels [verify_n
// [cells_n [brute_n]]].
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>

#include "pmcut/cells.hpp"
#include "pmcut/certify.hpp"
#include "pmcut/exec.hpp"
#include "pmcut/family.hpp"
#include "pmcut/maxflow.hpp"

using namespace pmcut;

namespace {

double time_once(const std::function<void(Exec)>& fn, Exec exec) {
    auto t0 = std::chrono::steady_clock::now();
    fn(exec);
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* name, const std::function<void(Exec)>& fn) {
    double serial = time_once(fn, Exec::serial);
    double parallel = time_once(fn, Exec::parallel);
    std::printf("%-34s %9.3fs %9.3fs %7.2fx\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0);
}

// constant-capacity instance with dense random arcs, large enough that the
// 2^n brute-force scan dominates
ParamNetwork dense_instance(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto coin = [&](int sides) { return std::uniform_int_distribution<int>(0, sides - 1)(rng); };
    auto cap = [&] { return Rational(1 + coin(12), 1 + coin(8)); };
    ParamNetwork net(n);
    for (int j = 1; j <= n; ++j) {
        net.add_arc(NodeId::source(), NodeId::internal(j), {cap(), cap(), cap()});
        net.add_arc(NodeId::internal(j), NodeId::sink(), {Rational(0), Rational(0), cap()});
    }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j && coin(3) == 0)
                net.add_arc(NodeId::internal(i), NodeId::internal(j),
                            {Rational(0), Rational(0), cap()});
    return net;
}

} // namespace

int main(int argc, char** argv) {
    int verify_n = argc > 1 ? std::atoi(argv[1]) : 7;
    int cells_n = argc > 2 ? std::atoi(argv[2]) : 6;
    int brute_n = argc > 3 ? std::atoi(argv[3]) : 14;

    std::printf("threads available: %d\n", hardware_threads());
    std::printf("%-34s %10s %10s %8s\n", "kernel", "serial", "parallel", "speedup");

    char name[64];
    std::snprintf(name, sizeof name, "certificate verification (n=%d)", verify_n);
    row(name, [&](Exec exec) {
        VerifyOptions opts;
        opts.exec = exec;
        VerificationReport r = verify_theorem_main(verify_n, opts);
        if (!r.passed()) std::fprintf(stderr, "verification failed!\n");
    });

    std::snprintf(name, sizeof name, "certificate construction (n=%d)", verify_n);
    row(name, [&](Exec exec) {
        BuildOptions opts;
        opts.with_certificates = true;
        opts.certificate_limit = verify_n;
        opts.exec = exec;
        (void)build_family(verify_n, opts);
    });

    std::snprintf(name, sizeof name, "cell enumeration (n=%d)", cells_n);
    row(name, [&](Exec exec) {
        CellOptions opts;
        opts.limit = cells_n;
        opts.exec = exec;
        (void)enumerate_cells(build_family(cells_n).net, {Rational(0), Rational(0)},
                              {Rational(1), Rational(1)}, opts);
    });

    ParamNetwork dense = dense_instance(brute_n, 42);
    ParamPoint p{Rational(1, 3), Rational(2, 5)};
    std::snprintf(name, sizeof name, "brute-force cut scan (n=%d)", brute_n);
    row(name, [&](Exec exec) {
        BruteForceOptions opts;
        opts.limit = brute_n;
        opts.exec = exec;
        (void)brute_force_min_cuts(dense, p, opts);
    });

    return 0;
}
