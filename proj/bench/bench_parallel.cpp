// Benchmark comparing the OpenMP node-evaluation kernels against the serial
// reference implementations on representative workloads.
#include <chrono>
#include <cstdio>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bergman/families.hpp"
#include "bergman/norms.hpp"
#include "bergman/projector.hpp"
#include "bergman/sampling.hpp"

using namespace bergman;

namespace {

double time_of(const std::function<void()>& work, int reps = 3) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        work();
        best = std::min(best,
                        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled (serial build)\n");
#endif
    std::printf("%-34s %12s %12s %8s\n", "workload", "serial [s]", "parallel [s]", "speedup");

    // quadrature over the Hartogs triangle
    {
        QuadratureRule rule = quadrature_rule(DomainSpec::hartogs(), 48, 48);
        auto f = [](const CPoint& z) { return std::exp(z[0]) / (2.0 - z[1]); };
        Complex a, b;
        const double ts = time_of([&] { a = integrate_value_serial(f, rule); });
        const double tp = time_of([&] { b = integrate_value(f, rule); });
        std::printf("%-34s %12.4f %12.4f %7.2fx%s\n", "integrate (H, 48x48)", ts, tp, ts / tp,
                    a == b ? "" : "  MISMATCH");
    }

    // series projection of f_s on the bidisc (product path)
    {
        const auto D2 = DomainSpec::polydisc(2);
        FunctionHandle f = family_handle(fs_family(0.5));
        QuadratureRule rule = quadrature_rule(D2, 64, 64, 0.5);
        const double tp = time_of([&] { project_series(D2, f, 64, rule); });
        std::printf("%-34s %12s %12.4f %8s\n", "project_series f_s N=64", "-", tp, "-");
    }

    // Monte Carlo distribution of |P f_s|
    {
        const auto D2 = DomainSpec::polydisc(2);
        FunctionHandle img = projection_modulus_handle(fs_family(0.9));
        std::vector<double> grid;
        for (int i = 0; i <= 20; ++i) grid.push_back(0.5 * std::pow(10.0, 3.0 * i / 20.0));
        const double tp = time_of(
            [&] { distribution(img, D2, grid, EstimatorSpec::monte_carlo(0x5EED, 500000)); }, 1);
        std::printf("%-34s %12s %12.4f %8s\n", "MC distribution (5e5 samples)", "-", tp, "-");
    }

    // sample cloud generation (blocked, deterministic)
    {
        const double tp =
            time_of([&] { sample(DomainSpec::hartogs(), 1000000, 0x5EED); }, 2);
        std::printf("%-34s %12s %12.4f %8s\n", "sample H (1e6 points)", "-", tp, "-");
    }
    return 0;
}
