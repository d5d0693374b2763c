// Timing comparison of the OpenMP grid kernels against their serial
// reference implementations, on the kind of work the library actually does:
// profile sampling, the 5-point residual sweep, and the pointwise phase step
// of the propagator.

#include "forge/assemble.hpp"
#include "forge/ermakov.hpp"
#include "forge/schrodinger.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using clk = std::chrono::steady_clock;

template <class F>
double time_ms(F&& fn, int reps = 3) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = clk::now();
        fn();
        const auto t1 = clk::now();
        best = std::min(best,
                        std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

void report(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-28s serial %9.2f ms   omp %9.2f ms   speedup %5.2fx\n", name,
                serial_ms, parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run serially\n");
#endif

    const forge::CaseId c{forge::CaseId::Tag::Case1, 0.5, 0.4};
    const forge::SolutionPair pair = forge::closed_pair(c);
    const forge::Potential pt = forge::Potential::poeschl_teller(c.k0);
    const forge::PinneyReduction red = forge::build_reduction(
        pair, {2.0, 1.0, 3.0, -1.0}, [pt](double x) { return pt.jet(x); },
        [pt](long double x) { return pt.value(x); }, pair.lambda);
    const forge::CanonicalMap cmap = forge::canonical_map(red);

    const forge::UniformGrid big{-10.0, 10.0, 2'000'001};
    auto field = [&](double x) { return std::sqrt(red.b(x)) * std::sin(cmap.value(x)); };
    report("sample 2e6-point profile",
           time_ms([&] { forge::map_grid_serial(big, field); }),
           time_ms([&] { forge::map_grid(big, field); }));

    forge::SolitonProfile p =
        forge::build_profile(c, {2.0, 1.0, 3.0, -1.0}, {forge::SolutionKind::SdSoliton, 1},
                             {-10.0, 10.0, 200'001});
    report("5-point residual, 2e5 pts",
           time_ms([&] { forge::inlse_residual_serial(p); }, 10),
           time_ms([&] { forge::inlse_residual(p); }, 10));

    // Pointwise phase step of the split-step propagator.
    const int n = 1 << 20;
    std::vector<std::complex<double>> psi(n, {1.0, 0.5});
    std::vector<double> V(n, -0.5), g(n, -1.0);
    const double dt = 1e-3;
    auto phase_serial = [&] {
        for (int j = 0; j < n; ++j) {
            const double ph = -(V[j] + g[j] * std::norm(psi[j])) * dt;
            psi[j] *= std::complex<double>(std::cos(ph), std::sin(ph));
        }
    };
    auto phase_omp = [&] {
#pragma omp parallel for schedule(static)
        for (int j = 0; j < n; ++j) {
            const double ph = -(V[j] + g[j] * std::norm(psi[j])) * dt;
            psi[j] *= std::complex<double>(std::cos(ph), std::sin(ph));
        }
    };
    report("phase step, 2^20 pts", time_ms(phase_serial, 10), time_ms(phase_omp, 10));
    return 0;
}
