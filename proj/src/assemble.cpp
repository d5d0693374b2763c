#include "forge/assemble.hpp"

#include "forge/susy.hpp"
#include "grid_kernels_inc.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <memory>
#include <stdexcept>

namespace forge {

std::vector<double> map_grid(const UniformGrid& g,
                             const std::function<double(double)>& f) {
    return map_grid_impl(g, f, true);
}
std::vector<double> map_grid_serial(const UniformGrid& g,
                                    const std::function<double(double)>& f) {
    return map_grid_impl(g, f, false);
}
double max_abs_on_grid(const UniformGrid& g,
                       const std::function<double(double)>& f) {
    return max_abs_impl(g, f, true);
}
double max_abs_on_grid_serial(const UniformGrid& g,
                              const std::function<double(double)>& f) {
    return max_abs_impl(g, f, false);
}

UniformGrid fft_grid(double half_width, int n) {
    const double h = 2.0 * half_width / static_cast<double>(n);
    return UniformGrid{-half_width, -half_width + h * (n - 1), n};
}

SolitonProfile build_profile(const CaseId& c, const PinneyCoefficients& coeffs,
                             const SolutionChoice& choice, const UniformGrid& grid) {
    grid.validate();
    c.validate();

    SolitonProfile p;
    p.case_id = c;
    p.coeffs = coeffs;
    p.choice = choice;
    p.grid = grid;
    p.lambda = c.lambda1();

    // Partner potential through the Darboux engine (cosh seed, ε = -k0²).
    const Potential V0 = Potential::free_particle();
    const double k0 = c.k0;
    SeedSolution seed{[k0](double x) { return cosh(JetD::variable(x) * k0); },
                      -k0 * k0};
    const double pad = 2.0;
    const DarbouxPair dp = darboux_partner(V0, seed, grid.xmin - pad, grid.xmax + pad);

    const SolutionPair pair = closed_pair(c);
    const Potential V1_closed = Potential::poeschl_teller(k0);
    PinneyReduction red = build_reduction(
        pair, coeffs, dp.V1,
        [V1_closed](long double x) { return V1_closed.value(x); }, p.lambda);

    const double scan_lo = std::min(grid.xmin, -16.0) - 1.0;
    const double scan_hi = std::max(grid.xmax, 16.0) + 1.0;
    const CanonicalMap cmap = canonical_map(red, scan_lo, scan_hi);

    p.E = red.E;
    p.Gamma = coeffs.Gamma();
    p.Lambda = pair.wronskian;
    p.xi1 = cmap.xi1;

    std::function<double(double)> U;
    if (choice.kind == SolutionKind::SdSoliton) {
        if (!cmap.bounded)
            throw std::domain_error(
                "sd soliton requested with infinite xi1 (unbounded canonical image)");
        double xi_q = cmap.xi1;
        double x_center = 0.0;
        if (c.tag == CaseId::Tag::Case2b) {
            // The image of f ends at angles fixed by the finite limits of
            // φ2/φ1, not at multiples of the formula ξ1. Quantize against the
            // actual half-width and center U on the image so it vanishes at
            // both ends; otherwise √b·U(f) grows exponentially.
            xi_q = 0.5 * (cmap.X_hi - cmap.X_lo);
            x_center = 0.5 * (cmap.X_hi + cmap.X_lo);
            p.warnings.push_back(
                "case 2b: modulus quantization uses the canonical-image half-width " +
                std::to_string(xi_q) + " instead of the formula xi1, with U centered "
                "on the image; the formula endpoints are not zeros of U");
        }
        const double k = solve_modulus(p.E, xi_q, choice.mode_n, coeffs.g0);
        SdSoliton sol = make_sd_soliton(p.E, k, coeffs.g0);
        sol.mode_n = choice.mode_n;
        p.k_modulus = sol.k;
        p.mu = sol.mu;
        p.eta = sol.eta;
        p.X_center = x_center;
        U = [sol, x_center](double X) { return sol.U(X - x_center); };
    } else {
        if (!(coeffs.g0 > 0.0))
            throw std::domain_error("sign error: dark kink requires g0 > 0");
        const DarkKink kink = make_dark_kink(p.E, coeffs.g0);
        p.kink_amplitude = kink.amplitude;
        p.kink_width = kink.width;
        // Center the kink at x = 0.
        const double x_center = cmap.value(0.0);
        p.X_center = x_center;
        U = [kink, x_center](double X) { return kink.U(X - x_center); };
    }

    p.x = map_grid(grid, [](double x) { return x; });
    const FnJet V1 = dp.V1;
    p.V = map_grid(grid, [V1](double x) { return V1(x).v; });
    p.g = map_grid(grid, [&red](double x) { return red.g(x); });
    p.X = map_grid(grid, [&cmap](double x) { return cmap.value(x); });
    p.phi = map_grid(grid, [&](double x) {
        return std::sqrt(red.b(x)) * U(cmap.value(x));
    });

    p.diagnostics.inlse_residual = inlse_residual(p);
    const double phimax = max_abs(p.phi);
    p.diagnostics.boundary_decay =
        phimax > 0.0
            ? std::max(std::abs(p.phi.front()), std::abs(p.phi.back())) / phimax
            : 0.0;
    double wmin = std::numeric_limits<double>::infinity(), wmax = -wmin;
    for (int i = 0; i < grid.n; ++i) {
        const double w = wronskian_at(pair, grid.x(i));
        wmin = std::min(wmin, w);
        wmax = std::max(wmax, w);
    }
    p.diagnostics.wronskian_spread = (wmax - wmin) / std::abs(pair.wronskian);
    return p;
}

namespace {

double inlse_residual_impl(const SolitonProfile& p, bool parallel) {
    const int n = p.grid.n;
    if (n < 5) throw std::invalid_argument("residual stencil needs >= 5 points");
    const double h = p.grid.h();
    const double ih2 = 1.0 / (12.0 * h * h);
    const auto& phi = p.phi;
    const auto& V = p.V;
    const auto& g = p.g;
    const double lam = p.lambda;
    double m = 0.0;
    auto at = [&](int i) {
        const double d2 = (-phi[i - 2] + 16.0 * phi[i - 1] - 30.0 * phi[i] +
                           16.0 * phi[i + 1] - phi[i + 2]) * ih2;
        return -d2 + V[i] * phi[i] + g[i] * phi[i] * phi[i] * phi[i] - lam * phi[i];
    };
    if (parallel) {
#pragma omp parallel for schedule(static) reduction(max : m)
        for (int i = 2; i < n - 2; ++i) m = std::max(m, std::abs(at(i)));
    } else {
        for (int i = 2; i < n - 2; ++i) m = std::max(m, std::abs(at(i)));
    }
    return m;
}

struct FftwPlanDeleter {
    void operator()(fftw_plan_s* plan) const { fftw_destroy_plan(plan); }
};

}  // namespace

double inlse_residual(const SolitonProfile& p) { return inlse_residual_impl(p, true); }
double inlse_residual_serial(const SolitonProfile& p) {
    return inlse_residual_impl(p, false);
}

double propagate_and_check(const SolitonProfile& p, double T, double dt) {
    const int n = p.grid.n;
    if (n < 16) throw std::invalid_argument("propagation needs at least 16 points");
    if (!(dt > 0.0) || dt > 1e-3 + 1e-15)
        throw std::invalid_argument("propagation requires 0 < dt <= 1e-3");
    if (!(T > 0.0)) throw std::invalid_argument("propagation requires T > 0");
    const double phimax = max_abs(p.phi);
    if (phimax == 0.0) return 0.0;
    const double edge = std::max(std::abs(p.phi.front()), std::abs(p.phi.back()));
    if (edge > 1e-6 * phimax)
        throw std::invalid_argument(
            "boundary check failed: |phi| at the domain ends exceeds 1e-6 of the "
            "peak; pad the domain before propagating on a periodic box");

    // Periodic box [xmin, xmin + L) with L = n h.
    const double h = p.grid.h();
    const double L = n * h;
    const int steps = static_cast<int>(std::llround(T / dt));

    std::vector<std::complex<double>> psi(p.phi.begin(), p.phi.end());
    std::vector<std::complex<double>> kin(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        const int jj = (j <= n / 2) ? j : j - n;
        const double kx = 2.0 * M_PI * jj / L;
        // Half dispersion step including the 1/n inverse-transform scale.
        kin[static_cast<size_t>(j)] =
            std::exp(std::complex<double>(0.0, -kx * kx * dt * 0.5)) / double(n);
    }

    auto* data = reinterpret_cast<fftw_complex*>(psi.data());
    std::unique_ptr<fftw_plan_s, FftwPlanDeleter> fwd(
        fftw_plan_dft_1d(n, data, data, FFTW_FORWARD, FFTW_ESTIMATE));
    std::unique_ptr<fftw_plan_s, FftwPlanDeleter> bwd(
        fftw_plan_dft_1d(n, data, data, FFTW_BACKWARD, FFTW_ESTIMATE));

    auto kinetic_half = [&]() {
        fftw_execute(fwd.get());
#pragma omp parallel for schedule(static)
        for (int j = 0; j < n; ++j) psi[static_cast<size_t>(j)] *= kin[static_cast<size_t>(j)];
        fftw_execute(bwd.get());
    };

    for (int s = 0; s < steps; ++s) {
        kinetic_half();
#pragma omp parallel for schedule(static)
        for (int j = 0; j < n; ++j) {
            const auto& z = psi[static_cast<size_t>(j)];
            const double dens = std::norm(z);
            const double phase = -(p.V[static_cast<size_t>(j)] +
                                   p.g[static_cast<size_t>(j)] * dens) * dt;
            psi[static_cast<size_t>(j)] *= std::complex<double>(std::cos(phase), std::sin(phase));
        }
        kinetic_half();
    }

    double drift = 0.0;
#pragma omp parallel for schedule(static) reduction(max : drift)
    for (int j = 0; j < n; ++j) {
        drift = std::max(drift, std::abs(std::abs(psi[static_cast<size_t>(j)]) -
                                         std::abs(p.phi[static_cast<size_t>(j)])));
    }
    return drift;
}

}  // namespace forge
