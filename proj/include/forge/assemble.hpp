#pragma once

// End-to-end composition φ(x) = b^{1/2}(x) U(f(x)) and its verifiers: the
// stationary INLSE residual (finite differences on the sampled columns, kept
// independent of the analytic construction) and a split-step propagation
// check of stationarity.

#include "forge/ermakov.hpp"
#include "forge/grid.hpp"
#include "forge/nlse.hpp"
#include "forge/schrodinger.hpp"

#include <string>
#include <vector>

namespace forge {

enum class SolutionKind { SdSoliton, DarkKink };

struct SolutionChoice {
    SolutionKind kind = SolutionKind::SdSoliton;
    int mode_n = 1;
};

struct ProfileDiagnostics {
    double inlse_residual = 0.0;
    double boundary_decay = 0.0;    // max(|φ| at the two ends) / max|φ|
    double wronskian_spread = 0.0;  // relative spread of W over the grid
};

struct SolitonProfile {
    CaseId case_id;
    PinneyCoefficients coeffs;
    SolutionChoice choice;
    double lambda = 0.0;

    std::vector<double> x, V, g, phi, X;
    UniformGrid grid;

    // Scalars for the sidecar / reports.
    double E = 0.0, Gamma = 0.0, Lambda = 0.0, xi1 = 0.0;
    double k_modulus = 0.0, mu = 0.0, eta = 0.0;     // sd branch
    double kink_amplitude = 0.0, kink_width = 0.0;   // kink branch
    double X_center = 0.0;  // shift applied to the argument of U
    std::vector<std::string> warnings;

    ProfileDiagnostics diagnostics;
};

// Builds the full profile: V1 from the Darboux engine, b/g/f from the
// reduction, U from the reduced-equation catalog. For Case 2b the image of f
// does not end on multiples of the formula ξ1, so the quantization is run
// against the actual image half-width and U is centered on the image; without
// that, U(f(±∞)) ≠ 0 and the profile diverges with b. A warning records the
// adjustment.
SolitonProfile build_profile(const CaseId& c, const PinneyCoefficients& coeffs,
                             const SolutionChoice& choice, const UniformGrid& grid);

// max over interior grid points (two excluded per side) of
// |-φ'' + V φ + g φ³ - λ φ| with a 5-point stencil on the sampled columns.
double inlse_residual(const SolitonProfile& p);
// Serial reference for inlse_residual.
double inlse_residual_serial(const SolitonProfile& p);

// Second-order Strang splitting on a periodic box: spectral dispersion
// half-steps around a pointwise (V + g|ψ|²) phase step. Returns
// max_x ||ψ(x,T)| - |φ(x)||. Preconditions: dt <= 1e-3, boundary samples
// below 1e-6 of the peak (pad the domain for decaying cases).
double propagate_and_check(const SolitonProfile& p, double T, double dt);

// Grid with N points on [-half_width, half_width), exclusive right endpoint,
// as required by the periodic propagation box.
UniformGrid fft_grid(double half_width, int n);

}  // namespace forge
