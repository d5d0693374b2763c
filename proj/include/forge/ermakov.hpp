#pragma once

// Ermakov-Pinney reduction: ρ = (α φ1² + 2β φ1 φ2 + γ φ2²)^{1/2} solves
// ρ'' + (λ - V)ρ = E/ρ³ with E = Γ Λ², Γ = αγ - β². From ρ the symmetry
// function b = ρ², the inhomogeneous nonlinearity g = g0/b³, and the
// canonical coordinate X = f(x) with f' = 1/b are constructed.

#include "forge/grid.hpp"
#include "forge/jet.hpp"
#include "forge/schrodinger.hpp"

#include <functional>
#include <vector>

namespace forge {

struct PinneyCoefficients {
    double alpha = 2.0;
    double beta = 1.0;
    double gamma = 3.0;
    double g0 = -1.0;  // nonlinearity scale

    double Gamma() const { return alpha * gamma - beta * beta; }
    double Theta() const;
};

struct PinneyReduction {
    SolutionPair pair;
    PinneyCoefficients coeffs;
    FnJet V;        // potential entering the Pinney equation (value/d1/d2)
    double lambda = 0.0;
    double E = 0.0;  // reduced NLSE energy, Γ Λ²
    // Extended-precision route to V for the b-derivative energy formula.
    std::function<long double(long double)> V_ld;

    // Quadratic form b = α φ1² + 2β φ1 φ2 + γ φ2² and derived quantities.
    // b is always evaluated through the quadratic form; the factored
    // sech²/tanh² displays are singular at nodes of φ1 and never used.
    JetL b_jet_ld(long double x) const;
    JetD b_jet(double x) const;
    double b(double x) const { return b_jet(x).v; }
    double rho(double x) const;
    double g(double x) const;
    double n(double x) const;  // amplitude factor b^{-1/2}
};

PinneyReduction build_reduction(const SolutionPair& pair,
                                const PinneyCoefficients& coeffs, FnJet V,
                                std::function<long double(long double)> V_ld,
                                double lambda);

// Canonical coordinate map. The closed form
//   f(x) = (1/(Λ √Γ)) atan[(γ/√Γ)(φ2/φ1 + β/γ)]
// is valid per branch of φ1; at each node of φ1 the principal value jumps
// down by π/(|Λ|√Γ), so a per-branch offset restores a globally continuous,
// strictly increasing map with f' = 1/b. Offsets are counted relative to
// x = 0 so the homogeneous limit gives f(x) = x exactly.
struct CanonicalMap {
    double Lambda = 0.0;
    double Gamma = 0.0;
    double gamma_coef = 0.0;
    double beta_coef = 0.0;
    double lam_sqrt_gamma = 0.0;  // Λ √Γ (signed)
    int orientation = 1;          // sign(Λ), recorded; f is kept increasing
    double xi1 = 0.0;             // π/(2 |Λ| √Γ), or +inf when f is unbounded
    bool bounded = false;
    double X_lo = 0.0, X_hi = 0.0;  // image of f over the real line (bounded case)

    std::vector<double> nodes;  // nodes of φ1 in the scanned window
    int sigma_scan_left = 1;    // sign of φ1 at the left end of the window
    int offset_base = 0;        // node count at x = 0 (offsets are relative to it)
    FnJet phi1, phi2;

    double operator()(double x) const { return value(x); }
    double value(double x) const;
    JetD jet(double x) const;  // value, f' = 1/b, f'' = -b'/b²
    double fprime(double x) const;
    double n(double x) const;

  private:
    friend CanonicalMap canonical_map(const PinneyReduction&, double, double);
    std::function<JetD(double)> b_fn;
};

// Builds the map, scanning [scan_lo, scan_hi] for nodes of φ1. The window
// must contain every node of φ1 (catalog pairs have finitely many except
// Case 2c, whose map is unbounded and needs no image bounds).
CanonicalMap canonical_map(const PinneyReduction& red, double scan_lo = -16.0,
                           double scan_hi = 16.0);

// max over the grid of |ρ'' + (λ - V)ρ - E/ρ³| with analytic derivatives.
double pinney_residual(const PinneyReduction& red, const UniformGrid& grid);

// The b-derivative route to the reduced energy,
//   E = (λ - V) b² - b'²/4 + b b''/2,
// evaluated in extended precision (b² reaches ~1e8 on the working domain and
// the cancellation would eat the 1e-7 comparison budget in double).
long double pinney_energy_formula(const PinneyReduction& red, double x);

// Independent route to f: adaptive quadrature of ∫ ds/b from x_ref to x.
double f_by_quadrature(const PinneyReduction& red, double x_ref, double x);

}  // namespace forge
