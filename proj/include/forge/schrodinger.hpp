#pragma once

// Potentials and closed-form solution pairs of the stationary Schrödinger
// equation -y'' + V y = λ y, along with an independent RK4 integrator that
// serves as the correctness oracle for every closed form in the catalog.

#include "forge/grid.hpp"
#include "forge/jet.hpp"

#include <optional>
#include <string>
#include <vector>

namespace forge {

struct Potential {
    enum class Kind { FreeParticle, PoeschlTeller };

    Kind kind = Kind::FreeParticle;
    double k0 = 0.0;  // depth/width scale for PoeschlTeller

    static Potential free_particle() { return {Kind::FreeParticle, 0.0}; }
    static Potential poeschl_teller(double k0);

    // V(x) = 0 (free particle) or -2 k0^2 sech^2(k0 x).
    template <class T>
    T value(T x) const {
        if (kind == Kind::FreeParticle) return T(0);
        const T s = T(1) / std::cosh(T(k0) * x);
        return T(-2) * T(k0) * T(k0) * s * s;
    }
    template <class T>
    Jet<T> jet(T x) const {
        if (kind == Kind::FreeParticle) return Jet<T>(T(0));
        const Jet<T> s = sech(Jet<T>::variable(x) * T(k0));
        return T(-2) * T(k0) * T(k0) * s * s;
    }
    double operator()(double x) const { return value(x); }
};

// Two linearly independent solutions at the same energy, with their constant
// Wronskian Λ = φ1 φ2' - φ2 φ1'. Functions carry analytic first and second
// derivatives (in extended precision; narrow() for double work).
struct SolutionPair {
    double lambda = 0.0;
    FnJetL phi1;
    FnJetL phi2;
    double wronskian = 0.0;

    // Asymptotics of u = φ2/φ1. Present exactly when 1/b is integrable at
    // both ends, i.e. the canonical coordinate has a bounded image. Values
    // may be ±infinity.
    std::optional<double> u_limit_minus;
    std::optional<double> u_limit_plus;

    bool bounded_map() const { return u_limit_minus && u_limit_plus; }

    FnJet phi1_d() const { return narrow(phi1); }
    FnJet phi2_d() const { return narrow(phi2); }
};

struct CaseId {
    enum class Tag { Case1, Case2a, Case2b, Case2c };

    Tag tag = Tag::Case1;
    double k0 = 0.5;
    double k1 = 0.4;  // Case2b / Case2c only

    void validate() const;
    // Partner-equation energy λ1 for this case.
    double lambda1() const;
    std::string name() const;
    static CaseId parse(const std::string& text, double k0, double k1);
};

// Closed-form pair for the single-well Poeschl-Teller partner potential at
// the case energy; Λ comes out as 1, k0², k1(k1²-k0²), k1(k1²+k0²).
SolutionPair closed_pair(const CaseId& c);

enum class Lambda0Class { Zero, NegativeKsq, PositiveKsq };

struct SeedCandidate {
    FnJet fn;
    std::string name;
    bool nodeless = false;
    double lambda0 = 0.0;
};

// Free-particle solutions {1, x}, {sinh, cosh}, {sin, cos} for
// λ0 = 0, -k0², +k0², each flagged nodeless or not.
std::vector<SeedCandidate> free_particle_seeds(Lambda0Class cls, double k0);

// Variation of parameters: φ2 = φ1 ∫_{anchor}^x ds/φ1², normalized by
// φ2(anchor) = 0, so W(φ1, φ2) = 1 by construction. Nodes of φ1 inside
// [scan_lo, scan_hi] are crossed by switching anchors and matching the
// smooth continuation (valid for simple zeros with φ1'' = 0 there, which is
// the Schrödinger case).
FnJet second_solution(const FnJet& phi1, double x_anchor, double scan_lo,
                      double scan_hi);

// RK4 integration of -y'' + V y = λ y with data (y0, dy0) at x0; x0 must lie
// on the grid (integration marches outward in both directions). Requires
// h <= 0.01.
std::vector<double> integrate_schrodinger(const Potential& V, double lambda,
                                          double x0, double y0, double dy0,
                                          const UniformGrid& grid);

// φ1 φ2' - φ2 φ1' at x; constant in x for true solution pairs.
double wronskian_at(const SolutionPair& pair, double x);

// Locations of sign changes of f in [lo, hi], refined by bisection.
std::vector<double> find_nodes(const std::function<double(double)>& f, double lo,
                               double hi, int scan_points = 4001);

}  // namespace forge
