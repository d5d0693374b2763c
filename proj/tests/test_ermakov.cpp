#include "forge/ermakov.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <limits>

using namespace forge;

namespace {

const UniformGrid kGrid{-10.0, 10.0, 2001};

PinneyReduction case_reduction(CaseId::Tag tag, PinneyCoefficients coeffs,
                               double k0 = 0.5, double k1 = 0.4) {
    const CaseId c{tag, k0, k1};
    const SolutionPair pair = closed_pair(c);
    const Potential pt = Potential::poeschl_teller(k0);
    return build_reduction(pair, coeffs, [pt](double x) { return pt.jet(x); },
                           [pt](long double x) { return pt.value(x); }, pair.lambda);
}

// Free-particle pair (cos, sin) at λ = 1: the homogeneous limit.
SolutionPair cos_sin_pair() {
    SolutionPair p;
    p.lambda = 1.0;
    p.phi1 = [](long double x) { return cos(JetL::variable(x)); };
    p.phi2 = [](long double x) { return sin(JetL::variable(x)); };
    p.wronskian = 1.0;
    return p;
}

}  // namespace

TEST_CASE("reduction scalars: Gamma, Lambda, E") {
    const PinneyCoefficients coeffs{2.0, 1.0, 3.0, -1.0};
    CHECK(coeffs.Gamma() == doctest::Approx(5.0));
    CHECK(coeffs.Theta() ==
          doctest::Approx(std::sqrt(2.0 / 3.0 - 1.0 / 9.0)).epsilon(1e-15));

    const PinneyReduction r1 = case_reduction(CaseId::Tag::Case1, coeffs);
    CHECK(r1.E == doctest::Approx(5.0).epsilon(1e-15));
    const PinneyReduction r2a = case_reduction(CaseId::Tag::Case2a, coeffs);
    CHECK(r2a.E == doctest::Approx(0.3125).epsilon(1e-15));

    CHECK_THROWS_WITH_AS((
        case_reduction(CaseId::Tag::Case1, PinneyCoefficients{1.0, 2.0, 3.0, -1.0})),
        "indefinite quadratic form: Gamma = alpha*gamma - beta^2 must be > 0",
        std::invalid_argument);
    SolutionPair degenerate = cos_sin_pair();
    degenerate.wronskian = 0.0;
    CHECK_THROWS_AS((build_reduction(degenerate, PinneyCoefficients{},
                                    [](double) { return JetD(0.0); },
                                    [](long double) { return 0.0L; }, 1.0)),
                    std::invalid_argument);
}

TEST_CASE("homogeneous limit: rho = 1, b = 1, f = x, xi1 infinite") {
    const PinneyCoefficients coeffs{1.0, 0.0, 1.0, 1.0};
    const PinneyReduction red = build_reduction(
        cos_sin_pair(), coeffs, [](double) { return JetD(0.0); },
        [](long double) { return 0.0L; }, 1.0);
    CHECK(red.E == doctest::Approx(1.0));
    for (double x : {-2.0, 0.0, 1.3}) {
        CHECK(red.rho(x) == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(red.g(x) == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(red.n(x) == doctest::Approx(1.0).epsilon(1e-15));
    }
    CHECK(pinney_residual(red, kGrid) < 1e-13);
    const CanonicalMap f = canonical_map(red);
    CHECK(std::isinf(f.xi1));
    for (double x : {-9.0, -0.7, 0.0, 0.7, 2.0, 8.5}) {
        CHECK(f.value(x) == doctest::Approx(x).epsilon(1e-12));
        CHECK(f.n(x) == doctest::Approx(1.0));
    }
}

TEST_CASE("Pinney residual with analytic derivatives, all four cases") {
    const PinneyCoefficients coeffs{2.0, 1.0, 3.0, -1.0};
    for (auto tag : {CaseId::Tag::Case1, CaseId::Tag::Case2a, CaseId::Tag::Case2b,
                     CaseId::Tag::Case2c}) {
        const PinneyReduction red = case_reduction(tag, coeffs);
        CHECK(pinney_residual(red, kGrid) < 1e-7);
        // b stays positive (the quadratic form is definite).
        double bmin = std::numeric_limits<double>::infinity();
        for (int i = 0; i < kGrid.n; ++i) bmin = std::min(bmin, red.b(kGrid.x(i)));
        CHECK(bmin > 0.0);
        // E from the b-derivative formula agrees with Gamma Lambda^2.
        double err = 0.0;
        for (int i = 0; i < kGrid.n; ++i) {
            err = std::max(err, std::abs(static_cast<double>(
                        pinney_energy_formula(red, kGrid.x(i)) -
                        static_cast<long double>(red.E))));
        }
        CHECK(err < 1e-7);
    }
}

TEST_CASE("canonical map: derivative, branch continuity, quadrature agreement") {
    const PinneyCoefficients coeffs{2.0, 1.0, 3.0, -1.0};
    for (auto tag : {CaseId::Tag::Case1, CaseId::Tag::Case2a, CaseId::Tag::Case2b,
                     CaseId::Tag::Case2c}) {
        const PinneyReduction red = case_reduction(tag, coeffs);
        const CanonicalMap f = canonical_map(red);
        // f' b = 1 and n² b = 1.
        double worst = max_abs_on_grid(kGrid, [&](double x) {
            return f.fprime(x) * red.b(x) - 1.0;
        });
        CHECK(worst < 1e-8);
        CHECK(f.n(0.3) * f.n(0.3) * red.b(0.3) == doctest::Approx(1.0).epsilon(1e-14));
        // Monotone increasing through the nodes.
        double prev = -std::numeric_limits<double>::infinity();
        for (int i = 0; i < 401; ++i) {
            const double x = -10.0 + 20.0 * i / 400.0;
            const double v = f.value(x);
            CHECK(v > prev);
            prev = v;
        }
        // Closed form against quadrature of 1/b, across nodes.
        double qerr = 0.0;
        for (double x : {-7.3, -2.0, -0.5, 0.0, 0.4, 1.9, 6.1, 9.7}) {
            const double closed = f.value(x) - f.value(-10.0);
            qerr = std::max(qerr, std::abs(closed - f_by_quadrature(red, -10.0, x)));
        }
        CHECK(qerr < 1e-8);
    }
}

TEST_CASE("case 1 map: printed value at 0 and limits at infinity") {
    const PinneyCoefficients coeffs{2.0, 1.0, 3.0, -1.0};
    const PinneyReduction red = case_reduction(CaseId::Tag::Case1, coeffs);
    const CanonicalMap f = canonical_map(red, -40.0, 40.0);
    // f(0) keeps the β/γ offset of the general closed form.
    CHECK(f.value(0.0) ==
          doctest::Approx(std::atan(1.0 / std::sqrt(5.0)) / std::sqrt(5.0))
              .epsilon(1e-13));
    const double limit = M_PI / (2.0 * std::sqrt(5.0));
    CHECK(std::abs(f.value(35.0) - limit) < 1e-6);
    CHECK(std::abs(f.value(-35.0) + limit) < 1e-6);
    CHECK(f.xi1 == doctest::Approx(limit).epsilon(1e-15));
    CHECK(f.X_hi == doctest::Approx(limit).epsilon(1e-12));
    CHECK(f.X_lo == doctest::Approx(-limit).epsilon(1e-12));
}

TEST_CASE("case 2a and 2b map images end on the asymptotic angles") {
    const PinneyCoefficients coeffs{2.0, 1.0, 3.0, -1.0};
    {
        const PinneyReduction red = case_reduction(CaseId::Tag::Case2a, coeffs);
        const CanonicalMap f = canonical_map(red);
        // One node at the origin: image spans 4 xi1 with endpoints on
        // multiples of xi1.
        CHECK(f.nodes.size() == 1);
        CHECK(std::abs(f.nodes.front()) < 1e-12);
        CHECK(f.X_hi - f.X_lo == doctest::Approx(4.0 * f.xi1).epsilon(1e-12));
        CHECK(std::fmod(std::abs(f.X_lo / f.xi1), 1.0) == doctest::Approx(0.0));
        CHECK(f.value(60.0) < f.X_hi);
        CHECK(f.X_hi - f.value(60.0) < 3e-2);  // algebraic 1/x approach to the edge
    }
    {
        const PinneyReduction red = case_reduction(CaseId::Tag::Case2b, coeffs);
        const CanonicalMap f = canonical_map(red);
        CHECK(f.nodes.size() == 2);
        CHECK(f.orientation == -1);  // Λ < 0 for k1 < k0
        CHECK(f.xi1 > 0.0);
        // Exponential approach to the image ends (e^{-2 k1 x} with a large
        // 1/(2 k1 C) prefactor at this parameter set).
        CHECK(std::abs(f.value(14.0) - f.X_hi) < 5e-3);
        CHECK(std::abs(f.value(-14.0) - f.X_lo) < 5e-3);
        // The image width is not an even multiple of the formula xi1 (the
        // reason the quantization must target the true image for this case).
        const double ratio = (f.X_hi - f.X_lo) / (2.0 * f.xi1);
        CHECK(std::abs(ratio - std::round(ratio)) > 0.1);
    }
}
