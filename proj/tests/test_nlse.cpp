#include "forge/nlse.hpp"

#include "forge/specialfn.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <limits>

using namespace forge;

TEST_CASE("sd soliton parameters and residual") {
    const SdSoliton s = make_sd_soliton(5.0, 0.5, -1.0);
    CHECK(s.mu * s.mu == doctest::Approx(10.0).epsilon(1e-15));
    CHECK(s.eta * s.eta == doctest::Approx(3.75).epsilon(1e-15));
    // Analytic second derivative against the reduced equation directly.
    for (double X : {-1.1, -0.2, 0.6, 2.3}) {
        const double r = -s.d2U(X) + s.g0 * std::pow(s.U(X), 3) - s.E * s.U(X);
        CHECK(std::abs(r) < 1e-8);
    }
    // The finite-difference oracle that pins the sign conventions.
    CHECK(nlse_residual([&](double X) { return s.U(X); }, 5.0, -1.0,
                        UniformGrid{-2.0, 2.0, 81}) < 1e-6);
    // Odd in X; derivative identity d/dX (sn/dn) = cn/dn².
    CHECK(s.U(0.7) == doctest::Approx(-s.U(-0.7)).epsilon(1e-13));
    const double h = 1e-5;
    CHECK(std::abs((s.U(0.4 + h) - s.U(0.4 - h)) / (2 * h) - s.dU(0.4)) < 1e-7);

    // Degenerate amplitude at k -> 0.
    const SdSoliton tiny = make_sd_soliton(5.0, 1e-9, -1.0);
    CHECK(std::abs(tiny.U(1.0)) < 1e-8);

    CHECK_THROWS_AS((make_sd_soliton(5.0, 0.8, -1.0)), std::domain_error);  // k² > 1/2
    CHECK_THROWS_AS((make_sd_soliton(5.0, 0.5, 1.0)), std::domain_error);   // g0 > 0
    CHECK_THROWS_AS((make_sd_soliton(-1.0, 0.5, -1.0)), std::domain_error);
}

TEST_CASE("dark kink") {
    const DarkKink unit = make_dark_kink(2.0, 2.0);
    for (double X : {-2.0, 0.3, 1.5})
        CHECK(unit.U(X) == doctest::Approx(std::tanh(X)).epsilon(1e-15));
    const DarkKink d = make_dark_kink(0.1345, 1.0);
    CHECK(d.amplitude == doctest::Approx(std::sqrt(0.1345)));
    CHECK(d.width == doctest::Approx(std::sqrt(0.1345 / 2.0)));
    for (double X : {-4.0, 0.0, 2.2}) {
        const double r = -d.d2U(X) + d.g0 * std::pow(d.U(X), 3) - d.E * d.U(X);
        CHECK(std::abs(r) < 1e-10);
    }
    CHECK(nlse_residual([&](double X) { return unit.U(X); }, 2.0, 2.0,
                        UniformGrid{-5.0, 5.0, 101}) < 1e-8);
    CHECK(d.U(1.0) == doctest::Approx(-d.U(-1.0)).epsilon(1e-15));
    CHECK_THROWS_AS((make_dark_kink(1.0, -2.0)), std::domain_error);
    CHECK_THROWS_AS((make_dark_kink(0.0, 2.0)), std::domain_error);
}

TEST_CASE("modulus quantization") {
    const double E = 5.0;
    const double xi1 = M_PI / (2.0 * std::sqrt(5.0));
    const double k = solve_modulus(E, xi1, 1, -1.0);
    CHECK(k > 0.0);
    CHECK(k < 1.0 / std::sqrt(2.0));
    const double mu = std::sqrt(E / (1.0 - 2.0 * k * k));
    CHECK(std::abs(mu * xi1 - 2.0 * complete_elliptic_K(k)) < 1e-10);
    const SdSoliton s = make_sd_soliton(E, k, -1.0);
    CHECK(std::abs(s.U(xi1)) < 1e-10);
    CHECK(std::abs(s.U(-xi1)) < 1e-10);

    // Wider box at the same E: h(k) grows with xi1, so the root moves to a
    // smaller modulus (two solver runs as the oracle).
    const double k_wider = solve_modulus(E, 1.5 * xi1, 1, -1.0);
    CHECK(k_wider < k);
    // Higher mode at the same box: larger modulus.
    const double k_n2 = solve_modulus(E, xi1, 2, -1.0);
    CHECK(k_n2 > k);
    const double mu2 = std::sqrt(E / (1.0 - 2.0 * k_n2 * k_n2));
    CHECK(std::abs(mu2 * xi1 - 4.0 * complete_elliptic_K(k_n2)) < 1e-10);
    // Interior zeros at multiples of xi1/n.
    const SdSoliton s2 = make_sd_soliton(E, k_n2, -1.0);
    CHECK(std::abs(s2.U(xi1 / 2.0)) < 1e-10);

    // No bracket: sqrt(E)·xi1 already exceeds 2K(0).
    CHECK_THROWS_AS((solve_modulus(100.0, 1.0, 1, -1.0)), std::domain_error);
    CHECK_THROWS_AS((solve_modulus(E, xi1, 1, 1.0)), std::domain_error);
    CHECK_THROWS_AS((
        solve_modulus(E, std::numeric_limits<double>::infinity(), 1, -1.0)),
        std::domain_error);
}

TEST_CASE("nlse residual oracle on the zero solution") {
    CHECK(nlse_residual([](double) { return 0.0; }, 3.0, -1.0,
                        UniformGrid{-1.0, 1.0, 21}) == 0.0);
}
