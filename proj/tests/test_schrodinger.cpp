#include "forge/schrodinger.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace forge;

namespace {

const UniformGrid kGrid{-10.0, 10.0, 2001};

double pair_residual(const SolutionPair& p, const Potential& V) {
    double worst = 0.0;
    for (const FnJetL* f : {&p.phi1, &p.phi2}) {
        worst = std::max(worst, max_abs_on_grid(kGrid, [&](double x) {
                             const JetL j = (*f)(static_cast<long double>(x));
                             return static_cast<double>(
                                 -j.d2 + (V.value<long double>(x) - p.lambda) * j.v);
                         }));
    }
    return worst;
}

}  // namespace

TEST_CASE("free particle seeds and nodelessness flags") {
    auto zero = free_particle_seeds(Lambda0Class::Zero, 0.5);
    REQUIRE(zero.size() == 2);
    CHECK(zero[0].nodeless);
    CHECK(!zero[1].nodeless);
    CHECK(zero[0].lambda0 == 0.0);

    auto neg = free_particle_seeds(Lambda0Class::NegativeKsq, 0.5);
    CHECK(neg[0].name == "sinh");
    CHECK(!neg[0].nodeless);
    CHECK(neg[1].name == "cosh");
    CHECK(neg[1].nodeless);
    CHECK(neg[1].lambda0 == doctest::Approx(-0.25));
    CHECK(neg[1].fn(0.7).v == doctest::Approx(std::cosh(0.35)));

    auto pos = free_particle_seeds(Lambda0Class::PositiveKsq, 0.5);
    CHECK(!pos[0].nodeless);
    CHECK(!pos[1].nodeless);
}

TEST_CASE("closed pairs satisfy the partner equation with analytic jets") {
    const Potential pt = Potential::poeschl_teller(0.5);
    for (auto tag : {CaseId::Tag::Case1, CaseId::Tag::Case2a, CaseId::Tag::Case2b,
                     CaseId::Tag::Case2c}) {
        const CaseId c{tag, 0.5, 0.4};
        const SolutionPair p = closed_pair(c);
        CHECK(pair_residual(p, pt) < 1e-8);
    }
}

TEST_CASE("closed pairs reproduce the printed Wronskians, constant over the grid") {
    struct Row { CaseId::Tag tag; double expected; };
    const Row rows[] = {
        {CaseId::Tag::Case1, 1.0},
        {CaseId::Tag::Case2a, 0.25},
        {CaseId::Tag::Case2b, 0.4 * (0.16 - 0.25)},  // -0.036
        {CaseId::Tag::Case2c, 0.4 * (0.16 + 0.25)},  //  0.164
    };
    for (const Row& r : rows) {
        const SolutionPair p = closed_pair({r.tag, 0.5, 0.4});
        CHECK(std::abs(p.wronskian - r.expected) < 1e-15);
        double wmin = INFINITY, wmax = -INFINITY;
        for (int i = 0; i < kGrid.n; ++i) {
            const double w = wronskian_at(p, kGrid.x(i));
            wmin = std::min(wmin, w);
            wmax = std::max(wmax, w);
        }
        CHECK((wmax - wmin) / std::abs(p.wronskian) < 1e-9);
        CHECK(std::abs(wronskian_at(p, 1.3) - r.expected) < 1e-12);
    }
    // Case 2b with k1 = k0 collapses the pair.
    CHECK_THROWS_WITH_AS((closed_pair({CaseId::Tag::Case2b, 0.5, 0.5})),
                         "degenerate pair: Lambda = 0 (k1 == k0)",
                         std::invalid_argument);
}

TEST_CASE("closed pairs agree with the RK4 oracle") {
    const Potential pt = Potential::poeschl_teller(0.5);
    for (auto tag : {CaseId::Tag::Case1, CaseId::Tag::Case2a, CaseId::Tag::Case2b,
                     CaseId::Tag::Case2c}) {
        const CaseId c{tag, 0.5, 0.4};
        const SolutionPair p = closed_pair(c);
        for (const FnJetL* f : {&p.phi1, &p.phi2}) {
            const JetL ic = (*f)(-10.0L);
            const auto y = integrate_schrodinger(pt, p.lambda, -10.0,
                                                 static_cast<double>(ic.v),
                                                 static_cast<double>(ic.d1), kGrid);
            double err = 0.0;
            for (int i = 0; i < kGrid.n; ++i) {
                const double ref =
                    static_cast<double>((*f)(static_cast<long double>(kGrid.x(i))).v);
                err = std::max(err, std::abs(y[static_cast<size_t>(i)] - ref));
            }
            CHECK(err < 1e-7);
        }
    }
}

TEST_CASE("RK4 oracle on closed-form free and Poeschl-Teller solutions") {
    const UniformGrid g{-10.0, 10.0, 2001};
    // V = 0, λ = -0.25, y(0) = 1, y'(0) = 0  ->  cosh(0.5 x).
    auto y =
        integrate_schrodinger(Potential::free_particle(), -0.25, 0.0, 1.0, 0.0, g);
    double err = 0.0;
    for (int i = 0; i < g.n; ++i)
        err = std::max(err, std::abs(y[static_cast<size_t>(i)] - std::cosh(0.5 * g.x(i))));
    CHECK(err < 1e-8);
    // Poeschl-Teller missing state: sech(0.5 x) at λ = -0.25.
    y = integrate_schrodinger(Potential::poeschl_teller(0.5), -0.25, 0.0, 1.0, 0.0, g);
    err = 0.0;
    for (int i = 0; i < g.n; ++i)
        err = std::max(err, std::abs(y[static_cast<size_t>(i)] - 1.0 / std::cosh(0.5 * g.x(i))));
    CHECK(err < 1e-8);

    CHECK_THROWS_AS((
        integrate_schrodinger(Potential::free_particle(), 0.0, 0.0, 1.0, 0.0,
                              UniformGrid{-10.0, 10.0, 201})),  // h = 0.1 too coarse
        std::invalid_argument);
    CHECK_THROWS_AS((integrate_schrodinger(Potential::free_particle(), 0.0, 0.0055, 1.0,
                                          0.0, g)),  // x0 off-grid
                    std::invalid_argument);
}

TEST_CASE("second solution by variation of parameters") {
    // φ1 = 1: φ2 = x - anchor.
    auto one = [](double) { return JetD(1.0); };
    auto s1 = second_solution(one, 0.3, -5.0, 5.0);
    CHECK(s1(2.0).v == doctest::Approx(1.7).epsilon(1e-12));
    CHECK(s1(-1.0).v == doctest::Approx(-1.3).epsilon(1e-12));

    // φ1 = cosh(0.5 x): φ2 = 2 sinh(0.5 x), W = 1.
    auto ch = [](double x) { return cosh(JetD::variable(x) * 0.5); };
    auto s2 = second_solution(ch, 0.0, -8.0, 8.0);
    for (double x : {-3.0, -0.5, 1.0, 4.0}) {
        const JetD p2 = s2(x);
        CHECK(p2.v == doctest::Approx(2.0 * std::sinh(0.5 * x)).epsilon(1e-10));
        const JetD p1 = ch(x);
        CHECK(p1.v * p2.d1 - p2.v * p1.d1 == doctest::Approx(1.0).epsilon(1e-10));
    }

    // φ1 = cos: φ2 = sin inside (-π/2, π/2) and, continued through the
    // nodes, sin everywhere.
    auto cs = [](double x) { return cos(JetD::variable(x)); };
    auto s3 = second_solution(cs, 0.0, -2.6, 2.6);
    CHECK(s3(1.0).v == doctest::Approx(std::sin(1.0)).epsilon(1e-10));
    CHECK(s3(2.0).v == doctest::Approx(std::sin(2.0)).epsilon(1e-8));
    CHECK(s3(-2.2).v == doctest::Approx(std::sin(-2.2)).epsilon(1e-8));
    const JetD q1 = cs(2.0), q2 = s3(2.0);
    CHECK(q1.v * q2.d1 - q2.v * q1.d1 == doctest::Approx(1.0).epsilon(1e-8));

    CHECK_THROWS_AS((second_solution(cs, M_PI / 2.0, -2.0, 2.0)), std::invalid_argument);
}
