#include "forge/assemble.hpp"
#include "forge/grid.hpp"

#include <doctest.h>

#include <cmath>

using namespace forge;

// The OpenMP kernels must agree with the serial references bit for bit:
// every point is computed independently and max is an exact reduction.

TEST_CASE("map_grid matches the serial reference exactly") {
    const UniformGrid g{-10.0, 10.0, 20001};
    auto f = [](double x) { return std::sin(3.0 * x) / std::cosh(0.5 * x) + x * 1e-3; };
    const auto par = map_grid(g, f);
    const auto ser = map_grid_serial(g, f);
    REQUIRE(par.size() == ser.size());
    for (size_t i = 0; i < par.size(); ++i) CHECK(par[i] == ser[i]);
}

TEST_CASE("max_abs_on_grid matches the serial reference exactly") {
    const UniformGrid g{-7.0, 9.0, 30011};
    auto f = [](double x) { return std::cos(x) * std::exp(-0.01 * x * x) - 0.3; };
    CHECK(max_abs_on_grid(g, f) == max_abs_on_grid_serial(g, f));
}

TEST_CASE("inlse residual kernel matches the serial reference exactly") {
    const SolitonProfile p = build_profile(
        {CaseId::Tag::Case1, 0.5, 0.4}, {2.0, 1.0, 3.0, -1.0},
        {SolutionKind::SdSoliton, 1}, UniformGrid{-10.0, 10.0, 2001});
    CHECK(inlse_residual(p) == inlse_residual_serial(p));
}
