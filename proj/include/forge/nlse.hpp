#pragma once

// Stationary solutions of the reduced equation -U'' + g0 U³ = E U: the
// sn/dn elliptic soliton with its modulus quantization, and the tanh kink.

#include "forge/grid.hpp"

#include <functional>

namespace forge {

// U(X) = η sn(μX, k)/dn(μX, k) with μ² = E/(1 - 2k²) and
// η² = 2k²(k² - 1)μ²/g0. Direct substitution (see nlse_residual, the oracle
// that fixes sign conventions) forces the g0 in the denominator, so η is
// real in the regime E > 0, 0 < k² < 1/2 only when g0 < 0.
struct SdSoliton {
    double E = 0.0;
    double g0 = 0.0;
    double k = 0.0;
    double mu = 0.0;
    double eta = 0.0;
    int mode_n = 1;

    double U(double X) const;
    double dU(double X) const;   // η μ cn/dn²
    double d2U(double X) const;  // via (sn/dn)'' = (2k²-1)(sn/dn) + 2k²(k²-1)(sn/dn)³
};

SdSoliton make_sd_soliton(double E, double k, double g0);

// U(X) = sqrt(E/g0) tanh(sqrt(E/2) X); the printed form sqrt(E/2) tanh(...)
// is the special case g0 = 2.
struct DarkKink {
    double E = 0.0;
    double g0 = 0.0;
    double amplitude = 0.0;  // sqrt(E/g0)
    double width = 0.0;      // sqrt(E/2)

    double U(double X) const;
    double dU(double X) const;
    double d2U(double X) const;
};

DarkKink make_dark_kink(double E, double g0);

// Solves μ(k) ξ1 = 2n K(k) for k in (0, 1/√2): deterministic bracketing at
// k ∈ {1e-6, 1/√2 - 1e-6}, bisection, then secant polish. The returned k
// satisfies |μ ξ1 - 2n K| < 1e-12, so U vanishes at ±ξ1 and at every
// interior multiple of ξ1/n.
double solve_modulus(double E, double xi1, int mode_n, double g0);

// max over the X grid of |-U'' + g0 U³ - E U| with Richardson finite
// differences. This is the measurement that pins every sign convention
// above; it must stay independent of the analytic derivative routes.
double nlse_residual(const std::function<double(double)>& U, double E, double g0,
                     const UniformGrid& X_grid);

}  // namespace forge
