#include "forge/nlse.hpp"

#include "forge/fd.hpp"
#include "forge/specialfn.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace forge {

double SdSoliton::U(double X) const {
    const JacobiTriple j = jacobi_elliptic(mu * X, k);
    return eta * j.sn / j.dn;
}

double SdSoliton::dU(double X) const {
    const JacobiTriple j = jacobi_elliptic(mu * X, k);
    return eta * mu * j.cn / (j.dn * j.dn);
}

double SdSoliton::d2U(double X) const {
    const JacobiTriple j = jacobi_elliptic(mu * X, k);
    const double sd = j.sn / j.dn;
    const double k2 = k * k;
    return eta * mu * mu * ((2.0 * k2 - 1.0) * sd + 2.0 * k2 * (k2 - 1.0) * sd * sd * sd);
}

SdSoliton make_sd_soliton(double E, double k, double g0) {
    if (!(E > 0.0)) throw std::domain_error("sd soliton requires E > 0");
    if (!(k >= 0.0) || k >= 1.0) throw std::domain_error("modulus must lie in [0, 1)");
    const double one_minus_2k2 = 1.0 - 2.0 * k * k;
    if (!(one_minus_2k2 > 0.0))
        throw std::domain_error(
            "mu^2 negative: modulus outside realizable regime (needs k^2 < 1/2 for E > 0)");
    const double mu2 = E / one_minus_2k2;
    const double eta2 = 2.0 * k * k * (k * k - 1.0) * mu2 / g0;
    if (eta2 < 0.0) {
        std::ostringstream msg;
        msg << "amplitude not real: eta^2 = 2k^2(k^2-1)mu^2/g0 < 0 with g0 "
            << (g0 > 0 ? "> 0" : "< 0") << "; require g0 < 0 in this regime";
        throw std::domain_error(msg.str());
    }
    SdSoliton s;
    s.E = E;
    s.g0 = g0;
    s.k = k;
    s.mu = std::sqrt(mu2);
    s.eta = std::sqrt(eta2);
    return s;
}

double DarkKink::U(double X) const { return amplitude * std::tanh(width * X); }
double DarkKink::dU(double X) const {
    const double c = std::cosh(width * X);
    return amplitude * width / (c * c);
}
double DarkKink::d2U(double X) const {
    const double t = std::tanh(width * X);
    return -2.0 * amplitude * width * width * t * (1.0 - t * t);
}

DarkKink make_dark_kink(double E, double g0) {
    if (!(E > 0.0)) throw std::domain_error("dark kink requires E > 0");
    if (!(g0 > 0.0)) throw std::domain_error("sign error: dark kink requires g0 > 0");
    DarkKink d;
    d.E = E;
    d.g0 = g0;
    d.amplitude = std::sqrt(E / g0);
    d.width = std::sqrt(E / 2.0);
    return d;
}

double solve_modulus(double E, double xi1, int mode_n, double g0) {
    if (!(E > 0.0)) throw std::domain_error("solve_modulus requires E > 0");
    if (!(xi1 > 0.0) || std::isinf(xi1))
        throw std::domain_error("solve_modulus requires finite xi1 > 0");
    if (mode_n < 1) throw std::domain_error("mode index must be >= 1");
    if (!(g0 < 0.0))
        throw std::domain_error(
            "amplitude not real: the sn/dn family needs g0 < 0 (got g0 >= 0)");

    auto h = [&](double k) {
        const double mu = std::sqrt(E / (1.0 - 2.0 * k * k));
        return mu * xi1 - 2.0 * mode_n * complete_elliptic_K(k);
    };
    const double k_lo = 1e-6;
    const double k_hi = 1.0 / std::sqrt(2.0) - 1e-6;
    double h_lo = h(k_lo), h_hi = h(k_hi);
    if (h_lo * h_hi > 0.0) {
        std::ostringstream msg;
        msg << "no realizable modulus for this mode: h(" << k_lo << ") = " << h_lo
            << ", h(" << k_hi << ") = " << h_hi << " (no sign change)";
        throw std::domain_error(msg.str());
    }

    double a = k_lo, b = k_hi, ha = h_lo;
    for (int it = 0; it < 60; ++it) {
        const double m = 0.5 * (a + b);
        const double hm = h(m);
        if (ha * hm <= 0.0) b = m;
        else { a = m; ha = hm; }
        if (b - a < 1e-6) break;
    }
    // Secant polish from the bisection bracket.
    double x0 = a, x1 = b, f0 = h(x0), f1 = h(x1);
    double best = (std::abs(f0) < std::abs(f1)) ? x0 : x1;
    double best_h = std::min(std::abs(f0), std::abs(f1));
    for (int it = 0; it < 60 && best_h > 1e-13; ++it) {
        if (f1 == f0) break;
        double x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
        if (!(x2 > 0.0) || !(x2 < 1.0 / std::sqrt(2.0))) x2 = 0.5 * (x0 + x1);
        const double f2 = h(x2);
        x0 = x1; f0 = f1;
        x1 = x2; f1 = f2;
        if (std::abs(f2) < best_h) { best_h = std::abs(f2); best = x2; }
    }
    return best;
}

double nlse_residual(const std::function<double(double)>& U, double E, double g0,
                     const UniformGrid& X_grid) {
    auto res = [&](double X) {
        const double u = U(X);
        return -fd_derivative2(U, X) + g0 * u * u * u - E * u;
    };
    return max_abs_on_grid(X_grid, res);
}

}  // namespace forge
