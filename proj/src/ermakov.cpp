#include "forge/ermakov.hpp"

#include "forge/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace forge {

double PinneyCoefficients::Theta() const {
    return std::sqrt(alpha / gamma - (beta * beta) / (gamma * gamma));
}

JetL PinneyReduction::b_jet_ld(long double x) const {
    const JetL p1 = pair.phi1(x);
    const JetL p2 = pair.phi2(x);
    const long double a = coeffs.alpha, b = coeffs.beta, g = coeffs.gamma;
    return a * p1 * p1 + (2.0L * b) * (p1 * p2) + g * p2 * p2;
}

JetD PinneyReduction::b_jet(double x) const {
    const JetL j = b_jet_ld(static_cast<long double>(x));
    return {static_cast<double>(j.v), static_cast<double>(j.d1),
            static_cast<double>(j.d2)};
}

double PinneyReduction::rho(double x) const { return std::sqrt(b(x)); }

double PinneyReduction::g(double x) const {
    const double bb = b(x);
    return coeffs.g0 / (bb * bb * bb);
}

double PinneyReduction::n(double x) const { return 1.0 / std::sqrt(b(x)); }

PinneyReduction build_reduction(const SolutionPair& pair,
                                const PinneyCoefficients& coeffs, FnJet V,
                                std::function<long double(long double)> V_ld,
                                double lambda) {
    if (!(coeffs.gamma > 0.0))
        throw std::invalid_argument("reduction requires gamma > 0");
    if (!(coeffs.Gamma() > 0.0))
        throw std::invalid_argument(
            "indefinite quadratic form: Gamma = alpha*gamma - beta^2 must be > 0");
    if (pair.wronskian == 0.0)
        throw std::invalid_argument("degenerate pair: Lambda = 0");
    PinneyReduction red;
    red.pair = pair;
    red.coeffs = coeffs;
    red.V = std::move(V);
    red.V_ld = std::move(V_ld);
    red.lambda = lambda;
    red.E = coeffs.Gamma() * pair.wronskian * pair.wronskian;
    return red;
}

double CanonicalMap::value(double x) const {
    const int j = static_cast<int>(
        std::upper_bound(nodes.begin(), nodes.end(), x) - nodes.begin());
    const double sigma = ((j % 2 == 0) ? 1.0 : -1.0) * sigma_scan_left;
    const double p1 = phi1(x).v;
    const double p2 = phi2(x).v;
    const double y = gamma_coef * p2 + beta_coef * p1;
    const double w = std::sqrt(Gamma) * p1;
    const double principal = std::atan2(sigma * y, sigma * w);
    const double per_node = M_PI / (std::abs(Lambda) * std::sqrt(Gamma));
    return principal / lam_sqrt_gamma + per_node * (j - offset_base);
}

JetD CanonicalMap::jet(double x) const {
    const JetD b = b_fn(x);
    return {value(x), 1.0 / b.v, -b.d1 / (b.v * b.v)};
}

double CanonicalMap::fprime(double x) const { return 1.0 / b_fn(x).v; }

double CanonicalMap::n(double x) const { return 1.0 / std::sqrt(b_fn(x).v); }

CanonicalMap canonical_map(const PinneyReduction& red, double scan_lo,
                           double scan_hi) {
    CanonicalMap m;
    m.Lambda = red.pair.wronskian;
    m.Gamma = red.coeffs.Gamma();
    m.gamma_coef = red.coeffs.gamma;
    m.beta_coef = red.coeffs.beta;
    m.lam_sqrt_gamma = m.Lambda * std::sqrt(m.Gamma);
    m.orientation = (m.Lambda >= 0.0) ? 1 : -1;
    m.phi1 = red.pair.phi1_d();
    m.phi2 = red.pair.phi2_d();
    const PinneyReduction r = red;
    m.b_fn = [r](double x) { return r.b_jet(x); };

    auto p1val = [&m](double x) { return m.phi1(x).v; };
    m.nodes = find_nodes(p1val, scan_lo, scan_hi, 8001);
    const double left = p1val(scan_lo);
    m.sigma_scan_left = (left >= 0.0) ? 1 : -1;
    m.offset_base = static_cast<int>(
        std::upper_bound(m.nodes.begin(), m.nodes.end(), 0.0) - m.nodes.begin());

    const double xi1 = M_PI / (2.0 * std::abs(m.Lambda) * std::sqrt(m.Gamma));
    m.bounded = red.pair.bounded_map();
    if (m.bounded) {
        m.xi1 = xi1;
        auto end_angle = [&](double u_lim) {
            if (std::isinf(u_lim)) return (u_lim > 0 ? 1.0 : -1.0) * M_PI / 2.0;
            return std::atan((m.gamma_coef * u_lim + m.beta_coef) / std::sqrt(m.Gamma));
        };
        const int total = static_cast<int>(m.nodes.size());
        m.X_lo = end_angle(*red.pair.u_limit_minus) / m.lam_sqrt_gamma +
                 2.0 * xi1 * (0 - m.offset_base);
        m.X_hi = end_angle(*red.pair.u_limit_plus) / m.lam_sqrt_gamma +
                 2.0 * xi1 * (total - m.offset_base);
    } else {
        m.xi1 = std::numeric_limits<double>::infinity();
        m.X_lo = -std::numeric_limits<double>::infinity();
        m.X_hi = std::numeric_limits<double>::infinity();
    }
    return m;
}

double pinney_residual(const PinneyReduction& red, const UniformGrid& grid) {
    auto res = [&](double x) {
        const JetD rho = sqrt(red.b_jet(x));
        const double V = red.V(x).v;
        return rho.d2 + (red.lambda - V) * rho.v - red.E / (rho.v * rho.v * rho.v);
    };
    return max_abs_on_grid(grid, res);
}

long double pinney_energy_formula(const PinneyReduction& red, double x) {
    const JetL b = red.b_jet_ld(static_cast<long double>(x));
    const long double V = red.V_ld(static_cast<long double>(x));
    const long double lam = static_cast<long double>(red.lambda);
    return (lam - V) * b.v * b.v - 0.25L * b.d1 * b.d1 + 0.5L * b.v * b.d2;
}

double f_by_quadrature(const PinneyReduction& red, double x_ref, double x) {
    auto inv_b = [&](double s) { return 1.0 / red.b(s); };
    return integrate(inv_b, x_ref, x);
}

}  // namespace forge
