#include "forge/specialfn.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace forge {

double complete_elliptic_K(double k) {
    if (!(k >= 0.0)) throw std::domain_error("elliptic modulus must satisfy k >= 0");
    if (k >= 1.0) throw std::domain_error("modulus at or beyond singular limit");
    // AGM(1, k'): K = pi / (2 * AGM). Quadratic convergence, full precision.
    long double a = 1.0L;
    long double g = std::sqrt((1.0L - static_cast<long double>(k)) *
                              (1.0L + static_cast<long double>(k)));
    for (int i = 0; i < 64; ++i) {
        const long double an = 0.5L * (a + g);
        const long double gn = std::sqrt(a * g);
        a = an;
        g = gn;
        if (std::abs(a - g) <= a * std::numeric_limits<long double>::epsilon()) break;
    }
    return static_cast<double>(1.5707963267948966192313216916397514L / a);
}

JacobiTriple jacobi_elliptic(double u, double k) {
    if (!std::isfinite(u)) throw std::domain_error("jacobi argument must be finite");
    if (!(k >= 0.0) || k > 1.0)
        throw std::domain_error("elliptic modulus must satisfy 0 <= k <= 1");

    const double m = k * k;

    if (m < 1e-12) {
        // Circular limit with first-order correction in m.
        const double s = std::sin(u), c = std::cos(u);
        const double ai = 0.25 * m * (u - s * c);
        return {s - ai * c, c + ai * s, 1.0 - 0.5 * m * s * s};
    }
    if (m > 1.0 - 1e-12) {
        // Hyperbolic limit with first-order correction in m' = 1 - m.
        const double ai = 0.25 * (1.0 - m);
        const double b = std::cosh(u), t = std::tanh(u);
        const double phi = 1.0 / b;
        const double twon = b * std::sinh(u);
        return {t + ai * (twon - u) / (b * b),
                phi - ai * t * phi * (twon - u),
                phi + ai * t * phi * (twon + u)};
    }

    // Descending Landen transformation: build the AGM scale, then recover the
    // amplitude by the backward recursion.
    constexpr int kMax = 16;
    double a[kMax], c[kMax];
    a[0] = 1.0;
    c[0] = k;
    double b = std::sqrt(1.0 - m);
    double twon = 1.0;
    int i = 0;
    while (std::abs(c[i] / a[i]) > std::numeric_limits<double>::epsilon()) {
        if (i >= kMax - 1) break;
        const double ai = a[i];
        ++i;
        c[i] = 0.5 * (ai - b);
        const double t = std::sqrt(ai * b);
        a[i] = 0.5 * (ai + b);
        b = t;
        twon *= 2.0;
    }

    double phi = twon * a[i] * u;
    for (; i > 0; --i) {
        const double t = c[i] * std::sin(phi) / a[i];
        phi = 0.5 * (std::asin(t) + phi);
    }

    const double sn = std::sin(phi);
    const double cn = std::cos(phi);
    // dn >= sqrt(1 - k^2) > 0, so the identity route is well conditioned and
    // much smoother than the classical cos(phi)/cos(phi - phi_prev) ratio.
    const double dn = std::sqrt(std::fma(-m * sn, sn, 1.0));
    return {sn, cn, dn};
}

}  // namespace forge
