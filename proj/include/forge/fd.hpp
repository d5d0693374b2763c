#pragma once

// Richardson-extrapolated central finite differences. These are the
// measurement side of every residual oracle: they must stay independent of
// the jet arithmetic they are used to check.

#include <functional>

namespace forge {

// 5-point central first derivative at step h combined with the same stencil
// at h/2 (Richardson), leading error O(h^8) before roundoff.
inline double fd_derivative1(const std::function<double(double)>& f, double x,
                             double h = 1e-4) {
    auto d5 = [&](double s) {
        return (f(x - 2 * s) - 8 * f(x - s) + 8 * f(x + s) - f(x + 2 * s)) / (12 * s);
    };
    const double a = d5(h), b = d5(h / 2);
    return (16.0 * b - a) / 15.0;
}

// Same construction for the second derivative.
inline double fd_derivative2(const std::function<double(double)>& f, double x,
                             double h = 1e-3) {
    auto d5 = [&](double s) {
        return (-f(x - 2 * s) + 16 * f(x - s) - 30 * f(x) + 16 * f(x + s) - f(x + 2 * s)) /
               (12 * s * s);
    };
    const double a = d5(h), b = d5(h / 2);
    return (16.0 * b - a) / 15.0;
}

}  // namespace forge
