#pragma once

// Thin wrapper over adaptive Gauss-Kronrod integration (Boost.Math). Used for
// the variation-of-parameters integral and as the independent route to the
// canonical coordinate f(x) = ∫ ds/b(s).

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <functional>

namespace forge {

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double rel_tol = 1e-13) {
    if (a == b) return 0.0;
    using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
    if (a > b) return -GK::integrate(f, b, a, 15, rel_tol);
    return GK::integrate(f, a, b, 15, rel_tol);
}

}  // namespace forge
