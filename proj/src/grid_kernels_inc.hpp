#pragma once

// Shared implementation of the grid kernels, included by assemble.cpp (it is
// the only translation unit that owns them; kept out of the public headers).

#include "forge/grid.hpp"

namespace forge {

inline std::vector<double> map_grid_impl(const UniformGrid& g,
                                         const std::function<double(double)>& f,
                                         bool parallel) {
    g.validate();
    std::vector<double> y(static_cast<size_t>(g.n));
    if (parallel) {
#pragma omp parallel for schedule(static)
        for (int i = 0; i < g.n; ++i) y[static_cast<size_t>(i)] = f(g.x(i));
    } else {
        for (int i = 0; i < g.n; ++i) y[static_cast<size_t>(i)] = f(g.x(i));
    }
    return y;
}

inline double max_abs_impl(const UniformGrid& g,
                           const std::function<double(double)>& f, bool parallel) {
    g.validate();
    double m = 0.0;
    if (parallel) {
#pragma omp parallel for schedule(static) reduction(max : m)
        for (int i = 0; i < g.n; ++i) m = std::max(m, std::abs(f(g.x(i))));
    } else {
        for (int i = 0; i < g.n; ++i) m = std::max(m, std::abs(f(g.x(i))));
    }
    return m;
}

}  // namespace forge
