#pragma once

// Uniform grids and the data-parallel kernels that evaluate functions and
// reductions over them. Every kernel has an OpenMP version and a serial
// reference; the two must agree bit for bit (each point is computed
// independently, and the only reduction used is max, which is exact), so
// outputs stay deterministic regardless of thread count.

#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace forge {

struct UniformGrid {
    double xmin = -10.0;
    double xmax = 10.0;
    int n = 2001;

    double h() const { return (xmax - xmin) / static_cast<double>(n - 1); }
    double x(int i) const { return xmin + h() * static_cast<double>(i); }

    void validate() const {
        if (n < 3) throw std::invalid_argument("grid needs at least 3 points");
        if (!(xmin < xmax)) throw std::invalid_argument("grid needs xmin < xmax");
    }
};

// y[i] = f(x_i), OpenMP over points.
std::vector<double> map_grid(const UniformGrid& g,
                             const std::function<double(double)>& f);
// Serial reference for map_grid.
std::vector<double> map_grid_serial(const UniformGrid& g,
                                    const std::function<double(double)>& f);

// max_i |f(x_i)|, OpenMP max-reduction.
double max_abs_on_grid(const UniformGrid& g,
                       const std::function<double(double)>& f);
// Serial reference for max_abs_on_grid.
double max_abs_on_grid_serial(const UniformGrid& g,
                              const std::function<double(double)>& f);

inline double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace forge
