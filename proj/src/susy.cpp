#include "forge/susy.hpp"

#include "forge/fd.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace forge {

namespace {

void require_nodeless(const FnJet& u0, double lo, double hi) {
    auto value = [&](double x) { return u0(x).v; };
    const std::vector<double> nodes = find_nodes(value, lo, hi);
    if (!nodes.empty()) {
        std::ostringstream msg;
        msg << "seed has a node near x = " << nodes.front()
            << "; superpotential is singular there";
        throw std::domain_error(msg.str());
    }
}

}  // namespace

FnJet superpotential(const SeedSolution& seed, double lo, double hi) {
    require_nodeless(seed.u0, lo, hi);
    const FnJet u0 = seed.u0;
    return [u0](double x) {
        const JetD u = u0(x);
        const double a = u.d1 / u.v;
        const double da = u.d2 / u.v - a * a;
        auto aval = [u0](double t) {
            const JetD w = u0(t);
            return w.d1 / w.v;
        };
        return JetD{a, da, fd_derivative2(aval, x)};
    };
}

DarbouxPair darboux_partner(const Potential& V0, const SeedSolution& seed,
                            double lo, double hi) {
    require_nodeless(seed.u0, lo, hi);
    // Validate the seed against its own equation before trusting it.
    const UniformGrid coarse{lo, hi, 41};
    for (int i = 0; i < coarse.n; ++i) {
        const double x = coarse.x(i);
        const JetD u = seed.u0(x);
        const double res = -u.d2 + (V0(x) - seed.epsilon) * u.v;
        if (std::abs(res) > 1e-8 * (1.0 + std::abs(u.v)))
            throw std::invalid_argument(
                "seed does not solve -u'' + V0 u = eps u to 1e-8");
    }

    const FnJet u0 = seed.u0;
    const double eps = seed.epsilon;
    const Potential pot = V0;

    // With -u0'' + V0 u0 = ε u0, derivatives of α close on themselves:
    //   α'  = u0''/u0 - α²  = (V0 - ε) - α²
    //   α'' = V0' - 2 α α'
    FnJet alpha = [u0, eps, pot](double x) {
        const JetD u = u0(x);
        const double a = u.d1 / u.v;
        const double da = u.d2 / u.v - a * a;
        const JetD V = pot.jet(x);
        return JetD{a, da, V.d1 - 2.0 * a * da};
    };
    // V1 = V0 - 2α'; one more derivative of the recursion above gives
    // α''' = V0'' - 2α'² - 2αα''.
    FnJet V1 = [alpha, pot](double x) {
        const JetD a = alpha(x);
        const JetD V = pot.jet(x);
        const double a3 = V.d2 - 2.0 * a.d1 * a.d1 - 2.0 * a.v * a.d2;
        return JetD{V.v - 2.0 * a.d1, V.d1 - 2.0 * a.d2, V.d2 - 2.0 * a3};
    };
    return DarbouxPair{V0, seed.epsilon, std::move(alpha), std::move(V1)};
}

FnJet apply_intertwiner(Intertwine dir, const FnJet& alpha1, const FnJet& psi) {
    const double s = (dir == Intertwine::Raise) ? -1.0 : 1.0;
    auto val1 = [alpha1, psi, s](double x) {
        const JetD a = alpha1(x);
        const JetD p = psi(x);
        return s * p.d2 + a.d1 * p.v + a.v * p.d1;
    };
    return [alpha1, psi, s, val1](double x) {
        const JetD a = alpha1(x);
        const JetD p = psi(x);
        return JetD{s * p.d1 + a.v * p.v, val1(x), fd_derivative1(val1, x)};
    };
}

FnJet missing_state(const SeedSolution& seed) {
    const FnJet u0 = seed.u0;
    return [u0](double x) { return JetD(1.0) / u0(x); };
}

bool is_normalizable(const FnJet& psi, double lo, double hi) {
    auto decays = [&](double outer, double inner) {
        const double po = std::abs(psi(outer).v);
        const double pi = std::abs(psi(inner).v);
        return po < 0.95 * pi;
    };
    return decays(hi, 0.8 * hi) && decays(lo, 0.8 * lo);
}

double intertwining_residual(const DarbouxPair& pair, const FnJet& psi,
                             double lambda, const UniformGrid& grid) {
    // Precondition: psi solves H0 psi = lambda psi.
    for (double x : {grid.xmin, 0.5 * (grid.xmin + grid.xmax), grid.xmax}) {
        const JetD p = psi(x);
        if (std::abs(-p.d2 + (pair.V0(x) - lambda) * p.v) >
            1e-6 * (1.0 + std::abs(p.v)))
            throw std::invalid_argument(
                "intertwining_residual: psi does not solve H0 psi = lambda psi");
    }
    const FnJet q = apply_intertwiner(Intertwine::Raise, pair.alpha1, psi);
    auto qval = [q](double x) { return q(x).v; };
    const FnJet alpha = pair.alpha1;
    const FnJet V1 = pair.V1;
    const Potential V0 = pair.V0;
    auto h0psi = [psi, V0](double x) {
        const JetD p = psi(x);
        return -p.d2 + V0(x) * p.v;
    };
    auto residual = [&](double x) {
        const double h1q = -fd_derivative2(qval, x) + V1(x).v * qval(x);
        const double aplus_h0 = -fd_derivative1(h0psi, x) + alpha(x).v * h0psi(x);
        return h1q - aplus_h0;
    };
    return max_abs_on_grid(grid, residual);
}

}  // namespace forge
