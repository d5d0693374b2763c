#include "forge/schrodinger.hpp"

#include "forge/fd.hpp"
#include "forge/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace forge {

Potential Potential::poeschl_teller(double k0) {
    if (!(k0 > 0.0)) throw std::invalid_argument("PoeschlTeller requires k0 > 0");
    return {Kind::PoeschlTeller, k0};
}

void CaseId::validate() const {
    if (!(k0 > 0.0)) throw std::invalid_argument("case requires k0 > 0");
    if (tag == Tag::Case2b || tag == Tag::Case2c) {
        if (!(k1 > 0.0)) throw std::invalid_argument("case requires k1 > 0");
        if (tag == Tag::Case2b && k1 == k0)
            throw std::invalid_argument("degenerate pair: Lambda = 0 (k1 == k0)");
    }
}

double CaseId::lambda1() const {
    switch (tag) {
        case Tag::Case1: return -k0 * k0;
        case Tag::Case2a: return 0.0;
        case Tag::Case2b: return -k1 * k1;
        case Tag::Case2c: return k1 * k1;
    }
    return 0.0;
}

std::string CaseId::name() const {
    switch (tag) {
        case Tag::Case1: return "1";
        case Tag::Case2a: return "2a";
        case Tag::Case2b: return "2b";
        case Tag::Case2c: return "2c";
    }
    return "?";
}

CaseId CaseId::parse(const std::string& text, double k0, double k1) {
    CaseId c;
    c.k0 = k0;
    c.k1 = k1;
    if (text == "1") c.tag = Tag::Case1;
    else if (text == "2a") c.tag = Tag::Case2a;
    else if (text == "2b") c.tag = Tag::Case2b;
    else if (text == "2c") c.tag = Tag::Case2c;
    else throw std::invalid_argument("unknown case tag '" + text + "' (use 1, 2a, 2b, 2c)");
    c.validate();
    return c;
}

namespace {

using L = long double;

// Case 1, λ1 = -k0²:  φ1 = sech(k0 x),
//                     φ2 = sech(k0 x) [x/2 + sinh(2 k0 x)/(4 k0)].
JetL case1_phi1(L x, L k0) { return sech(JetL::variable(x) * k0); }
JetL case1_phi2(L x, L k0) {
    const JetL X = JetL::variable(x);
    const JetL bracket = X / L(2) + sinh(X * (L(2) * k0)) / (L(4) * k0);
    return sech(X * k0) * bracket;
}

// Case 2a, λ1 = 0:  φ1 = k0 tanh(k0 x),  φ2 = -1 + k0 x tanh(k0 x).
JetL case2a_phi1(L x, L k0) { return k0 * tanh(JetL::variable(x) * k0); }
JetL case2a_phi2(L x, L k0) {
    const JetL X = JetL::variable(x);
    return L(-1) + k0 * X * tanh(X * k0);
}

// Case 2b, λ1 = -k1²:  φ1 = -k1 cosh(k1 x) + k0 tanh(k0 x) sinh(k1 x),
//                      φ2 = -k1 sinh(k1 x) + k0 tanh(k0 x) cosh(k1 x).
JetL case2b_phi1(L x, L k0, L k1) {
    const JetL X = JetL::variable(x);
    return -k1 * cosh(X * k1) + k0 * tanh(X * k0) * sinh(X * k1);
}
JetL case2b_phi2(L x, L k0, L k1) {
    const JetL X = JetL::variable(x);
    return -k1 * sinh(X * k1) + k0 * tanh(X * k0) * cosh(X * k1);
}

// Case 2c, λ1 = +k1²:  φ1 = k1 sin(k1 x) + k0 tanh(k0 x) cos(k1 x),
//                      φ2 = -k1 cos(k1 x) + k0 tanh(k0 x) sin(k1 x).
JetL case2c_phi1(L x, L k0, L k1) {
    const JetL X = JetL::variable(x);
    return k1 * sin(X * k1) + k0 * tanh(X * k0) * cos(X * k1);
}
JetL case2c_phi2(L x, L k0, L k1) {
    const JetL X = JetL::variable(x);
    return -k1 * cos(X * k1) + k0 * tanh(X * k0) * sin(X * k1);
}

}  // namespace

SolutionPair closed_pair(const CaseId& c) {
    c.validate();
    const L k0 = c.k0, k1 = c.k1;
    const double inf = std::numeric_limits<double>::infinity();
    SolutionPair p;
    p.lambda = c.lambda1();
    switch (c.tag) {
        case CaseId::Tag::Case1:
            p.phi1 = [k0](L x) { return case1_phi1(x, k0); };
            p.phi2 = [k0](L x) { return case1_phi2(x, k0); };
            p.wronskian = 1.0;
            p.u_limit_minus = -inf;
            p.u_limit_plus = inf;
            break;
        case CaseId::Tag::Case2a:
            p.phi1 = [k0](L x) { return case2a_phi1(x, k0); };
            p.phi2 = [k0](L x) { return case2a_phi2(x, k0); };
            p.wronskian = c.k0 * c.k0;
            p.u_limit_minus = -inf;
            p.u_limit_plus = inf;
            break;
        case CaseId::Tag::Case2b:
            p.phi1 = [k0, k1](L x) { return case2b_phi1(x, k0, k1); };
            p.phi2 = [k0, k1](L x) { return case2b_phi2(x, k0, k1); };
            p.wronskian = c.k1 * (c.k1 * c.k1 - c.k0 * c.k0);
            p.u_limit_minus = -1.0;
            p.u_limit_plus = 1.0;
            break;
        case CaseId::Tag::Case2c:
            p.phi1 = [k0, k1](L x) { return case2c_phi1(x, k0, k1); };
            p.phi2 = [k0, k1](L x) { return case2c_phi2(x, k0, k1); };
            p.wronskian = c.k1 * (c.k1 * c.k1 + c.k0 * c.k0);
            break;
    }
    return p;
}

std::vector<SeedCandidate> free_particle_seeds(Lambda0Class cls, double k0) {
    if (!(k0 > 0.0)) throw std::invalid_argument("seeds require k0 > 0");
    std::vector<SeedCandidate> out;
    switch (cls) {
        case Lambda0Class::Zero:
            out.push_back({[](double) { return JetD(1.0); }, "one", true, 0.0});
            out.push_back({[](double x) { return JetD::variable(x); }, "x", false, 0.0});
            break;
        case Lambda0Class::NegativeKsq:
            out.push_back({[k0](double x) { return sinh(JetD::variable(x) * k0); },
                           "sinh", false, -k0 * k0});
            out.push_back({[k0](double x) { return cosh(JetD::variable(x) * k0); },
                           "cosh", true, -k0 * k0});
            break;
        case Lambda0Class::PositiveKsq:
            out.push_back({[k0](double x) { return sin(JetD::variable(x) * k0); },
                           "sin", false, k0 * k0});
            out.push_back({[k0](double x) { return cos(JetD::variable(x) * k0); },
                           "cos", false, k0 * k0});
            break;
    }
    return out;
}

std::vector<double> find_nodes(const std::function<double(double)>& f, double lo,
                               double hi, int scan_points) {
    std::vector<double> nodes;
    if (!(lo < hi)) return nodes;
    const double step = (hi - lo) / static_cast<double>(scan_points - 1);
    double xa = lo, fa = f(xa);
    for (int i = 1; i < scan_points; ++i) {
        const double xb = lo + step * i;
        const double fb = f(xb);
        if (fa == 0.0) {
            nodes.push_back(xa);
        } else if (fa * fb < 0.0) {
            double a = xa, b = xb, va = fa;
            for (int it = 0; it < 100; ++it) {
                const double m = 0.5 * (a + b);
                const double vm = f(m);
                if (vm == 0.0) { a = b = m; break; }
                if (va * vm < 0.0) b = m;
                else { a = m; va = vm; }
                if (b - a <= 4.0 * std::numeric_limits<double>::epsilon() *
                                 (std::abs(a) + 1.0)) break;
            }
            nodes.push_back(0.5 * (a + b));
        }
        xa = xb;
        fa = fb;
    }
    if (fa == 0.0) nodes.push_back(xa);
    return nodes;
}

namespace {

// One smooth branch of the variation-of-parameters integral. The regular
// part of ∫ ds/φ1² relative to a node x0 (with φ1 ≈ p·(s - x0) there) is
// integrated with the pole subtracted off in a cancellation-free form.
// Within t_c of the node the subtracted form drowns in the rounding of
// φ1 itself (the error of v - p t divided by t³ diverges), so the last
// stretch is closed with the series limit -φ1'''(x0)/(3 p³) instead.
double regularized_tail(const FnJet& phi1, double a, double x0, double p) {
    auto integrand = [&](double s) {
        const double t = s - x0;
        const double v = phi1(s).v;
        // 1/v² - 1/(p t)² without forming the two large reciprocals.
        return -(v - p * t) * (v + p * t) / (v * v * p * p * t * t);
    };
    const double tc = std::min(1e-3, 0.5 * std::abs(x0 - a));
    const double stop = x0 - std::copysign(tc, x0 - a);
    auto d2 = [&](double s) { return phi1(s).d2; };
    const double third = fd_derivative1(d2, x0);
    return integrate(integrand, a, stop) - third / (3.0 * p * p * p) * (x0 - stop);
}

}  // namespace

FnJet second_solution(const FnJet& phi1, double x_anchor, double scan_lo,
                      double scan_hi) {
    if (!(scan_lo < scan_hi)) throw std::invalid_argument("bad scan interval");

    auto value = [phi1](double x) { return phi1(x).v; };
    const std::vector<double> nodes = find_nodes(value, scan_lo, scan_hi);
    for (double n : nodes)
        if (std::abs(n - x_anchor) < 1e-9)
            throw std::invalid_argument("second_solution anchor sits on a node of phi1");
    if (phi1(x_anchor).v == 0.0)
        throw std::invalid_argument("second_solution anchor sits on a node of phi1");
    // Guard against an identically-zero stretch masquerading as many nodes.
    if (nodes.size() > 64)
        throw std::invalid_argument("phi1 vanishes on an interval; no second solution");

    // Branch boundaries and one quadrature anchor per branch. The anchor
    // branch gets constant 0 (φ2 = 0 there); the constants of the neighbours
    // are fixed by matching the derivative of the smooth continuation at each
    // node, walking outward from the anchor branch.
    const size_t nb = nodes.size() + 1;
    auto branch_of = [&](double x) {
        return static_cast<size_t>(
            std::upper_bound(nodes.begin(), nodes.end(), x) - nodes.begin());
    };
    std::vector<double> anchors(nb);
    for (size_t j = 0; j < nb; ++j) {
        const double lo = (j == 0) ? scan_lo : nodes[j - 1];
        const double hi = (j == nodes.size()) ? scan_hi : nodes[j];
        anchors[j] = 0.5 * (lo + hi);
    }
    const size_t j0 = branch_of(x_anchor);
    anchors[j0] = x_anchor;

    std::vector<double> consts(nb, 0.0);
    auto inv_sq = [phi1](double s) {
        const double v = phi1(s).v;
        return 1.0 / (v * v);
    };
    // Derivative of the continued solution at node x0 approached from branch
    // j: m = p (c_j + R_j + 1/(p² (a_j - x0))).
    auto slope_at_node = [&](size_t j, double x0) {
        const JetD ph = phi1(x0);
        const double p = ph.d1;
        if (p == 0.0 || std::abs(ph.d2) > 1e-6 * std::abs(p))
            throw std::domain_error(
                "second_solution: node of phi1 is not a simple Schrodinger-type zero");
        const double reg = regularized_tail(phi1, anchors[j], x0, p);
        return p * (consts[j] + reg + 1.0 / (p * p * (anchors[j] - x0)));
    };
    auto const_from_slope = [&](size_t j, double x0, double m) {
        const double p = phi1(x0).d1;
        const double reg = regularized_tail(phi1, anchors[j], x0, p);
        return m / p - reg - 1.0 / (p * p * (anchors[j] - x0));
    };
    for (size_t j = j0; j + 1 < nb; ++j) {
        const double x0 = nodes[j];
        consts[j + 1] = const_from_slope(j + 1, x0, slope_at_node(j, x0));
    }
    for (size_t j = j0; j > 0; --j) {
        const double x0 = nodes[j - 1];
        consts[j - 1] = const_from_slope(j - 1, x0, slope_at_node(j, x0));
    }

    return [phi1, inv_sq, anchors, consts, nodes](double x) {
        const size_t j = static_cast<size_t>(
            std::upper_bound(nodes.begin(), nodes.end(), x) - nodes.begin());
        const double I = consts[j] + integrate(inv_sq, anchors[j], x);
        const JetD f = phi1(x);
        // φ2 = φ1 (c + I); the first-derivative cross terms give exactly
        // 1/φ1, and the second-derivative ones cancel.
        return JetD{f.v * I, f.d1 * I + 1.0 / f.v, f.d2 * I};
    };
}

std::vector<double> integrate_schrodinger(const Potential& V, double lambda,
                                          double x0, double y0, double dy0,
                                          const UniformGrid& grid) {
    grid.validate();
    const double h = grid.h();
    if (h > 0.01 + 1e-12)
        throw std::invalid_argument("integrator requires grid step h <= 0.01");
    const double idx = (x0 - grid.xmin) / h;
    const int i0 = static_cast<int>(std::lround(idx));
    if (i0 < 0 || i0 >= grid.n || std::abs(idx - i0) > 1e-9)
        throw std::invalid_argument("x0 must coincide with a grid point");

    auto rhs = [&](double x, double y, double z, double& dy, double& dz) {
        dy = z;
        dz = (V(x) - lambda) * y;
    };
    auto rk4_step = [&](double x, double& y, double& z, double step) {
        double k1y, k1z, k2y, k2z, k3y, k3z, k4y, k4z;
        rhs(x, y, z, k1y, k1z);
        rhs(x + 0.5 * step, y + 0.5 * step * k1y, z + 0.5 * step * k1z, k2y, k2z);
        rhs(x + 0.5 * step, y + 0.5 * step * k2y, z + 0.5 * step * k2z, k3y, k3z);
        rhs(x + step, y + step * k3y, z + step * k3z, k4y, k4z);
        y += step / 6.0 * (k1y + 2 * k2y + 2 * k3y + k4y);
        z += step / 6.0 * (k1z + 2 * k2z + 2 * k3z + k4z);
    };

    std::vector<double> out(static_cast<size_t>(grid.n));
    out[static_cast<size_t>(i0)] = y0;
    double y = y0, z = dy0;
    for (int i = i0; i + 1 < grid.n; ++i) {
        rk4_step(grid.x(i), y, z, h);
        out[static_cast<size_t>(i + 1)] = y;
    }
    y = y0;
    z = dy0;
    for (int i = i0; i > 0; --i) {
        rk4_step(grid.x(i), y, z, -h);
        out[static_cast<size_t>(i - 1)] = y;
    }
    return out;
}

double wronskian_at(const SolutionPair& pair, double x) {
    const JetL a = pair.phi1(static_cast<long double>(x));
    const JetL b = pair.phi2(static_cast<long double>(x));
    return static_cast<double>(a.v * b.d1 - b.v * a.d1);
}

}  // namespace forge
