#include "forge/assemble.hpp"
#include "forge/ermakov.hpp"
#include "forge/io.hpp"
#include "forge/nlse.hpp"
#include "forge/schrodinger.hpp"
#include "forge/specialfn.hpp"
#include "forge/susy.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace {

using forge::CaseId;
using forge::PinneyCoefficients;
using forge::SolutionChoice;
using forge::SolutionKind;
using forge::UniformGrid;
using nlohmann::json;

constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
    std::string case_tag = "1";
    double k0 = 0.5;
    double k1 = 0.4;
    double alpha = 2.0;
    double beta = 1.0;
    double gamma = 3.0;
    std::optional<double> g0;  // defaulted per solution family when unset
    int mode_n = 1;
    std::string solution;  // "sd" | "kink"; defaulted per case when empty
    double xmin = -10.0;
    double xmax = 10.0;
    int npoints = 2001;
    std::string out;
    std::map<std::string, double> tol_overrides;
    bool propagate = false;

    CaseId case_id() const { return CaseId::parse(case_tag, k0, k1); }

    std::string solution_or_default() const {
        if (!solution.empty()) return solution;
        return case_tag == "2c" ? "kink" : "sd";
    }
    SolutionChoice choice() const {
        const std::string s = solution_or_default();
        if (s == "sd") return {SolutionKind::SdSoliton, mode_n};
        if (s == "kink") return {SolutionKind::DarkKink, mode_n};
        throw std::invalid_argument("unknown solution '" + s + "' (use sd or kink)");
    }
    double g0_or_default() const {
        if (g0) return *g0;
        return solution_or_default() == "kink" ? 1.0 : -1.0;
    }
    PinneyCoefficients coeffs() const { return {alpha, beta, gamma, g0_or_default()}; }
    UniformGrid grid() const { return {xmin, xmax, npoints}; }

    // Grid and coefficient checks (usage errors).
    void validate_common() const {
        if (npoints < 3 || npoints % 2 == 0)
            throw std::invalid_argument("npoints must be >= 3 and odd");
        if (!(xmin < xmax)) throw std::invalid_argument("xmin must be < xmax");
        if (!(k0 > 0.0)) throw std::invalid_argument("k0 must be > 0");
        if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be > 0");
        if (!(alpha * gamma - beta * beta > 0.0))
            throw std::invalid_argument("need alpha*gamma - beta^2 > 0");
    }
    void validate() const {
        validate_common();
        case_id();
        choice();
    }
};

// Flags beat the config file; config beats built-in defaults.
void apply_config_file(const CLI::App& cmd, const std::string& path, RunConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read config file: " + path);
    json j;
    in >> j;
    auto take = [&](const char* flag, const char* key, auto& slot) {
        if (j.contains(key) && cmd.count(flag) == 0) slot = j.at(key).get<std::decay_t<decltype(slot)>>();
    };
    take("--case", "case", cfg.case_tag);
    take("--k0", "k0", cfg.k0);
    take("--k1", "k1", cfg.k1);
    take("--alpha", "alpha", cfg.alpha);
    take("--beta", "beta", cfg.beta);
    take("--gamma", "gamma", cfg.gamma);
    take("--mode", "mode", cfg.mode_n);
    take("--solution", "solution", cfg.solution);
    take("--xmin", "xmin", cfg.xmin);
    take("--xmax", "xmax", cfg.xmax);
    take("--npoints", "npoints", cfg.npoints);
    take("--out", "out", cfg.out);
    if (j.contains("g0") && cmd.count("--g0") == 0) cfg.g0 = j.at("g0").get<double>();
}

void add_common_flags(CLI::App* cmd, RunConfig& cfg, std::string& config_path,
                      std::vector<std::string>& tol_args) {
    cmd->add_option("--case", cfg.case_tag, "case tag: 1, 2a, 2b or 2c");
    cmd->add_option("--k0", cfg.k0, "Poeschl-Teller scale k0 > 0");
    cmd->add_option("--k1", cfg.k1, "second wavenumber (cases 2b, 2c)");
    cmd->add_option("--alpha", cfg.alpha, "Pinney quadratic-form coefficient alpha");
    cmd->add_option("--beta", cfg.beta, "Pinney quadratic-form coefficient beta");
    cmd->add_option("--gamma", cfg.gamma, "Pinney quadratic-form coefficient gamma");
    cmd->add_option("--g0", [&cfg](const std::vector<std::string>& v) {
        cfg.g0 = std::stod(v.front());
        return true;
    }, "nonlinearity scale g0 (default: -1 for sd, +1 for kink)");
    cmd->add_option("--mode", cfg.mode_n, "sd-soliton mode index n >= 1");
    cmd->add_option("--solution", cfg.solution, "solution family: sd or kink");
    cmd->add_option("--xmin", cfg.xmin, "grid start");
    cmd->add_option("--xmax", cfg.xmax, "grid end");
    cmd->add_option("--npoints", cfg.npoints, "grid points (odd, >= 3)");
    cmd->add_option("--out", cfg.out, "output file path");
    cmd->add_option("--config", config_path, "JSON config file (flags override it)");
    cmd->add_option("--tol", tol_args, "tolerance override name=value (repeatable)");
}

void parse_tols(const std::vector<std::string>& tol_args, RunConfig& cfg) {
    for (const std::string& t : tol_args) {
        const size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("--tol expects name=value, got '" + t + "'");
        cfg.tol_overrides[t.substr(0, eq)] = std::stod(t.substr(eq + 1));
    }
}

json profile_sidecar(const forge::SolitonProfile& p, const RunConfig& cfg) {
    json j;
    j["case"] = p.case_id.name();
    j["lambda"] = p.lambda;
    j["k0"] = p.case_id.k0;
    if (p.case_id.tag == CaseId::Tag::Case2b || p.case_id.tag == CaseId::Tag::Case2c)
        j["k1"] = p.case_id.k1;
    j["alpha"] = p.coeffs.alpha;
    j["beta"] = p.coeffs.beta;
    j["gamma"] = p.coeffs.gamma;
    j["g0"] = p.coeffs.g0;
    j["E"] = p.E;
    j["Gamma"] = p.Gamma;
    j["Lambda"] = p.Lambda;
    j["xi1"] = std::isinf(p.xi1) ? json("inf") : json(p.xi1);
    if (p.choice.kind == SolutionKind::SdSoliton) {
        j["solution"] = "sd";
        j["k_modulus"] = p.k_modulus;
        j["mu"] = p.mu;
        j["eta"] = p.eta;
        j["mode_n"] = p.choice.mode_n;
    } else {
        j["solution"] = "kink";
        j["kink_amplitude"] = p.kink_amplitude;
        j["kink_width"] = p.kink_width;
    }
    j["X_center"] = p.X_center;
    j["xmin"] = cfg.xmin;
    j["xmax"] = cfg.xmax;
    j["npoints"] = cfg.npoints;
    j["residual_inlse"] = p.diagnostics.inlse_residual;
    j["boundary_decay"] = p.diagnostics.boundary_decay;
    j["wronskian_spread"] = p.diagnostics.wronskian_spread;
    j["warnings"] = p.warnings;
    return j;
}

int cmd_partner(const RunConfig& cfg) {
    const double k0 = cfg.k0;
    const forge::Potential V0 = forge::Potential::free_particle();
    forge::SeedSolution seed{
        [k0](double x) { return cosh(forge::JetD::variable(x) * k0); }, -k0 * k0};
    const forge::DarbouxPair dp =
        forge::darboux_partner(V0, seed, cfg.xmin - 1.0, cfg.xmax + 1.0);
    const UniformGrid grid = cfg.grid();
    const auto x = forge::map_grid(grid, [](double t) { return t; });
    const auto v0 = forge::map_grid(grid, [&](double t) { return V0(t); });
    const auto v1 = forge::map_grid(grid, [&](double t) { return dp.V1(t).v; });
    const auto a1 = forge::map_grid(grid, [&](double t) { return dp.alpha1(t).v; });
    const std::string out = cfg.out.empty() ? "partner.csv" : cfg.out;
    forge::write_csv(out, {{"x", &x}, {"V0", &v0}, {"V1", &v1}, {"alpha1", &a1}});
    std::cout << "wrote " << out << "\n";
    return 0;
}

int cmd_soliton(const RunConfig& cfg) {
    const forge::SolitonProfile p =
        forge::build_profile(cfg.case_id(), cfg.coeffs(), cfg.choice(), cfg.grid());
    const std::string out = cfg.out.empty() ? "soliton.csv" : cfg.out;
    forge::write_csv(out, {{"x", &p.x}, {"V", &p.V}, {"g", &p.g},
                           {"phi", &p.phi}, {"X", &p.X}});
    forge::write_json(forge::sidecar_path(out), profile_sidecar(p, cfg));
    std::cout << "wrote " << out << " and " << forge::sidecar_path(out) << "\n";
    return 0;
}

struct VerifyRow {
    std::string name;
    double value;
    double tol;   // <= 0 means informational only
    bool pass;
};

int cmd_verify(const RunConfig& cfg) {
    auto tol = [&](const std::string& name, double dflt) {
        auto it = cfg.tol_overrides.find(name);
        return it == cfg.tol_overrides.end() ? dflt : it->second;
    };
    std::vector<VerifyRow> rows;
    auto check = [&](const std::string& name, double value, double t) {
        rows.push_back({name, value, t, value < t});
    };
    auto info = [&](const std::string& name, double value) {
        rows.push_back({name, value, 0.0, true});
    };

    const CaseId c = cfg.case_id();
    const UniformGrid grid = cfg.grid();
    const double k0 = c.k0;

    // Partner potential against the closed form.
    forge::SeedSolution seed{
        [k0](double x) { return cosh(forge::JetD::variable(x) * k0); }, -k0 * k0};
    const forge::DarbouxPair dp = forge::darboux_partner(
        forge::Potential::free_particle(), seed, grid.xmin - 1.0, grid.xmax + 1.0);
    const forge::Potential pt = forge::Potential::poeschl_teller(k0);
    check("partner_exact",
          forge::max_abs_on_grid(grid, [&](double x) { return dp.V1(x).v - pt(x); }),
          tol("partner_exact", 1e-12));

    // Closed-form pair against its own equation and Wronskian.
    const forge::SolutionPair pair = forge::closed_pair(c);
    auto resid = [&](const forge::FnJetL& f) {
        return forge::max_abs_on_grid(grid, [&](double x) {
            const forge::JetL j = f(static_cast<long double>(x));
            return static_cast<double>(-j.d2) + (pt(x) - pair.lambda) *
                   static_cast<double>(j.v);
        });
    };
    check("schrodinger_phi1", resid(pair.phi1), tol("schrodinger_phi1", 1e-8));
    check("schrodinger_phi2", resid(pair.phi2), tol("schrodinger_phi2", 1e-8));
    double wmin = INFINITY, wmax = -INFINITY;
    for (int i = 0; i < grid.n; ++i) {
        const double w = forge::wronskian_at(pair, grid.x(i));
        wmin = std::min(wmin, w);
        wmax = std::max(wmax, w);
    }
    check("wronskian_spread", (wmax - wmin) / std::abs(pair.wronskian),
          tol("wronskian_spread", 1e-9));
    check("wronskian_value",
          std::max(std::abs(wmax - pair.wronskian), std::abs(wmin - pair.wronskian)),
          tol("wronskian_value", 1e-12));

    // Reduction, Pinney equation, canonical map.
    const forge::PinneyReduction red = forge::build_reduction(
        pair, cfg.coeffs(), dp.V1, [pt](long double x) { return pt.value(x); },
        pair.lambda);
    check("pinney", forge::pinney_residual(red, grid), tol("pinney", 1e-7));
    check("energy_formula", forge::max_abs_on_grid(grid, [&](double x) {
              return static_cast<double>(forge::pinney_energy_formula(red, x) -
                                         static_cast<long double>(red.E));
          }),
          tol("energy_formula", 1e-7));
    const forge::CanonicalMap cmap = forge::canonical_map(
        red, std::min(grid.xmin, -16.0) - 1.0, std::max(grid.xmax, 16.0) + 1.0);
    check("fprime_b", forge::max_abs_on_grid(grid, [&](double x) {
              return cmap.fprime(x) * red.b(x) - 1.0;
          }),
          tol("fprime_b", 1e-8));
    double quad_err = 0.0;
    const int nq = 17;
    for (int i = 0; i < nq; ++i) {
        const double x = grid.xmin + (grid.xmax - grid.xmin) * i / (nq - 1);
        const double closed = cmap.value(x) - cmap.value(grid.xmin);
        const double quad = forge::f_by_quadrature(red, grid.xmin, x);
        quad_err = std::max(quad_err, std::abs(closed - quad));
    }
    check("f_quadrature", quad_err, tol("f_quadrature", 1e-8));

    // End-to-end profile.
    const forge::SolitonProfile p =
        forge::build_profile(c, cfg.coeffs(), cfg.choice(), grid);
    check("inlse", p.diagnostics.inlse_residual, tol("inlse", 1e-5));
    info("boundary_decay", p.diagnostics.boundary_decay);
    for (const std::string& w : p.warnings) std::cout << "note: " << w << "\n";

    if (cfg.propagate) {
        const int n_prop = 2048;
        const forge::UniformGrid pg = forge::fft_grid(32.0, n_prop);
        const forge::SolitonProfile pp =
            forge::build_profile(c, cfg.coeffs(), cfg.choice(), pg);
        check("stationarity_drift", forge::propagate_and_check(pp, 1.0, 1e-3),
              tol("stationarity_drift", 1e-3));
    }

    bool all_pass = true;
    std::printf("%-20s %14s %12s  %s\n", "check", "value", "tolerance", "status");
    for (const VerifyRow& r : rows) {
        if (r.tol > 0.0) {
            std::printf("%-20s %14.3e %12.1e  %s\n", r.name.c_str(), r.value, r.tol,
                        r.pass ? "pass" : "FAIL");
            all_pass = all_pass && r.pass;
        } else {
            std::printf("%-20s %14.3e %12s  %s\n", r.name.c_str(), r.value, "-", "info");
        }
    }
    return all_pass ? 0 : kExitVerifyFail;
}

int cmd_figure(const std::string& id, std::string out_path) {
    static const std::map<std::string, std::string> kCaseOf = {
        {"1a", "1"}, {"1b", "1"}, {"2a", "2a"}, {"2b", "2a"},
        {"3a", "2b"}, {"3b", "2b"}, {"4a", "2c"}, {"4b", "2c"}};
    const auto it = kCaseOf.find(id);
    if (it == kCaseOf.end()) {
        std::cerr << "unknown figure id '" << id
                  << "' (use 1a, 1b, 2a, 2b, 3a, 3b, 4a, 4b)\n";
        return kExitUsage;
    }
    const bool profile_panel = id.back() == 'b';
    const bool kink_panel = id == "4b";

    RunConfig cfg;
    cfg.case_tag = it->second;
    cfg.k0 = 0.5;
    cfg.k1 = 0.4;
    cfg.alpha = 2.0;
    cfg.beta = 1.0;
    cfg.gamma = 3.0;
    cfg.mode_n = 1;
    cfg.solution = kink_panel ? "kink" : "sd";
    std::vector<std::string> warnings;
    if (profile_panel && !kink_panel) {
        cfg.g0 = -1.0;  // caption says g0 = 1, unrealizable for the sd family
        warnings.push_back("realizability: eta^2>0 requires g0<0");
    } else {
        cfg.g0 = 1.0;
    }
    if (out_path.empty()) out_path = "figure_" + id + ".csv";

    json meta;
    meta["figure"] = id;
    meta["case"] = cfg.case_tag;
    meta["k0"] = cfg.k0;
    meta["k1"] = cfg.k1;
    meta["alpha"] = cfg.alpha;
    meta["beta"] = cfg.beta;
    meta["gamma"] = cfg.gamma;
    meta["g0"] = *cfg.g0;
    meta["xmin"] = cfg.xmin;
    meta["xmax"] = cfg.xmax;
    meta["npoints"] = cfg.npoints;

    if (profile_panel) {
        const forge::SolitonProfile p = forge::build_profile(
            cfg.case_id(), cfg.coeffs(), cfg.choice(), cfg.grid());
        forge::write_csv(out_path, {{"x", &p.x}, {"phi", &p.phi}});
        json side = profile_sidecar(p, cfg);
        side["figure"] = id;
        for (const std::string& w : warnings) side["warnings"].push_back(w);
        forge::write_json(forge::sidecar_path(out_path), side);
    } else {
        const forge::SolutionPair pair = forge::closed_pair(cfg.case_id());
        const forge::Potential pt = forge::Potential::poeschl_teller(cfg.k0);
        const forge::PinneyReduction red = forge::build_reduction(
            pair, cfg.coeffs(), [pt](double x) { return pt.jet(x); },
            [pt](long double x) { return pt.value(x); }, pair.lambda);
        const UniformGrid grid = cfg.grid();
        const auto x = forge::map_grid(grid, [](double t) { return t; });
        const auto g = forge::map_grid(grid, [&](double t) { return red.g(t); });
        forge::write_csv(out_path, {{"x", &x}, {"g", &g}});
        meta["E"] = red.E;
        meta["Lambda"] = pair.wronskian;
        meta["warnings"] = warnings;
        forge::write_json(forge::sidecar_path(out_path), meta);
    }
    std::cout << "wrote " << out_path << " and " << forge::sidecar_path(out_path)
              << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stationary solutions of the inhomogeneous NLSE via "
                 "supersymmetric partner potentials"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string config_path;
    std::vector<std::string> tol_args;
    std::string figure_id;
    std::string figure_out;

    CLI::App* partner = app.add_subcommand("partner", "emit x,V0,V1,alpha1 dataset");
    add_common_flags(partner, cfg, config_path, tol_args);
    CLI::App* soliton = app.add_subcommand("soliton", "emit x,V,g,phi,X dataset + sidecar");
    add_common_flags(soliton, cfg, config_path, tol_args);
    CLI::App* verify = app.add_subcommand("verify", "run the residual contracts");
    add_common_flags(verify, cfg, config_path, tol_args);
    verify->add_flag("--propagate", cfg.propagate,
                     "include the split-step stationarity check");
    CLI::App* figure = app.add_subcommand("figure", "emit a figure panel dataset");
    figure->add_option("id", figure_id, "panel id: 1a..4b")->required();
    figure->add_option("--out", figure_out, "output file path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        CLI::App* sub = app.get_subcommands().front();
        if (sub == figure) return cmd_figure(figure_id, figure_out);
        if (!config_path.empty()) apply_config_file(*sub, config_path, cfg);
        parse_tols(tol_args, cfg);
        if (sub == verify) {
            // Grid/coefficient problems are usage errors, but anything the
            // checks themselves reject (a degenerate pair, an unrealizable
            // regime) is a verification failure.
            cfg.validate_common();
            try {
                return cmd_verify(cfg);
            } catch (const std::exception& e) {
                std::cerr << "verification failure: " << e.what() << "\n";
                return kExitVerifyFail;
            }
        }
        cfg.validate();
        if (sub == partner) return cmd_partner(cfg);
        if (sub == soliton) return cmd_soliton(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
