#pragma once

// steady, emp and sweep subcommands: configuration in, table out.

#include "sqhe/cli/config.hpp"
#include "sqhe/cli/table.hpp"
#include "sqhe/dynamics.hpp"
#include "sqhe/emp.hpp"
#include "sqhe/fitting.hpp"
#include "sqhe/observables.hpp"
#include "sqhe/parallel.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace sqhe::cli {

inline const std::vector<std::string>& physical_keys() {
    static const std::vector<std::string> k{"E1", "E2", "Eb", "Ea", "g",  "r",  "tau", "Th",
                                            "Tc", "Tl", "x",  "xh", "xc", "ph", "pc"};
    return k;
}

/// Tool version, command name and every physical parameter, plus `extra` keys.
inline void stamp(Table& t, const Config& cfg, const std::string& command,
                  const std::vector<std::string>& extra = {}) {
    t.add_meta("tool", std::string("sqhe ") + kToolVersion);
    t.add_meta("command", command);
    for (const auto& k : physical_keys()) t.add_meta(k, cfg.raw(k));
    for (const auto& k : extra) t.add_meta(k, cfg.raw(k));
}

inline Table cmd_steady(const Config& cfg) {
    const auto params = cfg.engine();
    const auto sq = cfg.squeeze();
    const auto occ = occupations(params, sq);
    const auto L = build_rate_operator(occ, params, sq);

    const double t_final = cfg.number("t_final") > 0.0 ? cfg.number("t_final") : 200.0 / params.r;
    const double dt = cfg.number("dt") > 0.0 ? cfg.number("dt") : default_time_step(occ, params);
    const int stride = cfg.integer("stride");
    if (stride < 1) throw ConfigError("stride must be at least 1");
    if (!(t_final > dt)) throw ConfigError("t_final must exceed dt");

    const auto traj = evolve(EngineState::ground(), L, t_final, dt, static_cast<std::size_t>(stride));
    const auto ss = steady_state(L);

    Table t;
    stamp(t, cfg, "steady", {"stride"});
    t.add_meta("t_final", format_number(t_final));
    t.add_meta("dt", format_number(dt));
    t.add_meta("steady_state",
               format_number(ss.rho11) + " " + format_number(ss.rho22) + " " +
                   format_number(ss.rhoaa) + " " + format_number(ss.rhobb) + " " +
                   format_number(ss.rho12));
    t.add_meta("final_deviation", format_number(max_abs_difference(traj.back().state, ss)));
    t.columns = {"t", "rho11", "rho22", "rhoaa", "rhobb", "rho12", "trace"};
    for (const auto& p : traj) {
        const auto& s = p.state;
        t.add_row({p.t, s.rho11, s.rho22, s.rhoaa, s.rhobb, s.rho12, s.trace()});
    }
    return t;
}

inline std::string format_coefficients(const FitResult& f) {
    std::string s;
    for (std::size_t i = 0; i < f.coefficients.size(); ++i) {
        s += (i ? " " : "") + format_number(f.coefficients[i]);
    }
    return s;
}

inline Table cmd_emp(const Config& cfg, unsigned jobs) {
    const auto params = cfg.engine();
    const auto sq = cfg.squeeze();
    const auto spec = cfg.optimization(params);
    const auto grid = cfg.etaC_grid();
    const auto form = cfg.eta_l_form();
    const auto& fit = cfg.raw("fit");
    if (fit != "none" && fit != "linear" && fit != "quadratic" && fit != "sech") {
        throw ConfigError("fit must be none, linear, quadratic or sech");
    }

    const auto res = emp_sweep(params, sq, spec, grid, jobs, form);

    Table t;
    stamp(t, cfg, "emp",
          {"variable", "grid_points", "refine_tol", "etaC_min", "etaC_max", "etaC_points",
           "eta_l_form"});
    t.add_meta("lower", format_number(spec.lower));
    t.add_meta("upper", format_number(spec.upper));
    t.add_meta("etaC_convention", "Tc = Th (1 - etaC)");
    t.columns = {"etaC",  "Tc",    "argmax",   "Pmax",        "emp",
                 "eta_ca", "eta_upper", "eta_L", "Thm", "boundary_flag", "grid_warning"};
    std::vector<double> es;
    std::vector<double> ys;
    for (std::size_t i = 0; i < res.size(); ++i) {
        const auto& r = res[i];
        t.add_row({grid[i], params.Th * (1.0 - grid[i]), r.argmax, r.Pmax, r.emp, r.eta_ca,
                   r.eta_upper, r.eta_L, r.Thm, r.boundary ? 1.0 : 0.0,
                   r.grid_disagreement ? 1.0 : 0.0});
        es.push_back(grid[i]);
        ys.push_back(r.emp);
    }

    try {
        if (fit == "linear") {
            const auto f = fit_linear(es, ys);
            t.footer.emplace_back("fit_linear m c", format_coefficients(f));
            t.footer.emplace_back("fit_rms", format_number(f.residual_rms));
        } else if (fit == "quadratic") {
            const auto f = fit_quadratic(es, ys);
            t.footer.emplace_back("fit_quadratic c a5 a6", format_coefficients(f));
            t.footer.emplace_back("fit_rms", format_number(f.residual_rms));
        } else if (fit == "sech") {
            const auto f = fit_sech_form(es, ys, sq.x);
            t.footer.emplace_back("fit_sech a1 a2 a3 a4", format_coefficients(f));
            t.footer.emplace_back("fit_rms", format_number(f.residual_rms));
            t.footer.emplace_back("fit_converged", f.converged ? "1" : "0");
        }
    } catch (const DomainError& e) {
        throw ConfigError(std::string("fit: ") + e.what());
    }
    return t;
}

/// Writes a named engine or squeeze parameter.
inline void assign_named(EngineParameters& p, SqueezeSet& s, const std::string& key, double v) {
    if (key == "E1") { p.E1 = v; p.E2 = v; }
    else if (key == "E2") { p.E1 = v; p.E2 = v; }
    else if (key == "Eb") p.Eb = v;
    else if (key == "Ea") p.Ea = v;
    else if (key == "g") p.g = v;
    else if (key == "r") p.r = v;
    else if (key == "tau") p.tau = v;
    else if (key == "Th") p.Th = v;
    else if (key == "Tc") p.Tc = v;
    else if (key == "Tl") p.Tl = v;
    else if (key == "x") s.x = v;
    else if (key == "xh") s.xh = v;
    else if (key == "xc") s.xc = v;
    else if (key == "ph") s.ph = v;
    else if (key == "pc") s.pc = v;
    else throw ConfigError("sweep_var '" + key + "' is not an engine or squeeze parameter");
}

inline Table cmd_sweep(const Config& cfg, unsigned jobs) {
    const auto params = cfg.engine();
    const auto sq = cfg.squeeze();
    const auto& var = cfg.raw("sweep_var");
    const int n = cfg.integer("sweep_points");
    if (n < 1) throw ConfigError("sweep_points must be positive");
    const auto values = linspace(cfg.number("sweep_from"), cfg.number("sweep_to"), n);

    // Validate every point up front so that bad ranges are configuration errors.
    for (double v : values) {
        EngineParameters p = params;
        SqueezeSet s = sq;
        assign_named(p, s, var, v);
        try {
            p.validate();
            s.validate();
        } catch (const DomainError& e) {
            throw ConfigError("sweep point " + format_number(v) + ": " + e.what());
        }
    }

    const auto rows = parallel_map(values.size(), jobs, [&](std::size_t i) {
        EngineParameters p = params;
        SqueezeSet s = sq;
        assign_named(p, s, var, values[i]);
        const auto occ = occupations(p, s);
        const auto ss = steady_state(build_rate_operator(occ, p, s));
        const double j = work_flux(ss, occ, p.g);
        const auto rep = flux_report(p, s);
        const auto w = useful_work(p, occ, j);
        const auto A = affinity(occ);
        return std::vector<double>{values[i], ss.rho11, ss.rho22, ss.rhoaa, ss.rhobb, ss.rho12,
                                   j,         rep.j_o,  rep.j_o0, A.log(),  w.W,      w.Wdiss,
                                   w.eta,     w.P};
    });

    Table t;
    stamp(t, cfg, "sweep", {"sweep_var", "sweep_from", "sweep_to", "sweep_points"});
    t.columns = {var, "rho11", "rho22", "rhoaa", "rhobb", "rho12", "j",
                 "j_o", "j_o0", "affinity", "W", "Wdiss", "eta", "P"};
    for (const auto& r : rows) t.add_row(r);
    return t;
}

}  // namespace sqhe::cli
