#pragma once

// Data behind each figure panel. Every panel starts from its own scenario
// defaults; keys the user set explicitly override them.

#include "sqhe/cli/commands.hpp"
#include "sqhe/cli/config.hpp"
#include "sqhe/cli/table.hpp"
#include "sqhe/emp.hpp"
#include "sqhe/fitting.hpp"
#include "sqhe/limits.hpp"
#include "sqhe/observables.hpp"
#include "sqhe/optimize.hpp"
#include "sqhe/parallel.hpp"

#include <cmath>
#include <functional>
#include <initializer_list>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

namespace sqhe::cli {

namespace fig {

using Defaults = std::initializer_list<std::pair<const char*, const char*>>;

inline Config scenario(const Config& user, Defaults defaults) {
    Config c;
    for (const auto& [k, v] : defaults) c.set(k, v);
    c.overlay(user);
    return c;
}

inline std::string label(const std::string& stem, const std::string& key, double v) {
    return stem + "_" + key + format_number(v);
}

/// Fills one row per abscissa; `row` returns the ordinates for that abscissa.
inline void fill(Table& t, const std::vector<double>& xs, unsigned jobs,
                 const std::function<std::vector<double>(double)>& row) {
    const auto rows = parallel_map(xs.size(), jobs, [&](std::size_t i) {
        auto r = row(xs[i]);
        r.insert(r.begin(), xs[i]);
        return r;
    });
    for (const auto& r : rows) t.add_row(r);
}

inline EngineState solve(const EngineParameters& p, const SqueezeSet& s) {
    return steady_state(build_rate_operator(p, s));
}

inline double flux_ratio_jo(const EngineParameters& p, const SqueezeSet& s) {
    return steady_flux(p, s) / steady_flux(p, s.without_coherence());
}

inline double flux_ratio_j00(const EngineParameters& p, const SqueezeSet& s) {
    return steady_flux(p, s) / steady_flux(p, SqueezeSet{});
}

inline OptimizationSpec spec_for(const Config& c, SweepVariable v, const EngineParameters& p) {
    auto spec = OptimizationSpec::defaults_for(v, p);
    spec.grid_points = c.integer("grid_points");
    spec.refine_tol = c.number("refine_tol");
    try {
        spec.validate();
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
    return spec;
}

inline EmpResult emp_at(const Config& c, SweepVariable v, const EngineParameters& p,
                        const SqueezeSet& s) {
    return maximize_power(p, s, spec_for(c, v, p), c.eta_l_form());
}

inline EngineParameters with_etaC(EngineParameters p, double etaC) {
    p.Tc = p.Th * (1.0 - etaC);
    return p;
}

/// Flux-maximising ph on [0, 1]; second member flags a maximiser on a bound.
inline std::pair<double, bool> ph_star(const EngineParameters& p, SqueezeSet s) {
    const auto best = maximize_scalar(
        [&](double ph) {
            s.ph = ph;
            return steady_flux(p, s);
        },
        0.0, 1.0, 101, 1e-9);
    return {best.argmax, best.argmax <= 1e-6 || best.argmax >= 1.0 - 1e-6};
}

inline const std::vector<double> kSqueezeLevels{0.0, 0.5, 1.0, 2.0};

// --- populations and coherence -------------------------------------------------

inline Table coherence_vs(const Config& user, const std::string& command, const char* var,
                          const char* curve_key, unsigned jobs) {
    const auto c = scenario(user, {{"ph", "1"}, {"pc", "0.5"}});
    const auto p = c.engine();
    const auto s0 = c.squeeze();
    Table t;
    stamp(t, c, command);
    t.columns = {var};
    for (double x : {1.0, 0.0})
        for (double v : kSqueezeLevels)
            t.columns.push_back(label(label("rho12", "x", x), curve_key, v));
    fill(t, linspace(0.0, 3.0, 61), jobs, [&](double xv) {
        std::vector<double> r;
        for (double x : {1.0, 0.0})
            for (double v : kSqueezeLevels) {
                EngineParameters q = p;
                SqueezeSet s = s0;
                s.x = x;
                assign_named(q, s, curve_key, v);
                assign_named(q, s, var, xv);
                r.push_back(solve(q, s).rho12);
            }
        return r;
    });
    return t;
}

inline Table fig1b(const Config& u, unsigned j) { return coherence_vs(u, "figure fig1b", "xc", "xh", j); }
inline Table fig1c(const Config& u, unsigned j) { return coherence_vs(u, "figure fig1c", "xh", "xc", j); }

inline Table fig1d(const Config& user, unsigned jobs) {
    const auto c = scenario(user, {{"ph", "1"}, {"pc", "0.5"}});
    const auto p = c.engine();
    const auto s0 = c.squeeze();
    Table t;
    stamp(t, c, "figure fig1d");
    t.columns = {"x"};
    for (double v : kSqueezeLevels) t.columns.push_back(label("rho12_xh0", "xc", v));
    for (double v : kSqueezeLevels) t.columns.push_back(label("rho12_xc0", "xh", v));
    fill(t, linspace(0.0, 3.0, 61), jobs, [&](double x) {
        std::vector<double> r;
        for (double v : kSqueezeLevels) r.push_back(solve(p, {x, 0.0, v, s0.ph, s0.pc}).rho12);
        for (double v : kSqueezeLevels) r.push_back(solve(p, {x, v, 0.0, s0.ph, s0.pc}).rho12);
        return r;
    });
    return t;
}

inline Table fig2a(const Config& user, unsigned) {
    const auto c = scenario(user, {{"ph", "1"}, {"pc", "0.5"}, {"t_final", "30"}});
    const auto p = c.engine();
    const auto s0 = c.squeeze();
    SqueezeSet sq = s0;
    sq.x = 2.0;
    SqueezeSet un = s0;
    un.x = 0.0;
    const auto oq = occupations(p, sq);
    const auto ou = occupations(p, un);
    const double dt = std::min(default_time_step(oq, p), default_time_step(ou, p));
    const double tf = c.number("t_final");
    if (!(tf > dt)) throw ConfigError("t_final must exceed dt");
    const auto stride = static_cast<std::size_t>(std::max(1.0, std::ceil(tf / dt) / 300.0));
    const auto a = evolve(EngineState::ground(), build_rate_operator(oq, p, sq), tf, dt, stride);
    const auto b = evolve(EngineState::ground(), build_rate_operator(ou, p, un), tf, dt, stride);

    Table t;
    stamp(t, c, "figure fig2a", {"t_final"});
    t.add_meta("dt", format_number(dt));
    t.columns = {"t"};
    for (const char* tag : {"x2", "x0"})
        for (const char* n : {"rho11", "rho22", "rhoaa", "rhobb", "rho12"})
            t.columns.push_back(std::string(n) + "_" + tag);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto& u = a[i].state;
        const auto& v = b[i].state;
        t.add_row({a[i].t, u.rho11, u.rho22, u.rhoaa, u.rhobb, u.rho12, v.rho11, v.rho22,
                   v.rhoaa, v.rhobb, v.rho12});
    }
    return t;
}

inline Table fig2b(const Config& user, unsigned jobs) {
    const auto c = scenario(user, {{"ph", "1"}, {"pc", "0.5"}});
    const auto p = c.engine();
    const auto s0 = c.squeeze();
    SqueezeSet un = s0;
    un.x = 0.0;
    const auto ref = solve(p, un);
    Table t;
    stamp(t, c, "figure fig2b");
    t.columns = {"x",        "rho11",    "rho22",    "rhoaa",    "rhobb",   "rho12",
                 "rho11_x0", "rho22_x0", "rhoaa_x0", "rhobb_x0", "rho12_x0"};
    fill(t, linspace(0.0, 5.0, 51), jobs, [&](double x) {
        SqueezeSet s = s0;
        s.x = x;
        const auto e = solve(p, s);
        return std::vector<double>{e.rho11,   e.rho22,   e.rhoaa,   e.rhobb,   e.rho12,
                                   ref.rho11, ref.rho22, ref.rhoaa, ref.rhobb, ref.rho12};
    });
    return t;
}

inline Table fig2c(const Config& user, unsigned jobs) {
    const auto c = scenario(user, {{"ph", "0.5"}});
    const auto p = c.engine();
    const auto s0 = c.squeeze();
    const std::vector<double> pcs{0.2, 0.3, 0.5, 0.7, 0.8};
    Table t;
    stamp(t, c, "figure fig2c");
    t.columns = {"x"};
    for (double pc : pcs) t.columns.push_back(label("rhobb_over_rhoaa", "pc", pc));
    fill(t, linspace(0.0, 10.0, 101), jobs, [&](double x) {
        std::vector<double> r;
        for (double pc : pcs) {
            const auto e = solve(p, {x, s0.xh, s0.xc, s0.ph, pc});
            r.push_back(e.rhobb / e.rhoaa);
        }
        return r;
    });
    return t;
}

inline Table fig2d(const Config& user, unsigned jobs) {
    const auto c = scenario(user, {{"pc", "1"}});
    const auto p = c.engine();
    const auto s0 = c.squeeze();
    constexpr double pi = std::numbers::pi;
    const std::vector<double> xs{0.0, pi / 6, pi / 3, pi / 2, 2 * pi / 3, 5 * pi / 6, pi, 1.5 * pi};
    Table t;
    stamp(t, c, "figure fig2d");
    t.columns = {"ph"};
    for (double x : xs) t.columns.push_back(label("j_over_jo", "x", x));
    fill(t, linspace(0.0, 1.0, 51), jobs, [&](double ph) {
        std::vector<double> r;
        for (double x : xs) r.push_back(flux_ratio_jo(p, {x, s0.xh, s0.xc, ph, s0.pc}));
        return r;
    });
    return t;
}

// --- flux ratios, optimal coherence, affinity ---------------------------------

inline Table fig3(const Config& user, unsigned jobs) {
    const auto c = scenario(user, {{"pc", "1"}, {"Th", "1"}, {"Tc", "0.5"}, {"x", "10"}});
    const auto p = c.engine();
    const auto s0 = c.squeeze();
    Table t;
    stamp(t, c, "figure fig3");
    t.columns = {"ph", "j_over_jo", "j_over_jo_limit", "j_over_jo_x0"};
    fill(t, linspace(0.0, 1.0, 51), jobs, [&](double ph) {
        SqueezeSet s = s0;
        s.ph = ph;
        const auto in = LimitInputs::from(occupations(p, s), p, s);
        SqueezeSet s_un = s;
        s_un.x = 0.0;
        return std::vector<double>{flux_ratio_jo(p, s), flux_xinf_pc1(in) / flux_xinf_jo(in),
                                   flux_ratio_jo(p, s_un)};
    });
    return t;
}

inline Table fig3a(const Config& user, unsigned jobs) {
    const auto c = scenario(user, {{"pc", "1"}, {"Th", "1"}, {"Tc", "0.9"}, {"Tl", "10"}});
    const auto p = c.engine();
    const auto s0 = c.squeeze();
    Table t;
    stamp(t, c, "figure fig3a");
    t.columns = {"ph"};
    for (double x : kSqueezeLevels) t.columns.push_back(label("j_over_jo", "x", x));
    fill(t, linspace(0.0, 1.0, 51), jobs, [&](double ph) {
        std::vector<double> r;
        for (double x : kSqueezeLevels) r.push_back(flux_ratio_jo(p, {x, s0.xh, s0.xc, ph, s0.pc}));
        return r;
    });
    return t;
}

inline Table fig3b(const Config& user, unsigned jobs) {
    const auto c = scenario(user, {{"Th", "100"}, {"Tc", "0.5"}, {"x", "10"}});
    const auto p = c.engine();
    const auto s0 = c.squeeze();
    Table t;
    stamp(t, c, "figure fig3b");
    t.columns = {"pc", "ph_star", "boundary_flag", "ph_star_formula", "ph_star_cold_limit"};
    fill(t, linspace(0.05, 1.0, 20), jobs, [&](double pc) {
        SqueezeSet s = s0;
        s.pc = pc;
        const auto [ph, edge] = ph_star(p, s);
        return std::vector<double>{ph, edge ? 1.0 : 0.0, ph_star_biased(occupations(p, s).Nc, pc),
                                   ph_star_cold_limit(pc)};
    });
    return t;
}

inline Table fig3c(const Config& user, unsigned jobs) {
    const auto c = scenario(user, {{"pc", "0.5"}});
    const auto p = c.engine();
    const auto s0 = c.squeeze();
    EngineParameters far = p;
    far.Th = 100.0;
    far.Tc = 0.5;
    EngineParameters near = p;
    near.Th = 1.0;
    near.Tc = 0.9;
    Table t;
    stamp(t, c, "figure fig3c");
    t.add_meta("far", "Th = 100, Tc = 0.5");
    t.add_meta("near", "Th = 1, Tc = 0.9");
    t.columns = {"x", "ph_star_far", "boundary_far", "ph_star_near", "boundary_near"};
    fill(t, linspace(0.0, 5.0, 26), jobs, [&](double x) {
        SqueezeSet s = s0;
        s.x = x;
        const auto [a, ea] = ph_star(far, s);
        const auto [b, eb] = ph_star(near, s);
        return std::vector<double>{a, ea ? 1.0 : 0.0, b, eb ? 1.0 : 0.0};
    });
    return t;
}

inline Table fig3d(const Config& user, unsigned jobs) {
    const auto c = scenario(user, {{"Th", "2"}, {"Tc", "0.1"}});
    const auto p = c.engine();
    const auto s0 = c.squeeze();
    const std::vector<double> tls{0.5, 0.9, 2.0, 5.0};
    Table t;
    stamp(t, c, "figure fig3d");
    t.columns = {"x"};
    for (double tl : tls) t.columns.push_back(label("zeta_over_zeta0", "Tl", tl));
    fill(t, linspace(0.0, 5.0, 51), jobs, [&](double x) {
        std::vector<double> r;
        for (double tl : tls) {
            EngineParameters q = p;
            q.Tl = tl;
            SqueezeSet s = s0;
            SqueezeSet z = s0;
            s.x = x;
            z.x = 0.0;
            r.push_back(std::exp(affinity(occupations(q, s)).log() -
                                 affinity(occupations(q, z)).log()));
        }
        return r;
    });
    return t;
}

// --- flux relative to the classical value -------------------------------------

inline Table flux_vs_bath(const Config& user, const std::string& command, const char* var,
                          const char* curve_key, unsigned jobs) {
    const auto c = scenario(user, {{"ph", "1"}, {"pc", "0.5"}});
    const auto p = c.engine();
    const auto s0 = c.squeeze();
    Table t;
    stamp(t, c, command);
    t.columns = {var};
    for (double x : {0.0, 1.0})
        for (double v : kSqueezeLevels)
            t.columns.push_back(label(label("j_over_j00", "x", x), curve_key, v));
    fill(t, linspace(0.0, 3.0, 61), jobs, [&](double xv) {
        std::vector<double> r;
        for (double x : {0.0, 1.0})
            for (double v : kSqueezeLevels) {
                EngineParameters q = p;
                SqueezeSet s = s0;
                s.x = x;
                assign_named(q, s, curve_key, v);
                assign_named(q, s, var, xv);
                r.push_back(flux_ratio_j00(q, s));
            }
        return r;
    });
    return t;
}

inline Table fig4a(const Config& u, unsigned j) { return flux_vs_bath(u, "figure fig4a", "xc", "xh", j); }
inline Table fig4b(const Config& u, unsigned j) { return flux_vs_bath(u, "figure fig4b", "xh", "xc", j); }

inline Table fig4c(const Config& user, unsigned jobs) {
    const auto c = scenario(user, {{"ph", "1"}, {"pc", "0.5"}});
    const auto p = c.engine();
    const auto s0 = c.squeeze();
    const std::vector<std::pair<double, double>> baths{{0.5, 0.1}, {0.1, 0.5}, {0.0, 0.0}};
    Table t;
    stamp(t, c, "figure fig4c");
    t.columns = {"x"};
    for (double tc : {0.5, 0.1})
        for (const auto& [xh, xc] : baths)
            t.columns.push_back(label(label(label("j_over_j00", "Tc", tc), "xh", xh), "xc", xc));
    fill(t, linspace(0.0, 5.0, 51), jobs, [&](double x) {
        std::vector<double> r;
        for (double tc : {0.5, 0.1})
            for (const auto& [xh, xc] : baths) {
                EngineParameters q = p;
                q.Tc = tc;
                r.push_back(flux_ratio_j00(q, {x, xh, xc, s0.ph, s0.pc}));
            }
        return r;
    });
    return t;
}

inline Table fig4d(const Config& user, unsigned jobs) {
    const auto c = scenario(user, {});
    const auto p = c.engine();
    const auto s0 = c.squeeze();
    const std::vector<std::pair<double, double>> baths{{1.0, 0.1}, {0.1, 1.0}};
    Table t;
    stamp(t, c, "figure fig4d");
    t.columns = {"x"};
    for (const auto& [xh, xc] : baths) {
        const auto name = label(label("affinity", "xh", xh), "xc", xc);
        t.columns.push_back(name);
        const auto xs = sign_change_point(occupations(p, {0.0, xh, xc, s0.ph, s0.pc}));
        t.add_meta("x_star " + name, xs ? format_number(*xs) : "none");
    }
    fill(t, linspace(0.0, 5.0, 101), jobs, [&](double x) {
        std::vector<double> r;
        for (const auto& [xh, xc] : baths)
            r.push_back(affinity(occupations(p, {x, xh, xc, s0.ph, s0.pc})).log());
        return r;
    });
    return t;
}

// --- work ---------------------------------------------------------------------

inline Table fig5a(const Config& user, unsigned jobs) {
    const auto c = scenario(user, {{"Th", "1"}, {"Tc", "0.1"}});
    const auto p = c.engine();
    const auto s0 = c.squeeze();
    const std::vector<double> tls{0.2, 0.5, 1.0, 2.0};
    Table t;
    stamp(t, c, "figure fig5a");
    t.columns = {"x"};
    for (double tl : tls) t.columns.push_back(label("W_over_W0", "Tl", tl));
    fill(t, linspace(0.0, 5.0, 51), jobs, [&](double x) {
        std::vector<double> r;
        for (double tl : tls) {
            EngineParameters q = p;
            q.Tl = tl;
            SqueezeSet s = s0;
            SqueezeSet z = s0;
            s.x = x;
            z.x = 0.0;
            r.push_back(useful_work(q, occupations(q, s)).W / useful_work(q, occupations(q, z)).W);
        }
        return r;
    });
    return t;
}

inline Table fig5b(const Config& user, unsigned jobs) {
    const auto c = scenario(user, {{"Th", "2"}, {"Tl", "1"}});
    const auto p = c.engine();
    const auto s0 = c.squeeze();
    const std::vector<double> tcs{0.5, 1.0, 1.5, 2.0};
    Table t;
    stamp(t, c, "figure fig5b");
    t.columns = {"x"};
    for (double tc : tcs) {
        const auto name = label("W", "Tc", tc);
        t.columns.push_back(name);
        EngineParameters q = p;
        q.Tc = tc;
        SqueezeSet z = s0;
        z.x = 0.0;
        const auto xs = sign_change_point(occupations(q, z));
        t.add_meta("x_star " + name, xs ? format_number(*xs) : "none");
    }
    fill(t, linspace(0.0, 5.0, 51), jobs, [&](double x) {
        std::vector<double> r;
        for (double tc : tcs) {
            EngineParameters q = p;
            q.Tc = tc;
            SqueezeSet s = s0;
            s.x = x;
            r.push_back(useful_work(q, occupations(q, s)).W);
        }
        return r;
    });
    return t;
}

inline Table fig5c(const Config& user, unsigned jobs) {
    const auto c = scenario(user, {{"pc", "0.1"}});
    const auto p = c.engine();
    const auto s0 = c.squeeze();
    const std::vector<double> xs{0.0, 0.5, 1.0};
    Table t;
    stamp(t, c, "figure fig5c", {"grid_points", "refine_tol"});
    t.columns = {"ph"};
    for (double x : xs) {
        t.columns.push_back(label("emp_Ea", "x", x));
        t.columns.push_back(label("boundary", "x", x));
    }
    fill(t, linspace(0.0, 1.0, 21), jobs, [&](double ph) {
        std::vector<double> r;
        for (double x : xs) {
            const auto e = emp_at(c, SweepVariable::Ea, p, {x, s0.xh, s0.xc, ph, s0.pc});
            r.push_back(e.emp);
            r.push_back(e.boundary ? 1.0 : 0.0);
        }
        return r;
    });
    return t;
}

inline Table fig5d(const Config& user, unsigned jobs) {
    const auto c = scenario(user, {{"pc", "0.1"}, {"ph", "1"}});
    const auto p = c.engine();
    const auto s0 = c.squeeze();
    const std::vector<double> tls{0.5, 1.0, 2.0};
    Table t;
    stamp(t, c, "figure fig5d", {"grid_points", "refine_tol"});
    t.columns = {"x"};
    for (double tl : tls) {
        t.columns.push_back(label("emp_Ea", "Tl", tl));
        t.columns.push_back(label("boundary", "Tl", tl));
    }
    fill(t, linspace(0.0, 3.0, 16), jobs, [&](double x) {
        std::vector<double> r;
        for (double tl : tls) {
            EngineParameters q = p;
            q.Tl = tl;
            SqueezeSet s = s0;
            s.x = x;
            const auto e = emp_at(c, SweepVariable::Ea, q, s);
            r.push_back(e.emp);
            r.push_back(e.boundary ? 1.0 : 0.0);
        }
        return r;
    });
    return t;
}

// --- efficiency at maximum power ----------------------------------------------

inline Table fig6a(const Config& user, unsigned jobs) {
    const auto c = scenario(user, {{"pc", "0.5"}});
    const auto p = c.engine();
    const auto s0 = c.squeeze();
    const std::vector<std::pair<double, double>> baths{{0.5, 1.0}, {1.0, 1.0}, {10.0, 10.0}};
    Table t;
    stamp(t, c, "figure fig6a", {"grid_points", "refine_tol"});
    t.columns = {"ph"};
    for (const auto& [xc, xh] : baths) {
        const auto stem = label(label("", "xc", xc), "xh", xh);
        t.columns.push_back("emp_x" + stem);
        t.columns.push_back("boundary" + stem);
    }
    fill(t, linspace(0.0, 1.0, 21), jobs, [&](double ph) {
        std::vector<double> r;
        for (const auto& [xc, xh] : baths) {
            const auto e = emp_at(c, SweepVariable::x, p, {s0.x, xh, xc, ph, s0.pc});
            r.push_back(e.emp);
            r.push_back(e.boundary ? 1.0 : 0.0);
        }
        return r;
    });
    return t;
}

/// EMP against etaC with its reference efficiencies.
inline Table emp_vs_etaC(const Config& c, const std::string& command, SweepVariable v,
                         const std::vector<double>& grid, unsigned jobs) {
    const auto p = c.engine();
    const auto s = c.squeeze();
    Table t;
    stamp(t, c, command, {"grid_points", "refine_tol", "eta_l_form"});
    t.add_meta("variable", std::string(to_string(v)));
    t.add_meta("etaC_convention", "Tc = Th (1 - etaC)");
    t.columns = {"etaC", "emp", "eta_ca", "eta_upper", "eta_L", "argmax", "boundary_flag"};
    fill(t, grid, jobs, [&](double e) {
        const auto r = emp_at(c, v, with_etaC(p, e), s);
        return std::vector<double>{r.emp, r.eta_ca, r.eta_upper, r.eta_L, r.argmax,
                                   r.boundary ? 1.0 : 0.0};
    });
    return t;
}

inline Table fig6b(const Config& u, unsigned j) {
    const auto c = scenario(u, {{"Th", "0.8"}, {"Tl", "0.1"}, {"r", "0.7"}, {"g", "1"}});
    return emp_vs_etaC(c, "figure fig6b", SweepVariable::x, linspace(0.02, 0.6, 30), j);
}

inline Table fig6c(const Config& u, unsigned j) {
    const auto c = scenario(u, {{"Th", "0.8"}, {"Tl", "0.1"}, {"r", "0.1"}, {"g", "3"}});
    return emp_vs_etaC(c, "figure fig6c", SweepVariable::x, linspace(0.02, 0.6, 30), j);
}

inline Table fig6d(const Config& u, unsigned j) {
    const auto c = scenario(u, {{"Th", "1"}, {"Tl", "1"}, {"x", "1"}});
    return emp_vs_etaC(c, "figure fig6d", SweepVariable::Ea, linspace(0.02, 0.8, 40), j);
}

/// Bath-squeezing EMP at x = 10 (infinity proxy), 1 and 0, with linear fits.
inline Table emp_bath_linear(const Config& user, const std::string& command, SweepVariable v,
                             unsigned jobs) {
    const auto c = scenario(user, {{"Th", "1"}, {"Tl", "1"}});
    const auto p = c.engine();
    const auto s0 = c.squeeze();
    const std::vector<double> xs{10.0, 1.0, 0.0};
    const auto grid = linspace(0.05, 0.6, 12);
    Table t;
    stamp(t, c, command, {"grid_points", "refine_tol"});
    t.add_meta("variable", std::string(to_string(v)));
    t.add_meta("etaC_convention", "Tc = Th (1 - etaC)");
    t.columns = {"etaC"};
    for (double x : xs) t.columns.push_back(label("emp", "x", x));
    fill(t, grid, jobs, [&](double e) {
        std::vector<double> r;
        for (double x : xs) {
            SqueezeSet s = s0;
            s.x = x;
            r.push_back(emp_at(c, v, with_etaC(p, e), s).emp);
        }
        return r;
    });
    for (std::size_t k = 0; k < xs.size(); ++k) {
        std::vector<double> ys;
        for (const auto& row : t.rows) ys.push_back(row[k + 1]);
        const auto f = fit_linear(grid, ys);
        t.footer.emplace_back("fit_linear m c " + t.columns[k + 1], format_coefficients(f));
    }
    return t;
}

inline Table fig7a(const Config& u, unsigned j) { return emp_bath_linear(u, "figure fig7a", SweepVariable::xc, j); }
inline Table fig7b(const Config& u, unsigned j) { return emp_bath_linear(u, "figure fig7b", SweepVariable::xh, j); }

inline Table fig7c(const Config& user, unsigned jobs) {
    const auto c = scenario(user, {{"Th", "1"}, {"Tl", "1"}, {"x", "1.5"}});
    const auto p = c.engine();
    const auto s = c.squeeze();
    Table t;
    stamp(t, c, "figure fig7c", {"grid_points", "refine_tol"});
    t.add_meta("etaC_convention", "Tc = Th (1 - etaC)");
    t.columns = {"etaC", "emp_Ea", "eta"};
    fill(t, linspace(0.05, 0.8, 16), jobs, [&](double e) {
        const auto q = with_etaC(p, e);
        return std::vector<double>{emp_at(c, SweepVariable::Ea, q, s).emp,
                                   useful_work(q, occupations(q, s)).eta};
    });
    return t;
}

inline Table fig7d(const Config& user, unsigned jobs) {
    const auto c = scenario(user, {{"Th", "1"}, {"Tl", "1"}});
    const auto p = c.engine();
    const auto s0 = c.squeeze();
    const std::vector<double> xs{1.5, 10.0};
    const auto grid = linspace(0.05, 0.8, 16);
    Table t;
    stamp(t, c, "figure fig7d", {"grid_points", "refine_tol"});
    t.add_meta("etaC_convention", "Tc = Th (1 - etaC)");
    t.columns = {"etaC"};
    for (double x : xs) t.columns.push_back(label("emp_Ea", "x", x));
    fill(t, grid, jobs, [&](double e) {
        std::vector<double> r;
        for (double x : xs) {
            SqueezeSet s = s0;
            s.x = x;
            r.push_back(emp_at(c, SweepVariable::Ea, with_etaC(p, e), s).emp);
        }
        return r;
    });
    for (std::size_t k = 0; k < xs.size(); ++k) {
        std::vector<double> ys;
        for (const auto& row : t.rows) ys.push_back(row[k + 1]);
        const auto q = fit_quadratic(grid, ys);
        const auto n = fit_sech_form(grid, ys, xs[k]);
        t.footer.emplace_back("fit_quadratic c a5 a6 " + t.columns[k + 1], format_coefficients(q));
        t.footer.emplace_back("fit_quadratic_rms " + t.columns[k + 1], format_number(q.residual_rms));
        t.footer.emplace_back("fit_sech a1 a2 a3 a4 " + t.columns[k + 1], format_coefficients(n));
        t.footer.emplace_back("fit_sech_rms " + t.columns[k + 1], format_number(n.residual_rms));
    }
    return t;
}

struct EmpLogSet {
    double Th;
    double xb;  // xc = xh
    double x;
};

inline const std::vector<EmpLogSet>& fig8_sets() {
    static const std::vector<EmpLogSet> s{
        {3.0, 0.1, 0.6}, {4.0, 0.2, 0.5}, {6.0, 0.2, 2.0 * std::numbers::pi}};
    return s;
}

inline Table fig8(const Config& user, unsigned jobs) {
    const auto c = scenario(user, {});
    const auto p = c.engine();
    const auto s0 = c.squeeze();
    Table t;
    stamp(t, c, "figure fig8", {"grid_points", "refine_tol", "eta_l_form"});
    t.add_meta("etaC_convention", "Tc = Th (1 - etaC)");
    t.columns = {"etaC"};
    for (const auto& set : fig8_sets()) {
        const auto stem = label("_Th", "", set.Th);
        t.columns.push_back("emp_Ea" + stem);
        t.columns.push_back("eta_L" + stem);
    }
    fill(t, linspace(0.05, 0.8, 16), jobs, [&](double e) {
        std::vector<double> r;
        for (const auto& set : fig8_sets()) {
            EngineParameters q = p;
            q.Th = set.Th;
            const auto res = emp_at(c, SweepVariable::Ea, with_etaC(q, e),
                                    {set.x, set.xb, set.xb, s0.ph, s0.pc});
            r.push_back(res.emp);
            r.push_back(res.eta_L);
        }
        return r;
    });
    return t;
}

}  // namespace fig

using FigureFn = Table (*)(const Config&, unsigned);

inline const std::vector<std::pair<std::string, FigureFn>>& figure_table() {
    static const std::vector<std::pair<std::string, FigureFn>> t{
        {"fig1b", fig::fig1b}, {"fig1c", fig::fig1c}, {"fig1d", fig::fig1d},
        {"fig2a", fig::fig2a}, {"fig2b", fig::fig2b}, {"fig2c", fig::fig2c},
        {"fig2d", fig::fig2d}, {"fig3", fig::fig3},   {"fig3a", fig::fig3a},
        {"fig3b", fig::fig3b}, {"fig3c", fig::fig3c}, {"fig3d", fig::fig3d},
        {"fig4a", fig::fig4a}, {"fig4b", fig::fig4b}, {"fig4c", fig::fig4c},
        {"fig4d", fig::fig4d}, {"fig5a", fig::fig5a}, {"fig5b", fig::fig5b},
        {"fig5c", fig::fig5c}, {"fig5d", fig::fig5d}, {"fig6a", fig::fig6a},
        {"fig6b", fig::fig6b}, {"fig6c", fig::fig6c}, {"fig6d", fig::fig6d},
        {"fig7a", fig::fig7a}, {"fig7b", fig::fig7b}, {"fig7c", fig::fig7c},
        {"fig7d", fig::fig7d}, {"fig8", fig::fig8},
    };
    return t;
}

inline bool is_figure(const std::string& id) {
    for (const auto& [k, f] : figure_table()) {
        if (k == id) return true;
    }
    return false;
}

/// Throws ConfigError for an unknown id.
inline Table cmd_figure(const std::string& id, const Config& user, unsigned jobs) {
    for (const auto& [k, f] : figure_table()) {
        if (k == id) return f(user, jobs);
    }
    throw ConfigError("unknown figure id '" + id + "'");
}

}  // namespace sqhe::cli
