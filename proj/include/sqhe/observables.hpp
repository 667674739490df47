#pragma once

// Thermodynamic quantities evaluated at the steady state.

#include "sqhe/core.hpp"
#include "sqhe/dynamics.hpp"

#include <cmath>
#include <limits>
#include <optional>

namespace sqhe {

/// j = g² (Ñl rhoaa - Nl rhobb): net photon emission rate into the cavity.
/// Written as g² (rhoaa + Nl (rhoaa - rhobb)) so the large Nl factor only
/// multiplies the small population difference.
inline double work_flux(const EngineState& ss, const OccupationSet& occ, double g) {
    return g * g * (ss.rhoaa + occ.Nl * (ss.rhoaa - ss.rhobb));
}

/// Net pumping into |a> by the hot bath. At the steady state it equals the
/// cavity flux (d rhoaa/dt = 0); used as an independent check of work_flux.
inline double hot_pumping_rate(const EngineState& ss, const OccupationSet& occ,
                               const EngineParameters& params, const SqueezeSet& sq) {
    const double r = params.r;
    return r * occ.Nh * (ss.rho11 + ss.rho22) - 2.0 * r * occ.Nh_tilde() * ss.rhoaa +
           2.0 * r * sq.ph * occ.Nh * ss.rho12;
}

/// Steady-state flux at an arbitrary operating point.
inline double steady_flux(const EngineParameters& params, const SqueezeSet& sq) {
    const auto occ = occupations(params, sq);
    const auto ss = steady_state(build_rate_operator(occ, params, sq));
    return work_flux(ss, occ, params.g);
}

struct FluxReport {
    double j = 0.0;     // full flux
    double j_o = 0.0;   // ph = pc = 0, same squeezing
    double j_o0 = 0.0;  // ph = pc = 0, no squeezing
    double ratio_jo = 0.0;
    double ratio_j00 = 0.0;
};

inline FluxReport flux_report(const EngineParameters& params, const SqueezeSet& sq) {
    FluxReport rep;
    rep.j = steady_flux(params, sq);
    rep.j_o = steady_flux(params, sq.without_coherence());
    rep.j_o0 = steady_flux(params, SqueezeSet{});
    rep.ratio_jo = rep.j / rep.j_o;
    rep.ratio_j00 = rep.j / rep.j_o0;
    return rep;
}

/// Generalised detailed-balance ratio zeta = (Ñc Ñl Nh)/(Nc Ñh Nl); the
/// affinity is ln(zeta). `infinite` is set when Nc or Nl vanishes.
struct Affinity {
    double zeta = 1.0;
    bool infinite = false;

    double log() const {
        return infinite ? std::numeric_limits<double>::infinity() : std::log(zeta);
    }
};

inline Affinity affinity(const OccupationSet& occ) {
    if (occ.Nh < 0.0 || occ.Nc < 0.0 || occ.Nl < 0.0) {
        throw DomainError("affinity requires non-negative occupations");
    }
    if (occ.Nc == 0.0 || occ.Nl == 0.0) {
        return {std::numeric_limits<double>::infinity(), true};
    }
    // log-space keeps the ratio finite for very large squeezed occupations.
    const double log_zeta = std::log1p(1.0 / occ.Nc) + std::log1p(1.0 / occ.Nl) -
                            std::log1p(1.0 / occ.Nh);
    return {std::exp(log_zeta), false};
}

struct WorkReport {
    double W = 0.0;      // useful work per emitted quantum
    double Wdiss = 0.0;  // ln(Ñl/Nl)
    double Qh = 0.0;     // Ea - E1
    double eta = 0.0;    // W / Qh
    double P = 0.0;      // j W
};

/// W = Ea - Eb - Tc ln(Ñl/Nl), eta = W/Qh with Qh = Ea - E1. Power is left
/// at zero; useful_work(params, occ, j) fills it from a given flux.
inline WorkReport useful_work(const EngineParameters& params, const OccupationSet& occ) {
    if (!(occ.Nl > 0.0)) {
        throw DomainError("useful_work requires Nl > 0 (cavity mode frozen out)");
    }
    WorkReport w;
    w.Wdiss = std::log1p(1.0 / occ.Nl);
    w.W = params.cavity_gap() - w.Wdiss * params.Tc;
    w.Qh = params.hot_gap();
    w.eta = w.W / w.Qh;
    return w;
}

inline WorkReport useful_work(const EngineParameters& params, const OccupationSet& occ,
                              double flux) {
    auto w = useful_work(params, occ);
    w.P = flux * w.W;
    return w;
}

/// Work, efficiency and power at an operating point.
inline WorkReport operating_point(const EngineParameters& params, const SqueezeSet& sq) {
    const auto occ = occupations(params, sq);
    const auto ss = steady_state(build_rate_operator(occ, params, sq));
    return useful_work(params, occ, work_flux(ss, occ, params.g));
}

/// Real part of arccosh on the principal branch: arccosh(|a|) for |a| >= 1,
/// zero inside (-1, 1).
inline double real_arccosh(double a) {
    return std::abs(a) >= 1.0 ? std::acosh(std::abs(a)) : 0.0;
}

/// Cavity squeezing x* = (1/2) Re arccosh((Ñc Nh + Nc Ñh) / ((2 nl + 1)(Nc - Nh))).
/// Empty when the argument lies inside (-1, 1), i.e. no real crossing.
/// At x* the affinity ln(zeta), and with it the flux, changes sign.
inline std::optional<double> sign_change_point(const OccupationSet& occ) {
    if (occ.Nh == occ.Nc) {
        throw DomainError("sign_change_point requires Nh != Nc");
    }
    const double arg = (occ.Nc_tilde() * occ.Nh + occ.Nc * occ.Nh_tilde()) /
                       ((2.0 * occ.nl + 1.0) * (occ.Nc - occ.Nh));
    if (!(std::abs(arg) >= 1.0)) {
        return std::nullopt;
    }
    return 0.5 * real_arccosh(arg);
}

}  // namespace sqhe
