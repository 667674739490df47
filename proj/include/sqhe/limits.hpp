#pragma once

// =============================================================================
// Closed-form limits of the steady-state flux and populations
// =============================================================================
// Strong cavity squeezing (x -> inf, Nl -> inf) and strong temperature bias
// (Th -> inf, Tc -> 0). These are independent of the linear-solve pipeline
// and serve as oracles for it.
// =============================================================================

#include "sqhe/core.hpp"

#include <cmath>
#include <utility>

namespace sqhe {

struct LimitInputs {
    double Nh = 0.0;
    double Nc = 0.0;
    double Nl = 0.0;
    double ph = 0.0;
    double pc = 0.0;
    double r = 0.7;
    double g = 1.0;
    double tau = 0.5;

    static LimitInputs from(const OccupationSet& occ, const EngineParameters& params,
                            const SqueezeSet& sq) {
        return {occ.Nh, occ.Nc, occ.Nl, sq.ph, sq.pc, params.r, params.g, params.tau};
    }
};

/// x -> inf, ph = pc = 0:  r (Nh - Nc) / (2 (n + 1)).
inline double flux_xinf_jo(const LimitInputs& in) {
    const double n = in.Nh + in.Nc;
    return in.r * (in.Nh - in.Nc) / (2.0 * (n + 1.0));
}

/// Denominator polynomial of the pc = 1 strong-squeezing flux,
/// f_n = 4 Nc Nh + Nh (2 Nh (ph + 1) + ph + 2) + Nc.
inline double strong_squeeze_fn(double Nh, double Nc, double ph) {
    return 4.0 * Nc * Nh + Nh * (2.0 * Nh * (ph + 1.0) + ph + 2.0) + Nc;
}

/// x -> inf, pc = 1:
///   r (Nh - Nc)(Nh (1 - ph²) + tau) / ((1 - ph) f_n + 2 tau (n + 1)).
/// At tau = 0 the common factor (1 - ph) is cancelled, so ph = 1 returns the
/// continuous limit instead of 0/0.
inline double flux_xinf_pc1(const LimitInputs& in) {
    const double n = in.Nh + in.Nc;
    const double fn = strong_squeeze_fn(in.Nh, in.Nc, in.ph);
    const double bias = in.r * (in.Nh - in.Nc);
    if (in.tau == 0.0) {
        return bias * in.Nh * (1.0 + in.ph) / fn;
    }
    return bias * (in.Nh * (1.0 - in.ph * in.ph) + in.tau) /
           ((1.0 - in.ph) * fn + 2.0 * in.tau * (n + 1.0));
}

/// Strong-squeezing ratio j/j_o at Nh = Nc, tau = 0, pc = 1: 2(1 + ph)/(3 + ph).
inline double flux_ratio_nobias(double ph) {
    if (!(ph >= 0.0 && ph <= 1.0)) {
        throw DomainError("flux_ratio_nobias requires ph in [0, 1]");
    }
    return 2.0 * (1.0 + ph) / (3.0 + ph);
}

/// Flux-maximising hot coherence under strong squeezing and strong bias:
///   (2 Nc (pc² + 1) + 1 - sqrt((1 - pc²)(4 Nc² (1 - pc²) + 4 Nc + 1))) / ((4 Nc + 1) pc).
/// This is the root of the stationarity condition lying in [0, 1]; it tends
/// to (1 - sqrt(1 - pc²))/pc as Nc -> 0 and equals 1 at pc = 1.
inline double ph_star_biased(double Nc, double pc) {
    if (!(pc > 0.0) || pc > 1.0) {
        throw DomainError("ph_star_biased requires 0 < pc <= 1");
    }
    if (Nc < 0.0) {
        throw DomainError("ph_star_biased requires Nc >= 0");
    }
    if (pc == 1.0) {
        return 1.0;
    }
    const double q = 1.0 - pc * pc;
    const double root = std::sqrt(q * (4.0 * Nc * Nc * q + 4.0 * Nc + 1.0));
    return (2.0 * Nc * (pc * pc + 1.0) + 1.0 - root) / ((4.0 * Nc + 1.0) * pc);
}

/// Tc -> 0 form of ph_star_biased.
inline double ph_star_cold_limit(double pc) {
    if (!(pc > 0.0) || pc > 1.0) {
        throw DomainError("ph_star_cold_limit requires 0 < pc <= 1");
    }
    return (1.0 - std::sqrt(1.0 - pc * pc)) / pc;
}

namespace detail {
inline double highbias_denominator(const LimitInputs& in) {
    const double g2 = in.g * in.g;
    const double p2 = in.ph * in.ph;
    return g2 * (4.0 * in.Nl + p2 + 1.0) - 2.0 * (p2 - 3.0) * in.r;
}
}  // namespace detail

/// Upper-level populations for Th >> Tc: returns (rhoaa, rhobb).
inline std::pair<double, double> highbias_populations(const LimitInputs& in) {
    const double g2 = in.g * in.g;
    const double p2 = in.ph * in.ph;
    const double D = detail::highbias_denominator(in);
    const double aa = (p2 + 1.0) * (g2 * in.Nl + 2.0 * in.r) / D;
    const double bb = g2 * (in.Nl + 1.0) * (p2 + 1.0) / D;
    return {aa, bb};
}

/// Flux for Th >> Tc: 2 g² r Ñl (1 + ph²) / (g² (1 + 4 Nl + ph²) - 2 r (ph² - 3)).
inline double highbias_flux(const LimitInputs& in) {
    const double g2 = in.g * in.g;
    return 2.0 * g2 * in.r * (in.Nl + 1.0) * (1.0 + in.ph * in.ph) /
           detail::highbias_denominator(in);
}

/// Coherence-unaffected flux for Th >> Tc: 2 g² Ñl r / (g² (1 + 4 Nl) + 6 r).
inline double highbias_flux_jo(const LimitInputs& in) {
    const double g2 = in.g * in.g;
    return 2.0 * g2 * (in.Nl + 1.0) * in.r / (g2 * (1.0 + 4.0 * in.Nl) + 6.0 * in.r);
}

/// Strong-bias flux at x -> inf relative to the unsqueezed classical flux:
/// (1 + ph²)(1 + (6 r - 3 g²)/(4 g² ñl)) with ñl = nl + 1 the bare cavity
/// emission factor.
inline double highbias_classical_ratio(double ph, double r, double g, double nl) {
    const double g2 = g * g;
    return (1.0 + ph * ph) * (1.0 + (6.0 * r - 3.0 * g2) / (4.0 * g2 * (nl + 1.0)));
}

}  // namespace sqhe
