#pragma once

// =============================================================================
// sqhe - four-level coherent heat engine with squeezed reservoirs and cavity
// =============================================================================
// Parameter containers, occupation factors and the error types shared by the
// rest of the library. Units: k_B = hbar = 1 throughout.
// =============================================================================

#include <cmath>
#include <stdexcept>
#include <string>

namespace sqhe {

/// Invalid physical input (negative temperature, bad level ordering, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A numerical procedure could not produce a trustworthy answer.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The constrained steady-state system is rank deficient.
class SingularSystemError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Largest squeeze magnitude accepted; cosh(2x) overflows a double near x = 355.
inline constexpr double kMaxSqueeze = 300.0;

// -----------------------------------------------------------------------------
// Domain types
// -----------------------------------------------------------------------------

/// Level energies, couplings, dephasing and bath temperatures.
/// Defaults are the fixed engine parameters used throughout the study
/// (E1 = E2 = 0.1, Eb = 0.4, Ea = 1.5, g = 1, r = 0.7, tau = 0.5).
struct EngineParameters {
    double E1 = 0.1;
    double E2 = 0.1;
    double Eb = 0.4;
    double Ea = 1.5;
    double g = 1.0;    // system-cavity coupling
    double r = 0.7;    // symmetric system-bath coupling
    double tau = 0.5;  // dephasing rate
    double Th = 2.0;
    double Tc = 0.5;
    double Tl = 0.9;

    double hot_gap() const { return Ea - E1; }
    double cold_gap() const { return Eb - E1; }
    double cavity_gap() const { return Ea - Eb; }

    /// Throws DomainError unless Ea > Eb > E1 = E2 >= 0, all temperatures
    /// are positive, g, r > 0 and tau >= 0.
    void validate() const {
        auto all_finite = std::isfinite(E1) && std::isfinite(E2) && std::isfinite(Eb) &&
                          std::isfinite(Ea) && std::isfinite(g) && std::isfinite(r) &&
                          std::isfinite(tau) && std::isfinite(Th) && std::isfinite(Tc) &&
                          std::isfinite(Tl);
        if (!all_finite) {
            throw DomainError("engine parameters must be finite");
        }
        if (E1 != E2 || E1 < 0.0) {
            throw DomainError("lower levels must be degenerate and non-negative (E1 = E2 >= 0)");
        }
        if (!(Eb > E1) || !(Ea > Eb)) {
            throw DomainError("level ordering Ea > Eb > E1 violated");
        }
        if (!(Th > 0.0) || !(Tc > 0.0) || !(Tl > 0.0)) {
            throw DomainError("temperatures must be positive");
        }
        if (!(g > 0.0) || !(r > 0.0)) {
            throw DomainError("couplings g and r must be positive");
        }
        if (tau < 0.0) {
            throw DomainError("dephasing rate must be non-negative");
        }
    }
};

/// Squeeze magnitudes of the cavity (x) and the hot/cold reservoirs, plus the
/// coherence-strength parameters p_h, p_c = |cos phi|.
struct SqueezeSet {
    double x = 0.0;
    double xh = 0.0;
    double xc = 0.0;
    double ph = 0.0;
    double pc = 0.0;

    void validate() const {
        for (double s : {x, xh, xc}) {
            if (!(s >= 0.0) || s > kMaxSqueeze) {
                throw DomainError("squeeze magnitudes must lie in [0, " +
                                  std::to_string(kMaxSqueeze) + "]");
            }
        }
        for (double p : {ph, pc}) {
            if (!(p >= 0.0 && p <= 1.0)) {
                throw DomainError("coherence parameters must lie in [0, 1]");
            }
        }
    }

    /// Same squeezing, coherences switched off.
    SqueezeSet without_coherence() const { return {x, xh, xc, 0.0, 0.0}; }
};

/// Bare Bose-Einstein occupations and their squeezed counterparts.
struct OccupationSet {
    double nh = 0.0;
    double nc = 0.0;
    double nl = 0.0;
    double Nh = 0.0;
    double Nc = 0.0;
    double Nl = 0.0;
    double n = 0.0;  // Nh + Nc
    double y = 0.0;  // Nc pc + Nh ph

    // Emission factors N + 1.
    double Nh_tilde() const { return Nh + 1.0; }
    double Nc_tilde() const { return Nc + 1.0; }
    double Nl_tilde() const { return Nl + 1.0; }

    /// Builds a set directly from squeezed occupations; the bare values are
    /// set equal to the squeezed ones. Used to probe limits such as Nh = Nc.
    static OccupationSet from_squeezed(double Nh, double Nc, double Nl, double ph, double pc) {
        OccupationSet o;
        o.nh = o.Nh = Nh;
        o.nc = o.Nc = Nc;
        o.nl = o.Nl = Nl;
        o.n = Nh + Nc;
        o.y = Nc * pc + Nh * ph;
        return o;
    }
};

// -----------------------------------------------------------------------------
// Operations
// -----------------------------------------------------------------------------

/// 1 / (exp(gap/T) - 1). Returns 0 when the mode is frozen out (gap/T beyond
/// the double range).
inline double bose_einstein(double gap, double T) {
    if (!(gap > 0.0) || !(T > 0.0)) {
        throw DomainError("bose_einstein requires gap > 0 and T > 0");
    }
    return 1.0 / std::expm1(gap / T);
}

/// cosh(2x)(n + 1/2) - 1/2, evaluated as n cosh(2x) + sinh(x)^2 so that
/// nearly empty modes keep their relative precision.
inline double squeezed_occupation(double n_bare, double x) {
    if (!(n_bare >= 0.0)) {
        throw DomainError("squeezed_occupation requires n_bare >= 0");
    }
    if (!(x >= 0.0) || x > kMaxSqueeze) {
        throw DomainError("squeeze magnitude outside [0, 300]");
    }
    if (x == 0.0) {
        return n_bare;
    }
    const double s = std::sinh(x);
    return n_bare * std::cosh(2.0 * x) + s * s;
}

/// Occupations for the hot bath (gap Ea - E1), the cold bath (gap Eb - E1)
/// and the cavity (gap Ea - Eb).
inline OccupationSet occupations(const EngineParameters& params, const SqueezeSet& sq) {
    params.validate();
    sq.validate();
    OccupationSet o;
    o.nh = bose_einstein(params.hot_gap(), params.Th);
    o.nc = bose_einstein(params.cold_gap(), params.Tc);
    o.nl = bose_einstein(params.cavity_gap(), params.Tl);
    o.Nh = squeezed_occupation(o.nh, sq.xh);
    o.Nc = squeezed_occupation(o.nc, sq.xc);
    o.Nl = squeezed_occupation(o.nl, sq.x);
    o.n = o.Nh + o.Nc;
    o.y = o.Nc * sq.pc + o.Nh * sq.ph;
    return o;
}

/// Carnot efficiency 1 - Tc/Th.
inline double carnot_efficiency(const EngineParameters& params) {
    return 1.0 - params.Tc / params.Th;
}

}  // namespace sqhe
