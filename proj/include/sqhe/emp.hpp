#pragma once

// =============================================================================
// Efficiency at maximum power
// =============================================================================
// Power P = j W is maximised over one released parameter; the efficiency
// W/Qh at the maximiser is the EMP. Reference efficiencies (Curzon-Ahlborn,
// the eta_C/(2 - eta_C) bound and the logarithmic form built on the modified
// hot temperature) are evaluated at the same operating point.
// =============================================================================

#include "sqhe/core.hpp"
#include "sqhe/dynamics.hpp"
#include "sqhe/observables.hpp"
#include "sqhe/optimize.hpp"
#include "sqhe/parallel.hpp"

#include <array>
#include <cmath>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sqhe {

enum class SweepVariable { x, xh, xc, Ea, ph };

inline constexpr std::array<std::pair<std::string_view, SweepVariable>, 5> kSweepVariables{{
    {"x", SweepVariable::x},
    {"xh", SweepVariable::xh},
    {"xc", SweepVariable::xc},
    {"Ea", SweepVariable::Ea},
    {"ph", SweepVariable::ph},
}};

inline SweepVariable parse_sweep_variable(std::string_view name) {
    for (const auto& [key, v] : kSweepVariables) {
        if (key == name) return v;
    }
    throw DomainError("unknown optimisation variable '" + std::string(name) +
                      "' (expected x, xh, xc, Ea or ph)");
}

inline std::string_view to_string(SweepVariable v) {
    for (const auto& [key, var] : kSweepVariables) {
        if (var == v) return key;
    }
    return "?";
}

/// Writes `value` into the parameter named by `v`.
inline void assign_variable(EngineParameters& params, SqueezeSet& sq, SweepVariable v,
                            double value) {
    switch (v) {
        case SweepVariable::x: sq.x = value; break;
        case SweepVariable::xh: sq.xh = value; break;
        case SweepVariable::xc: sq.xc = value; break;
        case SweepVariable::Ea: params.Ea = value; break;
        case SweepVariable::ph: sq.ph = value; break;
    }
}

struct OptimizationSpec {
    SweepVariable variable = SweepVariable::x;
    double lower = 0.0;
    double upper = 10.0;
    int grid_points = 256;
    double refine_tol = 1e-7;

    void validate() const {
        if (!(lower < upper)) throw DomainError("optimisation bounds require lower < upper");
        if (grid_points < 16) throw DomainError("grid_points must be at least 16");
        if (!(refine_tol > 0.0)) throw DomainError("refine_tol must be positive");
    }

    /// Squeeze magnitudes on [0, 10]; Ea on [Eb + 0.01, 10 Eb]; ph on [0, 1].
    static OptimizationSpec defaults_for(SweepVariable v, const EngineParameters& params) {
        OptimizationSpec s;
        s.variable = v;
        if (v == SweepVariable::Ea) {
            s.lower = params.Eb + 0.01;
            s.upper = 10.0 * params.Eb;
        } else if (v == SweepVariable::ph) {
            s.upper = 1.0;
        }
        return s;
    }
};

enum class EtaLForm { standard, intro };

struct ReferenceEfficiencies {
    double eta_ca = 0.0;
    double eta_upper = 0.0;
    double eta_L = 0.0;
    double Thm = 0.0;
};

/// eta_CA = 1 - sqrt(1 - eta_C), eta** = eta_C / (2 - eta_C),
/// Thm = (Ea - E1) / ln((1 + Nh)/Nh), eta_m = 1 - Tc/Thm and
/// eta_L = eta_m² / (D - (1 - eta_m) ln(1 - eta_m)) with D = 1 (standard) or
/// D = eta_m (intro form).
inline ReferenceEfficiencies reference_efficiencies(double etaC, const EngineParameters& params,
                                                    const OccupationSet& occ,
                                                    EtaLForm form = EtaLForm::standard) {
    if (!(etaC >= 0.0 && etaC < 1.0)) throw DomainError("reference efficiencies need 0 <= etaC < 1");
    if (!(occ.Nh > 0.0)) throw DomainError("modified temperature undefined for Nh = 0");
    ReferenceEfficiencies ref;
    ref.eta_ca = 1.0 - std::sqrt(1.0 - etaC);
    ref.eta_upper = etaC / (2.0 - etaC);
    ref.Thm = params.hot_gap() / std::log1p(1.0 / occ.Nh);
    const double em = 1.0 - params.Tc / ref.Thm;
    const double lead = form == EtaLForm::standard ? 1.0 : em;
    ref.eta_L = em * em / (lead - (1.0 - em) * std::log1p(-em));
    return ref;
}

struct EmpResult {
    double argmax = 0.0;
    double Pmax = 0.0;
    double emp = 0.0;
    double etaC = 0.0;
    double eta_ca = 0.0;
    double eta_upper = 0.0;
    double eta_L = 0.0;
    double Thm = 0.0;
    bool boundary = false;           // argmax within refine_tol of a bound
    bool grid_disagreement = false;  // refinement moved more than one cell
};

/// P = j W at a single operating point.
inline double power(const EngineParameters& params, const SqueezeSet& sq) {
    return operating_point(params, sq).P;
}

inline EmpResult maximize_power(const EngineParameters& params, const SqueezeSet& sq,
                                const OptimizationSpec& spec,
                                EtaLForm form = EtaLForm::standard) {
    spec.validate();
    params.validate();
    auto objective = [&](double value) {
        EngineParameters p = params;
        SqueezeSet s = sq;
        assign_variable(p, s, spec.variable, value);
        return power(p, s);
    };
    const auto best =
        maximize_scalar(objective, spec.lower, spec.upper, spec.grid_points, spec.refine_tol);

    EngineParameters p = params;
    SqueezeSet s = sq;
    assign_variable(p, s, spec.variable, best.argmax);
    const auto occ = occupations(p, s);
    const auto work = useful_work(p, occ);

    EmpResult res;
    res.argmax = best.argmax;
    res.Pmax = best.value;
    res.emp = work.eta;
    res.etaC = carnot_efficiency(p);
    const auto ref = reference_efficiencies(res.etaC, p, occ, form);
    res.eta_ca = ref.eta_ca;
    res.eta_upper = ref.eta_upper;
    res.eta_L = ref.eta_L;
    res.Thm = ref.Thm;
    res.boundary = best.argmax - spec.lower <= spec.refine_tol ||
                   spec.upper - best.argmax <= spec.refine_tol;
    res.grid_disagreement = best.grid_disagreement;
    return res;
}

/// One EMP per Carnot efficiency; eta_C is realised as Tc = Th (1 - eta_C).
inline std::vector<EmpResult> emp_sweep(const EngineParameters& params, const SqueezeSet& sq,
                                        const OptimizationSpec& spec,
                                        const std::vector<double>& etaC_grid, unsigned jobs = 1,
                                        EtaLForm form = EtaLForm::standard) {
    if (etaC_grid.empty()) throw DomainError("etaC grid is empty");
    for (double e : etaC_grid) {
        if (!(e > 0.0 && e < 1.0)) throw DomainError("etaC values must lie in (0, 1)");
    }
    return parallel_map(etaC_grid.size(), jobs, [&](std::size_t i) {
        EngineParameters p = params;
        p.Tc = p.Th * (1.0 - etaC_grid[i]);
        return maximize_power(p, sq, spec, form);
    });
}

/// n evenly spaced values on [lo, hi] (inclusive).
inline std::vector<double> linspace(double lo, double hi, int n) {
    if (n < 1) throw DomainError("linspace needs at least one point");
    std::vector<double> v(static_cast<std::size_t>(n));
    if (n == 1) {
        v[0] = lo;
        return v;
    }
    const double h = (hi - lo) / (n - 1);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i == n - 1 ? hi : lo + h * i;
    return v;
}

}  // namespace sqhe
