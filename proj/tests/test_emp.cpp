#include "sqhe/emp.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace sqhe;

namespace {

EngineParameters params(double Th, double Tc, double Tl) {
    EngineParameters p;
    p.Th = Th;
    p.Tc = Tc;
    p.Tl = Tl;
    return p;
}

}  // namespace

TEST(SweepVariable, RoundTrip) {
    for (auto v : {SweepVariable::x, SweepVariable::xh, SweepVariable::xc, SweepVariable::Ea,
                   SweepVariable::ph}) {
        EXPECT_EQ(parse_sweep_variable(to_string(v)), v);
    }
    EXPECT_THROW(parse_sweep_variable("Tq"), DomainError);
}

TEST(OptimizationSpec, DefaultsAndValidation) {
    const EngineParameters p;
    const auto ea = OptimizationSpec::defaults_for(SweepVariable::Ea, p);
    EXPECT_DOUBLE_EQ(ea.lower, p.Eb + 0.01);
    EXPECT_DOUBLE_EQ(ea.upper, 10 * p.Eb);
    EXPECT_EQ(OptimizationSpec::defaults_for(SweepVariable::ph, p).upper, 1.0);
    EXPECT_EQ(OptimizationSpec::defaults_for(SweepVariable::xc, p).upper, 10.0);
    OptimizationSpec s;
    s.lower = 2.0;
    s.upper = 1.0;
    EXPECT_THROW(s.validate(), DomainError);
    s = {};
    s.grid_points = 3;
    EXPECT_THROW(s.validate(), DomainError);
}

TEST(ReferenceEfficiencies, HandExamples) {
    const EngineParameters p;
    const auto o = occupations(p, SqueezeSet{});
    const auto zero = reference_efficiencies(0.0, p, o);
    EXPECT_EQ(zero.eta_ca, 0.0);
    EXPECT_EQ(zero.eta_upper, 0.0);
    const auto r = reference_efficiencies(0.75, p, o);
    EXPECT_DOUBLE_EQ(r.eta_ca, 0.5);
    EXPECT_DOUBLE_EQ(r.eta_upper, 0.6);
    EXPECT_THROW(reference_efficiencies(1.0, p, o), DomainError);
    EXPECT_THROW(reference_efficiencies(-0.1, p, o), DomainError);
}

TEST(ReferenceEfficiencies, ModifiedTemperature) {
    const auto p = params(2.0, 0.5, 0.9);
    EXPECT_NEAR(reference_efficiencies(0.5, p, occupations(p, SqueezeSet{})).Thm, 2.0, 1e-14);
    const auto hot = reference_efficiencies(0.5, p, occupations(p, {0, 1.0, 0, 0, 0}));
    EXPECT_GT(hot.Thm, 2.0);
}

TEST(ReferenceEfficiencies, LeeForms) {
    // eta_m = 1/2 when Tc = Thm / 2.
    const auto p = params(2.0, 1.0, 0.9);
    const auto o = occupations(p, SqueezeSet{});
    const double em = 0.5;
    const double std_form = em * em / (1.0 - (1.0 - em) * std::log(1.0 - em));
    const double intro = em * em / (em - (1.0 - em) * std::log(1.0 - em));
    EXPECT_NEAR(reference_efficiencies(0.5, p, o).eta_L, std_form, 1e-14);
    EXPECT_NEAR(reference_efficiencies(0.5, p, o, EtaLForm::intro).eta_L, intro, 1e-14);
    auto eq = p;
    eq.Tc = eq.Th;
    EXPECT_NEAR(reference_efficiencies(0.0, eq, o).eta_L, 0.0, 1e-15);
}

TEST(MaximizePower, LocalMaximumCertificate) {
    for (auto v : {SweepVariable::x, SweepVariable::Ea}) {
        const auto p = v == SweepVariable::x ? params(0.8, 0.4, 0.1) : params(1.0, 0.5, 1.0);
        const SqueezeSet q{1.0, 0, 0, 0, 0};
        const auto spec = OptimizationSpec::defaults_for(v, p);
        const auto res = maximize_power(p, q, spec);
        ASSERT_FALSE(res.boundary) << to_string(v);
        for (double d : {1e-3, 1e-2}) {
            for (double s : {-1.0, 1.0}) {
                auto pp = p;
                auto qq = q;
                assign_variable(pp, qq, v, res.argmax + s * d);
                EXPECT_LE(power(pp, qq), res.Pmax * (1 + 1e-12)) << to_string(v);
            }
        }
        auto pp = p;
        auto qq = q;
        assign_variable(pp, qq, v, res.argmax);
        EXPECT_DOUBLE_EQ(power(pp, qq), res.Pmax);
    }
}

TEST(MaximizePower, GenuineBoundaryIsFlagged) {
    // Squeezing the cold bath only raises Nc, so the flux and the power fall.
    const auto p = params(2.0, 0.5, 0.9);
    const auto spec = OptimizationSpec::defaults_for(SweepVariable::xc, p);
    const auto res = maximize_power(p, SqueezeSet{}, spec);
    EXPECT_TRUE(res.boundary);
    EXPECT_LE(res.argmax, spec.refine_tol);
}

TEST(MaximizePower, EfficiencyIsWorkOverHeat) {
    const auto p = params(1.0, 0.5, 1.0);
    const SqueezeSet q{1.0, 0, 0, 0, 0};
    const auto res = maximize_power(p, q, OptimizationSpec::defaults_for(SweepVariable::xc, p));
    EXPECT_NEAR(res.emp, useful_work(p, occupations(p, q)).eta, 1e-15);
    EXPECT_DOUBLE_EQ(res.etaC, 0.5);
}

TEST(EmpSweep, BathSqueezingIsExactlyLinear) {
    // W does not depend on the bath squeezing, so eta = c + m etaC with
    // m = Th Wdiss/Qh and c = (Ea - Eb - Th Wdiss)/Qh.
    const auto p = params(1.0, 0.5, 1.0);
    for (double x : {0.0, 1.0, 10.0}) {
        const SqueezeSet q{x, 0, 0, 0, 0};
        const auto w = useful_work(p, occupations(p, q));
        const double m = p.Th * w.Wdiss / w.Qh;
        const double c = (p.cavity_gap() - p.Th * w.Wdiss) / w.Qh;
        const auto grid = linspace(0.05, 0.6, 6);
        const auto xc = emp_sweep(p, q, OptimizationSpec::defaults_for(SweepVariable::xc, p), grid);
        const auto xh = emp_sweep(p, q, OptimizationSpec::defaults_for(SweepVariable::xh, p), grid);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            EXPECT_NEAR(xc[i].emp, c + m * grid[i], 1e-12);
            EXPECT_EQ(xc[i].emp, xh[i].emp);
        }
    }
}

TEST(EmpSweep, StaysBelowCurzonAhlbornUpperBound) {
    auto p = params(1.0, 0.5, 1.0);
    const SqueezeSet q{1.0, 0, 0, 0, 0};
    const auto grid = linspace(0.05, 0.8, 16);
    const auto res = emp_sweep(p, q, OptimizationSpec::defaults_for(SweepVariable::Ea, p), grid);
    for (const auto& r : res) {
        EXPECT_LE(r.emp, r.eta_upper + 1e-12);
        EXPECT_LT(r.emp, r.etaC);
    }
}

TEST(EmpSweep, DeterministicAcrossJobs) {
    const auto p = params(1.0, 0.5, 1.0);
    const SqueezeSet q{1.0, 0, 0, 0, 0};
    const auto spec = OptimizationSpec::defaults_for(SweepVariable::Ea, p);
    const auto grid = linspace(0.05, 0.8, 9);
    const auto a = emp_sweep(p, q, spec, grid, 1);
    const auto b = emp_sweep(p, q, spec, grid, 4);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].argmax, b[i].argmax);
        EXPECT_EQ(a[i].Pmax, b[i].Pmax);
        EXPECT_EQ(a[i].emp, b[i].emp);
    }
}

TEST(EmpSweep, ColdTemperatureConvention) {
    const auto p = params(2.0, 0.5, 1.0);
    const auto res = emp_sweep(p, SqueezeSet{}, OptimizationSpec::defaults_for(SweepVariable::xc, p),
                               {0.25});
    EXPECT_DOUBLE_EQ(res[0].etaC, 0.25);
}

TEST(EmpSweep, RejectsBadGrid) {
    const EngineParameters p;
    const auto spec = OptimizationSpec::defaults_for(SweepVariable::x, p);
    EXPECT_THROW(emp_sweep(p, SqueezeSet{}, spec, {}), DomainError);
    EXPECT_THROW(emp_sweep(p, SqueezeSet{}, spec, {0.0}), DomainError);
    EXPECT_THROW(emp_sweep(p, SqueezeSet{}, spec, {1.0}), DomainError);
}

TEST(Linspace, Endpoints) {
    const auto v = linspace(0.05, 0.6, 12);
    EXPECT_EQ(v.front(), 0.05);
    EXPECT_EQ(v.back(), 0.6);
    EXPECT_EQ(linspace(3.0, 4.0, 1), std::vector<double>{3.0});
    EXPECT_THROW(linspace(0, 1, 0), DomainError);
}
