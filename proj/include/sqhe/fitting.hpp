#pragma once

// Least-squares fits of EMP curves against eta_C:
//   linear     y = m e + c                               -> (m, c)
//   quadratic  y = c + a5 e + a6 e²                       -> (c, a5, a6)
//   sech form  y = a1 - sqrt(sech(a2 x)) sqrt(a3 - a4 e)  -> (a1, a2, a3, a4)

#include "sqhe/core.hpp"

#include <Eigen/Dense>
#include <unsupported/Eigen/LevenbergMarquardt>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace sqhe {

struct FitResult {
    std::vector<double> coefficients;
    double residual_rms = 0.0;
    std::string model_tag;
    bool converged = true;
};

namespace detail {

inline void check_samples(const std::vector<double>& xs, const std::vector<double>& ys,
                          std::size_t min_points) {
    if (xs.size() != ys.size()) throw DomainError("fit needs equally many xs and ys");
    if (xs.size() < min_points) {
        throw DomainError("fit needs at least " + std::to_string(min_points) + " points");
    }
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!std::isfinite(xs[i]) || !std::isfinite(ys[i])) throw DomainError("fit data must be finite");
    }
}

inline FitResult polynomial_fit(const std::vector<double>& xs, const std::vector<double>& ys,
                                int degree) {
    const auto n = static_cast<Eigen::Index>(xs.size());
    Eigen::MatrixXd A(n, degree + 1);
    Eigen::VectorXd b(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        double p = 1.0;
        for (int k = 0; k <= degree; ++k, p *= xs[static_cast<std::size_t>(i)]) A(i, k) = p;
        b[i] = ys[static_cast<std::size_t>(i)];
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
    if (qr.rank() < degree + 1) throw DomainError("degenerate design matrix");
    const Eigen::VectorXd coef = qr.solve(b);
    FitResult fit;
    fit.residual_rms = std::sqrt((A * coef - b).squaredNorm() / static_cast<double>(n));
    fit.coefficients.assign(coef.data(), coef.data() + coef.size());
    return fit;
}

}  // namespace detail

inline FitResult fit_linear(const std::vector<double>& xs, const std::vector<double>& ys) {
    detail::check_samples(xs, ys, 3);
    auto fit = detail::polynomial_fit(xs, ys, 1);
    fit.coefficients = {fit.coefficients[1], fit.coefficients[0]};
    fit.model_tag = "linear";
    return fit;
}

inline FitResult fit_quadratic(const std::vector<double>& xs, const std::vector<double>& ys) {
    detail::check_samples(xs, ys, 4);
    auto fit = detail::polynomial_fit(xs, ys, 2);
    fit.model_tag = "quadratic_with_intercept";
    return fit;
}

/// a1 - sqrt(sech(a2 x)) sqrt(a3 - a4 e). NaN outside the square-root domain.
inline double sech_form(double a1, double a2, double a3, double a4, double x, double etaC) {
    const double arg = a3 - a4 * etaC;
    if (!(arg >= 0.0)) return std::numeric_limits<double>::quiet_NaN();
    return a1 - std::sqrt(1.0 / std::cosh(a2 * x)) * std::sqrt(arg);
}

namespace detail {

/// Penalty residual for points outside the square-root domain, so that the
/// damped iteration rejects steps that leave it.
inline constexpr double kDomainPenalty = 1e3;

struct SechFunctor : Eigen::DenseFunctor<double> {
    const std::vector<double>& e;
    const std::vector<double>& y;
    double x;

    SechFunctor(const std::vector<double>& e_, const std::vector<double>& y_, double x_)
        : Eigen::DenseFunctor<double>(4, static_cast<int>(e_.size())), e(e_), y(y_), x(x_) {}

    int operator()(const InputType& a, ValueType& f) const {
        const double s = std::sqrt(1.0 / std::cosh(a[1] * x));
        for (std::size_t i = 0; i < e.size(); ++i) {
            const double arg = a[2] - a[3] * e[i];
            f[static_cast<Eigen::Index>(i)] =
                arg > 0.0 ? a[0] - s * std::sqrt(arg) - y[i] : kDomainPenalty;
        }
        return 0;
    }

    int df(const InputType& a, JacobianType& J) const {
        const double ch = std::cosh(a[1] * x);
        const double s = std::sqrt(1.0 / ch);
        // d sqrt(sech(u))/d a2 = -x tanh(u) sqrt(sech(u)) / 2
        const double ds = -0.5 * x * std::tanh(a[1] * x) * s;
        for (std::size_t i = 0; i < e.size(); ++i) {
            const auto r = static_cast<Eigen::Index>(i);
            const double arg = a[2] - a[3] * e[i];
            if (!(arg > 0.0)) {
                J.row(r).setZero();
                continue;
            }
            const double q = std::sqrt(arg);
            J(r, 0) = 1.0;
            J(r, 1) = -ds * q;
            J(r, 2) = -s / (2.0 * q);
            J(r, 3) = s * e[i] / (2.0 * q);
        }
        return 0;
    }
};

inline double sech_rms(const std::vector<double>& e, const std::vector<double>& y, double x,
                       const Eigen::VectorXd& a) {
    double ss = 0.0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        const double m = sech_form(a[0], a[1], a[2], a[3], x, e[i]);
        if (!std::isfinite(m)) return std::numeric_limits<double>::infinity();
        ss += (m - y[i]) * (m - y[i]);
    }
    return std::sqrt(ss / static_cast<double>(e.size()));
}

}  // namespace detail

/// Levenberg-Marquardt from every start on the grid a1 in {0.5, 0.8, 1},
/// a2 in {0.5, 1, 2}, a3, a4 in {-0.5, 0.1, 1}; starts outside the
/// square-root domain are skipped. Lowest RMS wins, exact ties go to the
/// lexicographically smallest coefficient vector. With x != 0 only a1,
/// sech(a2 x) a3 and sech(a2 x) a4 are determined by the data; a2 stays
/// wherever the winning start put it.
inline FitResult fit_sech_form(const std::vector<double>& etaC, const std::vector<double>& ys,
                               double x_squeeze) {
    detail::check_samples(etaC, ys, 8);
    if (!(x_squeeze >= 0.0)) throw DomainError("squeeze magnitude must be non-negative");

    const std::array<double, 3> g1{0.5, 0.8, 1.0};
    const std::array<double, 3> g2{0.5, 1.0, 2.0};
    const std::array<double, 3> g34{-0.5, 0.1, 1.0};

    FitResult best;
    best.model_tag = "sech_form";
    best.residual_rms = std::numeric_limits<double>::infinity();
    best.converged = false;
    bool any = false;

    for (double a1 : g1)
        for (double a2 : g2)
            for (double a3 : g34)
                for (double a4 : g34) {
                    Eigen::VectorXd a(4);
                    a << a1, a2, a3, a4;
                    if (!std::isfinite(detail::sech_rms(etaC, ys, x_squeeze, a))) continue;

                    detail::SechFunctor fn(etaC, ys, x_squeeze);
                    Eigen::LevenbergMarquardt<detail::SechFunctor> lm(fn);
                    lm.setMaxfev(2000);
                    lm.setXtol(1e-14);
                    lm.setFtol(1e-14);
                    const auto status = lm.minimize(a);
                    const double rms = detail::sech_rms(etaC, ys, x_squeeze, a);
                    if (!std::isfinite(rms)) continue;

                    std::vector<double> coef(a.data(), a.data() + 4);
                    const bool better = !any || rms < best.residual_rms ||
                                        (rms == best.residual_rms && coef < best.coefficients);
                    if (better) {
                        any = true;
                        best.coefficients = coef;
                        best.residual_rms = rms;
                        best.converged =
                            status != Eigen::LevenbergMarquardtSpace::TooManyFunctionEvaluation &&
                            status != Eigen::LevenbergMarquardtSpace::ImproperInputParameters;
                    }
                }
    if (!any) {
        best.coefficients = {g1[0], g2[0], g34[0], g34[0]};
    }
    return best;
}

}  // namespace sqhe
