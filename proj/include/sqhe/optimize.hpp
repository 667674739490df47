#pragma once

// Bounded scalar maximisation: coarse grid scan, then a bracketed
// Brent/golden-section refinement inside the winning cell.

#include "sqhe/core.hpp"

#include <boost/math/tools/minima.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

namespace sqhe {

struct ScalarMaximum {
    double argmax = 0.0;
    double value = 0.0;
    double grid_argmax = 0.0;
    double cell_width = 0.0;
    bool grid_disagreement = false;  // refined argmax left the winning cell
};

/// Maximises f on [lower, upper]. Ties on the grid go to the smaller argument,
/// and the refined point replaces the grid point only when strictly better.
inline ScalarMaximum maximize_scalar(const std::function<double(double)>& f, double lower,
                                     double upper, int grid_points, double refine_tol) {
    if (!(lower < upper) || grid_points < 2 || !(refine_tol > 0.0)) {
        throw DomainError("maximize_scalar requires lower < upper, grid_points >= 2, refine_tol > 0");
    }
    const double h = (upper - lower) / static_cast<double>(grid_points - 1);
    auto node = [&](int i) { return i == grid_points - 1 ? upper : lower + h * i; };

    int best = 0;
    double best_val = f(node(0));
    if (!std::isfinite(best_val)) {
        throw NumericalError("objective is not finite at the lower bound");
    }
    for (int i = 1; i < grid_points; ++i) {
        const double v = f(node(i));
        if (!std::isfinite(v)) {
            throw NumericalError("objective is not finite on the scan grid");
        }
        if (v > best_val) {
            best_val = v;
            best = i;
        }
    }

    ScalarMaximum out;
    out.grid_argmax = node(best);
    out.cell_width = h;
    out.argmax = out.grid_argmax;
    out.value = best_val;

    const double a = node(std::max(best - 1, 0));
    const double b = node(std::min(best + 1, grid_points - 1));
    // Bits of precision chosen so the bracket shrinks well below refine_tol.
    const int bits = std::clamp(
        static_cast<int>(std::ceil(-std::log2(refine_tol / std::max(1.0, std::abs(b))))) + 2, 8,
        std::numeric_limits<double>::digits / 2);
    std::uintmax_t max_iter = 200;
    const auto [xr, neg] = boost::math::tools::brent_find_minima(
        [&](double t) { return -f(t); }, a, b, bits, max_iter);
    if (-neg > best_val) {
        out.argmax = xr;
        out.value = -neg;
    }
    out.grid_disagreement = std::abs(out.argmax - out.grid_argmax) > h;
    return out;
}

}  // namespace sqhe
