#pragma once

// =============================================================================
// Population-coherence dynamics
// =============================================================================
// The reduced density matrix is described by the four populations
// (rho11, rho22, rhoaa, rhobb) coupled to the real part of the coherence
// rho12. The five equations of motion are linear, d/dt v = L v, so both the
// relaxation (fixed-step RK4) and the steady state (constrained linear
// solve) are computed from the same 5x5 rate operator.
// =============================================================================

#include "sqhe/core.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

namespace sqhe {

using Vector5 = Eigen::Matrix<double, 5, 1>;
using Matrix5 = Eigen::Matrix<double, 5, 5>;

/// Component order of the state vector.
enum Component : int { kRho11 = 0, kRho22 = 1, kRhoAA = 2, kRhoBB = 3, kRho12 = 4 };

struct EngineState {
    double rho11 = 1.0;
    double rho22 = 0.0;
    double rhoaa = 0.0;
    double rhobb = 0.0;
    double rho12 = 0.0;

    double trace() const { return rho11 + rho22 + rhoaa + rhobb; }

    Vector5 to_vector() const {
        Vector5 v;
        v << rho11, rho22, rhoaa, rhobb, rho12;
        return v;
    }

    static EngineState from_vector(const Vector5& v) {
        return {v[kRho11], v[kRho22], v[kRhoAA], v[kRhoBB], v[kRho12]};
    }

    /// Ground-state start: everything in |1>.
    static EngineState ground() { return {}; }
};

inline double max_abs_difference(const EngineState& a, const EngineState& b) {
    return (a.to_vector() - b.to_vector()).cwiseAbs().maxCoeff();
}

/// Generator of the linear dynamics: d/dt v = matrix * v.
struct RateOperator {
    Matrix5 matrix = Matrix5::Zero();

    Vector5 apply(const Vector5& v) const { return matrix * v; }
    EngineState apply(const EngineState& s) const {
        return EngineState::from_vector(matrix * s.to_vector());
    }
};

/// Transcribes the five equations of motion term by term:
///
///   d rho12/dt = -(r y/2)(rho11 + rho22) + r ph Ñh rhoaa + r pc Ñc rhobb - r(n + tau) rho12
///   d rhoii/dt = -r n rhoii + r Ñh rhoaa + r Ñc rhobb - r y rho12            (i = 1, 2)
///   d rhobb/dt = r Nc (rho11 + rho22) + g² Ñl rhoaa - (g² Nl + 2 r Ñc) rhobb + 2 r pc Nc rho12
///   d rhoaa/dt = r Nh (rho11 + rho22) - (g² Ñl + 2 r Ñh) rhoaa + g² Nl rhobb + 2 r ph Nh rho12
///
/// with Ñ = N + 1. Every bath term carries r, so the trace is conserved.
inline RateOperator build_rate_operator(const OccupationSet& occ, const EngineParameters& params,
                                        const SqueezeSet& sq) {
    if (!(params.r >= 0.0) || !(params.g >= 0.0) || !(params.tau >= 0.0)) {
        throw DomainError("rates must be non-negative");
    }
    const double r = params.r;
    const double g2 = params.g * params.g;
    const double tau = params.tau;
    const double Nh = occ.Nh;
    const double Nc = occ.Nc;
    const double Nl = occ.Nl;
    const double Nht = occ.Nh_tilde();
    const double Nct = occ.Nc_tilde();
    const double Nlt = occ.Nl_tilde();
    const double n = occ.n;
    const double y = occ.y;

    RateOperator L;
    auto& m = L.matrix;
    for (int i : {kRho11, kRho22}) {
        m(i, i) = -r * n;
        m(i, kRhoAA) = r * Nht;
        m(i, kRhoBB) = r * Nct;
        m(i, kRho12) = -r * y;
    }

    m(kRhoAA, kRho11) = r * Nh;
    m(kRhoAA, kRho22) = r * Nh;
    m(kRhoAA, kRhoAA) = -(g2 * Nlt + 2.0 * r * Nht);
    m(kRhoAA, kRhoBB) = g2 * Nl;
    m(kRhoAA, kRho12) = 2.0 * r * sq.ph * Nh;

    m(kRhoBB, kRho11) = r * Nc;
    m(kRhoBB, kRho22) = r * Nc;
    m(kRhoBB, kRhoAA) = g2 * Nlt;
    m(kRhoBB, kRhoBB) = -(g2 * Nl + 2.0 * r * Nct);
    m(kRhoBB, kRho12) = 2.0 * r * sq.pc * Nc;

    m(kRho12, kRho11) = -0.5 * r * y;
    m(kRho12, kRho22) = -0.5 * r * y;
    m(kRho12, kRhoAA) = r * sq.ph * Nht;
    m(kRho12, kRhoBB) = r * sq.pc * Nct;
    m(kRho12, kRho12) = -r * (n + tau);
    return L;
}

/// Convenience overload: occupations are computed from the parameters.
inline RateOperator build_rate_operator(const EngineParameters& params, const SqueezeSet& sq) {
    return build_rate_operator(occupations(params, sq), params, sq);
}

// -----------------------------------------------------------------------------
// Time evolution
// -----------------------------------------------------------------------------

struct TrajectoryPoint {
    double t = 0.0;
    EngineState state;
};

/// Step used for relaxation runs: 0.01 / max(r, g² Ñl).
inline double default_time_step(const OccupationSet& occ, const EngineParameters& params) {
    return 0.01 / std::max(params.r, params.g * params.g * occ.Nl_tilde());
}

/// Classical fixed-step RK4 from state0 up to t_final. The step is shrunk
/// slightly so that an integer number of steps lands exactly on t_final.
/// Every `stride`-th step is recorded, together with t = 0 and t = t_final.
/// Throws NumericalError if a population leaves [-1e-9, 1 + 1e-9].
inline std::vector<TrajectoryPoint> evolve(const EngineState& state0, const RateOperator& L,
                                           double t_final, double dt, std::size_t stride = 1) {
    if (!(dt > 0.0) || !(t_final > dt)) {
        throw DomainError("evolve requires dt > 0 and t_final > dt");
    }
    if (std::abs(state0.trace() - 1.0) > 1e-9) {
        throw DomainError("initial state must have unit trace");
    }
    stride = std::max<std::size_t>(stride, 1);

    const auto steps = static_cast<std::size_t>(std::ceil(t_final / dt));
    const double h = t_final / static_cast<double>(steps);
    const Matrix5& A = L.matrix;

    std::vector<TrajectoryPoint> out;
    out.reserve(steps / stride + 2);
    out.push_back({0.0, state0});

    Vector5 v = state0.to_vector();
    for (std::size_t k = 1; k <= steps; ++k) {
        const Vector5 k1 = A * v;
        const Vector5 k2 = A * (v + 0.5 * h * k1);
        const Vector5 k3 = A * (v + 0.5 * h * k2);
        const Vector5 k4 = A * (v + h * k3);
        v += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

        for (int i = 0; i < 4; ++i) {
            if (!(v[i] >= -1e-9 && v[i] <= 1.0 + 1e-9)) {
                throw NumericalError("population left [0, 1] during integration; step too large");
            }
        }
        if (k % stride == 0 || k == steps) {
            out.push_back({static_cast<double>(k) * h, EngineState::from_vector(v)});
        }
    }
    // The last sample sits exactly on t_final.
    out.back().t = t_final;
    return out;
}

// -----------------------------------------------------------------------------
// Steady state
// -----------------------------------------------------------------------------

/// Solves L v = 0 with rho11 + rho22 + rhoaa + rhobb = 1.
///
/// The rho11 row is replaced by the normalisation. The rhobb row is replaced
/// by the sum of the rhoaa and rhobb rows, which removes the large g² Nl
/// entries from one of the two equations without changing the solution; at
/// strong cavity squeezing the remaining system is then well conditioned.
/// One pass of iterative refinement with an extended-precision residual
/// follows. Throws SingularSystemError when the constrained system is rank
/// deficient.
inline EngineState steady_state(const RateOperator& L) {
    Matrix5 A = L.matrix;
    A.row(kRhoBB) += A.row(kRhoAA);
    A.row(kRho11) << 1.0, 1.0, 1.0, 1.0, 0.0;
    Vector5 b = Vector5::Zero();
    b[kRho11] = 1.0;

    if (!A.allFinite()) {
        throw NumericalError("rate operator has non-finite entries");
    }

    // Row equilibration.
    Vector5 scale;
    for (int i = 0; i < 5; ++i) {
        const double m = A.row(i).cwiseAbs().maxCoeff();
        if (m == 0.0) {
            throw SingularSystemError("steady-state system is rank deficient (zero row)");
        }
        scale[i] = 1.0 / m;
    }
    const Matrix5 As = scale.asDiagonal() * A;
    const Vector5 bs = scale.asDiagonal() * b;

    Eigen::FullPivLU<Matrix5> lu(As);
    lu.setThreshold(1e-12);
    if (!lu.isInvertible()) {
        throw SingularSystemError("steady-state system is rank deficient");
    }
    Vector5 v = lu.solve(bs);

    for (int pass = 0; pass < 2; ++pass) {
        Vector5 residual;
        for (int i = 0; i < 5; ++i) {
            long double acc = static_cast<long double>(bs[i]);
            for (int j = 0; j < 5; ++j) {
                acc -= static_cast<long double>(As(i, j)) * static_cast<long double>(v[j]);
            }
            residual[i] = static_cast<double>(acc);
        }
        v += lu.solve(residual);
    }
    if (!v.allFinite()) {
        throw NumericalError("steady-state solve produced non-finite values");
    }
    return EngineState::from_vector(v);
}

}  // namespace sqhe
