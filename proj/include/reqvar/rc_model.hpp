#pragma once

#include <array>
#include <cmath>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "reqvar/errors.hpp"

namespace reqvar {

// Parameters of the two-state envelope/indoor network with solar aperture.
struct RcParameters {
    double r_o = 0.0;        // K/W, outdoor to envelope
    double r_i = 0.0;        // K/W, envelope to indoor
    double c_w = 0.0;        // J/K
    double c_i = 0.0;        // J/K
    double a_w = 0.0;        // m2
    double sigma_w = 0.0;    // K/sqrt(s)
    double sigma_i = 0.0;    // K/sqrt(s)
    double sigma_eps = 0.0;  // K
    std::array<double, 2> x0{0.0, 0.0};  // [T_w, T_in], degC
    double p0 = 1.0;                      // K2

    double r_eq() const noexcept { return r_o + r_i; }
    // Throws ArgumentError on a violated positivity invariant.
    void validate() const;
};

// Which A(1,1) entry to use for the envelope node. `consistent` couples the node to
// both neighbours; `printed` keeps only the outdoor coupling.
enum class WallCoupling { consistent, printed };

template <int N, int M>
struct ContinuousSystem {
    Eigen::Matrix<double, N, N> a;
    Eigen::Matrix<double, N, M> b;
    Eigen::Matrix<double, N, N> sigma;  // diffusion intensity, K2/s
};

template <int N, int M>
struct DiscreteSystem {
    Eigen::Matrix<double, N, N> a;
    Eigen::Matrix<double, N, M> b;
    Eigen::Matrix<double, N, N> q;
};

// Inputs are ordered [T_out, I_sol, P_h].
ContinuousSystem<2, 3> continuous_matrices(const RcParameters& theta,
                                           WallCoupling coupling = WallCoupling::consistent);

// Zero-order-hold discretization. A_d and B_d come from the exponential of
// [[A, B], [0, 0]]; Q_d from Van Loan's [[-A, Sigma], [0, A^T]] construction.
// The Van Loan block grows like exp(|lambda| dt) for fast modes, so it is
// evaluated on dt / 2^k with |A| dt / 2^k <= 1 and doubled back with
// Q(2h) = A_d(h) Q(h) A_d(h)^T + Q(h).
template <int N, int M>
DiscreteSystem<N, M> discretize(const ContinuousSystem<N, M>& sys, double dt) {
    if (!(dt > 0.0)) throw ArgumentError("discretization step must be positive");
    constexpr int kB = N + M;
    Eigen::Matrix<double, kB, kB> aug = Eigen::Matrix<double, kB, kB>::Zero();
    aug.template topLeftCorner<N, N>() = sys.a * dt;
    aug.template topRightCorner<N, M>() = sys.b * dt;
    const Eigen::Matrix<double, kB, kB> e_aug = aug.exp();

    const double norm = sys.a.cwiseAbs().colwise().sum().maxCoeff() * dt;
    int halvings = 0;
    if (norm > 1.0) halvings = static_cast<int>(std::ceil(std::log2(norm)));
    if (!std::isfinite(norm) || halvings > 60) throw NumericalError(0, "non-finite or overly stiff drift matrix");
    const double h = std::ldexp(dt, -halvings);

    Eigen::Matrix<double, 2 * N, 2 * N> vl = Eigen::Matrix<double, 2 * N, 2 * N>::Zero();
    vl.template topLeftCorner<N, N>() = -sys.a * h;
    vl.template topRightCorner<N, N>() = sys.sigma * h;
    vl.template bottomRightCorner<N, N>() = sys.a.transpose() * h;
    const Eigen::Matrix<double, 2 * N, 2 * N> e_vl = vl.exp();
    const Eigen::Matrix<double, N, N> f22 = e_vl.template bottomRightCorner<N, N>();
    const Eigen::Matrix<double, N, N> f12 = e_vl.template topRightCorner<N, N>();
    Eigen::Matrix<double, N, N> q = f22.transpose() * f12;
    Eigen::Matrix<double, N, N> a_h = f22.transpose();
    for (int k = 0; k < halvings; ++k) {
        q = (a_h * q * a_h.transpose() + q).eval();
        a_h = (a_h * a_h).eval();
    }

    DiscreteSystem<N, M> out;
    out.a = e_aug.template topLeftCorner<N, N>();
    out.b = e_aug.template topRightCorner<N, M>();
    out.q = 0.5 * (q + q.transpose());
    if (!out.a.allFinite() || !out.b.allFinite() || !out.q.allFinite())
        throw NumericalError(0, "non-finite discretized system");
    return out;
}

}  // namespace reqvar
