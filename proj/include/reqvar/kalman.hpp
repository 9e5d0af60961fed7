#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "reqvar/dataset.hpp"
#include "reqvar/rc_model.hpp"

namespace reqvar {

struct KalmanOutput {
    double log_likelihood = 0.0;
    std::vector<double> residuals;  // innovations, K
    std::vector<double> variances;  // innovation variances, K2
};

// Predict/update recursion for y_k = C x_k + eps_k with inputs held constant over
// each step (row k of the dataset drives the transition k -> k+1). Every
// observation, including the first, contributes to the likelihood. Pass null
// trace to skip storing residuals.
template <int N>
double kalman_recursion(const DiscreteSystem<N, 3>& sys, const Eigen::Matrix<double, 1, N>& c, double meas_var,
                        const Eigen::Matrix<double, N, 1>& x0, const Eigen::Matrix<double, N, N>& p0,
                        const SimDataset& ds, KalmanOutput* trace) {
    using Vec = Eigen::Matrix<double, N, 1>;
    using Mat = Eigen::Matrix<double, N, N>;
    const std::size_t n = ds.size();
    if (trace) {
        trace->residuals.resize(n);
        trace->variances.resize(n);
    }
    constexpr double kLog2Pi = 1.8378770664093454836;
    Vec x = x0;
    Mat p = p0;
    double loglik = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double innov = ds.t_in[k] - (c * x)(0);
        const Vec pct = p * c.transpose();
        const double s = (c * pct)(0) + meas_var;
        if (!(s > 0.0) || !std::isfinite(s) || !std::isfinite(innov))
            throw NumericalError(k, "innovation variance is not positive and finite");
        const Vec gain = pct / s;
        x += gain * innov;
        p -= gain * pct.transpose();
        p = 0.5 * (p + p.transpose()).eval();
        loglik -= 0.5 * (kLog2Pi + std::log(s) + innov * innov / s);
        if (trace) {
            trace->residuals[k] = innov;
            trace->variances[k] = s;
        }
        if (k + 1 < n) {
            const Eigen::Vector3d u(ds.t_out[k], ds.i_sol[k], ds.p_h[k]);
            x = sys.a * x + sys.b * u;
            p = sys.a * p * sys.a.transpose() + sys.q;
        }
    }
    if (trace) trace->log_likelihood = loglik;
    return loglik;
}

// Initial state used by the two-state model: measured indoor temperature, and the
// envelope node on the steady-state line between indoor and outdoor.
std::array<double, 2> initial_state_from_data(const RcParameters& theta, const SimDataset& ds);

// Log-likelihood of the measured indoor temperature under the two-state model,
// using theta.x0 and theta.p0 as given.
KalmanOutput kalman_loglik(const RcParameters& theta, const SimDataset& ds,
                           WallCoupling coupling = WallCoupling::consistent);

}  // namespace reqvar
