#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "reqvar/bfgs.hpp"
#include "reqvar/dataset.hpp"
#include "reqvar/errors.hpp"
#include "reqvar/kalman.hpp"

namespace reqvar {

struct ParameterSpec {
    std::string name;
    double lower;  // natural units; restarts are drawn log-uniformly in [lower, upper]
    double upper;
};

// A stochastic RC structure whose free parameters are all positive. The initial
// state is derived from the first observations; the initial variance is fixed.
class GreyBoxModel {
public:
    virtual ~GreyBoxModel() = default;
    virtual std::string_view name() const = 0;
    virtual const std::vector<ParameterSpec>& parameters() const = 0;
    // Throws NumericalError when the recursion breaks down.
    virtual KalmanOutput evaluate(std::span<const double> theta, const SimDataset& ds, bool keep_trace) const = 0;
    // Indices of the resistances in series between indoor and outdoor.
    virtual std::vector<std::size_t> resistance_indices() const = 0;
    // A physically plausible starting point derived from the data (natural units).
    virtual std::vector<double> informed_start(const SimDataset& ds) const = 0;

    double r_eq(std::span<const double> theta) const;
};

// Indoor/envelope states, R_o, R_i, C_w, C_i, A_w, process noise on both states.
class TwoStateModel final : public GreyBoxModel {
public:
    explicit TwoStateModel(WallCoupling coupling = WallCoupling::consistent, double p0 = 1.0);
    std::string_view name() const override { return "TwTi_RoRi_Aw"; }
    const std::vector<ParameterSpec>& parameters() const override { return params_; }
    KalmanOutput evaluate(std::span<const double> theta, const SimDataset& ds, bool keep_trace) const override;
    std::vector<std::size_t> resistance_indices() const override { return {0, 1}; }
    std::vector<double> informed_start(const SimDataset& ds) const override;

    static RcParameters unpack(std::span<const double> theta, const SimDataset& ds, double p0);
    static std::vector<double> pack(const RcParameters& p);

private:
    WallCoupling coupling_;
    double p0_;
    std::vector<ParameterSpec> params_;
};

// Single indoor state with one resistance, one capacitance and a solar aperture.
class OneStateModel final : public GreyBoxModel {
public:
    explicit OneStateModel(double p0 = 1.0);
    std::string_view name() const override { return "Ti_RA"; }
    const std::vector<ParameterSpec>& parameters() const override { return params_; }
    KalmanOutput evaluate(std::span<const double> theta, const SimDataset& ds, bool keep_trace) const override;
    std::vector<std::size_t> resistance_indices() const override { return {0}; }
    std::vector<double> informed_start(const SimDataset& ds) const override;

private:
    double p0_;
    std::vector<ParameterSpec> params_;
};

// Overall resistance from the ratio of summed temperature difference to summed
// heating power, clamped to [1e-4, 1] K/W.
double ratio_resistance(const SimDataset& ds);

struct FitOptions {
    int n_restarts = 8;          // log-uniform draws within the bounds
    bool informed_start = true;  // one more start from informed_start()
    std::uint64_t seed = 0;
    BfgsOptions bfgs;
    double hessian_step = 1e-3;  // in log-parameter space
};

struct RestartRecord {
    std::vector<double> start;  // natural units
    std::vector<double> theta;  // natural units at termination
    double log_likelihood = 0.0;
    double r_eq = 0.0;
    bool converged = false;
    int iterations = 0;
    std::string status;
};

struct CovarianceResult {
    Eigen::MatrixXd matrix;           // over log-parameters
    bool singular = false;            // some directions had no curvature (infinite variance)
    bool clipped = false;             // negative eigenvalues were clipped to zero
    double min_eigenvalue_raw = 0.0;  // of the unclipped inverse
    std::vector<std::size_t> at_bound;  // held fixed (zero rows and columns)
};

struct Estimate {
    std::string model;
    std::vector<std::string> names;
    std::vector<double> theta;  // natural units
    CovarianceResult covariance;
    double log_likelihood = 0.0;
    bool converged = false;
    int n_restarts_used = 0;
    std::vector<double> residuals;
    std::vector<RestartRecord> restarts;
    std::string note;
    double r_eq = 0.0;
    std::vector<std::size_t> resistance_indices;

    std::size_t index(std::string_view name) const;
    double value(std::string_view name) const { return theta[index(name)]; }
    // Standard deviation of a parameter in natural units by the delta method.
    double natural_sd(std::size_t i) const;
};

// Multi-start BFGS on the negative log-likelihood over bounded log-parameters.
// Throws FitFailure when no restart reaches a finite likelihood.
Estimate fit_ml(const GreyBoxModel& model, const SimDataset& ds, const FitOptions& options = {});
Estimate fit_ml(const SimDataset& ds, const FitOptions& options = {});

class FitFailure : public Error {
public:
    FitFailure(const std::string& what, std::vector<RestartRecord> diagnostics)
        : Error(what), diagnostics_(std::move(diagnostics)) {}
    const std::vector<RestartRecord>& diagnostics() const noexcept { return diagnostics_; }

private:
    std::vector<RestartRecord> diagnostics_;
};

// Inverse observed information of an objective at a point: central-difference
// Hessian, symmetrized, pseudo-inverted with null directions reported as infinite
// marginal variance and negative curvature clipped.
// Coordinates listed in `fixed` are held at their value.
CovarianceResult covariance_from_objective(const Objective& negloglik, const Eigen::VectorXd& at, double step,
                                           const std::vector<std::size_t>& fixed = {});

CovarianceResult estimate_covariance(const GreyBoxModel& model, std::span<const double> theta_ml,
                                     const SimDataset& ds, double step = 1e-3);

std::string estimate_to_json(const Estimate& est);
Estimate estimate_from_json(const std::string& text);

}  // namespace reqvar
