#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reqvar/calibration.hpp"

namespace reqvar {

struct ReqEstimate {
    double r_eq = 0.0;   // K/W
    double sigma = 0.0;  // K/W; infinite when a resistance lies on a flat likelihood direction
    std::string model;
    double duration_days = 0.0;
    std::string sample_id;
    bool converged = true;
};

enum class SigmaRule {
    perfect_correlation,  // sqrt(sum_i sum_j s_i s_j)
    covariance,           // sqrt(sum_i sum_j cov_ij), delta-mapped
};

// R_eq as the sum of the series resistances. Throws RefusalError on a non-converged fit.
ReqEstimate infer_req(const Estimate& est, SigmaRule rule = SigmaRule::perfect_correlation);

// Gaussian mass of N(r_eq, sigma^2) inside [0.95, 1.05] * target.
double interpretability(double r_eq, double sigma, double target);

struct AcfResult {
    std::vector<double> acf;  // lags 0..max_lag
    double bound = 0.0;       // 1.96 / sqrt(N)
    int exceedances = 0;
    int allowed_exceedances = 0;
    bool white = false;
};

// Throws UndefinedIndexError for constant residuals, ArgumentError for N < 3 max_lag.
AcfResult residual_autocorrelation(const std::vector<double>& residuals, int max_lag);

struct TwoThirds {
    double head = 0.0;  // R_eq from the first ceil(2N/3) days
    double tail = 0.0;  // R_eq from the last ceil(2N/3) days
};

struct ConvergenceVerdict {
    std::vector<double> durations;
    std::vector<double> pairwise_deviations;  // %, signed, one per consecutive pair
    bool criterion_min_duration_met = false;
    bool criterion_24h_met = false;
    bool criterion_two_thirds_met = false;
    bool two_thirds_assessed = false;
    std::optional<double> two_thirds_deviation;  // %
    std::optional<double> first_pass_duration;   // days
};

// Series ordered by strictly increasing duration. Throws NotAssessableError for fewer
// than two estimates.
ConvergenceVerdict iso9869_convergence(const std::vector<ReqEstimate>& series, double threshold_pct = 5.0,
                                       const std::optional<TwoThirds>& two_thirds = std::nullopt);

// Days covered by each of the two-thirds sub-fits of an N-day dataset.
int two_thirds_days(double longest_days);

std::string req_estimate_to_json(const ReqEstimate& r);
std::string convergence_to_json(const ConvergenceVerdict& v);

}  // namespace reqvar
