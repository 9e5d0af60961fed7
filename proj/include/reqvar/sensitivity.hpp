#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "reqvar/inference.hpp"
#include "reqvar/weather.hpp"

namespace reqvar {

struct GroupIndex {
    double s1 = 0.0;
    double se = 0.0;
};

// Centred pick-freeze estimate with a paired-row bootstrap standard error.
// Throws UndefinedIndexError when the pooled output variance is zero.
GroupIndex first_order_group_index(std::span<const double> y_a, std::span<const double> y_c,
                                   std::uint64_t bootstrap_seed = 0, int n_bootstrap = 500);

struct GroupEntry {
    WeatherVariable group = WeatherVariable::t_out;
    bool defined = false;
    double s1 = 0.0;
    double se = 0.0;
    double partial_variance = 0.0;
};

struct SensitivityReport {
    double duration_days = 0.0;
    std::size_t n = 0;            // base rows in the plan
    std::size_t n_effective = 0;  // base rows with every partner fitted
    std::size_t failed_fits = 0;  // across all blocks
    bool unreliable = false;      // more than 20% of fits failed
    double total_variance = 0.0;  // over block A, (K/W)^2
    std::array<GroupEntry, kWeatherVariableCount> indices{};
    std::string error;  // set when the indices are undefined for this duration

    double unattributed_fraction() const;
};

inline constexpr double kSignificanceFloor = 0.1;

// `outputs[duration][row id]` is the R_eq of that plan row, absent for a failed fit.
// A base row is dropped from every block when any of its seven fits failed.
std::vector<SensitivityReport> run_sensitivity(const std::map<double, std::vector<std::optional<double>>>& outputs,
                                               const SamplePlan& plan, std::uint64_t bootstrap_seed = 0);

struct VariabilitySummary {
    double duration_days = 0.0;
    std::size_t count = 0;
    double median = 0.0;
    double std = 0.0;
    double q05 = 0.0;
    double q95 = 0.0;
    double fraction_within_10pct_of_median = 0.0;
    double fraction_interpretability_ge_05 = 0.0;
};

// Linear-interpolation quantile of sorted data.
double quantile_sorted(std::span<const double> sorted, double p);

// One row per duration holding at least 8 estimates; smaller buckets are left out
// and their durations appended to `skipped` when given.
std::vector<VariabilitySummary> summarize_variability(const std::vector<ReqEstimate>& estimates, double target,
                                                      std::vector<double>* skipped = nullptr);

std::string sensitivity_csv(const std::vector<SensitivityReport>& reports);
std::string variability_csv(const std::vector<VariabilitySummary>& rows);

}  // namespace reqvar
