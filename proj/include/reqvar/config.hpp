#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "reqvar/calibration.hpp"
#include "reqvar/time.hpp"
#include "reqvar/weather.hpp"

namespace reqvar {

struct ExperimentConfig {
    std::filesystem::path building_spec;
    std::filesystem::path base_weather;
    std::filesystem::path output_dir;
    std::size_t n_samples = 32;
    std::uint64_t master_seed = 0;
    std::vector<double> durations{2, 3, 5, 8, 11, 15, 25};
    Timestamp run_start = 0;
    Timestamp run_end = 0;
    Timestamp subset_start = 0;
    int step_s = 600;
    bool noise = true;
    double amplitude = 1.0;  // scale on the stochastic part of the synthetic weather
    Site site;
    FitOptions fit;
    bool two_thirds = true;  // extra head/tail fits on block-A rows for the convergence check
    // Steady run for the target value.
    std::optional<double> target_t_out;  // default: mean base T_out over the run window
    double target_setpoint = 20.0;
    int target_days = 0;  // default: run window length in days
    int workers = 1;

    double run_days() const { return static_cast<double>(run_end - run_start) / 86400.0; }
};

// Relative paths are resolved against `base_dir`. Throws ConfigError.
ExperimentConfig parse_experiment_config(const std::string& text, const std::filesystem::path& base_dir = {});
ExperimentConfig load_experiment_config(const std::filesystem::path& path);
void validate(const ExperimentConfig& cfg);

// Canonical JSON of every field that influences results (not workers, not output_dir).
std::string experiment_config_canonical_json(const ExperimentConfig& cfg);
std::string experiment_config_hash(const ExperimentConfig& cfg);

}  // namespace reqvar
