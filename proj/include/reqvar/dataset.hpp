#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reqvar/time.hpp"

namespace reqvar {

// Calibration input: indoor temperature (output) and the three model inputs.
struct SimDataset {
    Timestamp start = 0;
    int step_s = 600;
    std::vector<double> t_in;   // degC
    std::vector<double> t_out;  // degC
    std::vector<double> i_sol;  // W/m2, global horizontal
    std::vector<double> p_h;    // W
    bool noisy = false;
    std::optional<std::uint64_t> seed;         // noise seed
    std::optional<std::uint64_t> parent_seed;  // seed of the dataset this was sliced from
    std::string spec_hash;

    std::size_t size() const noexcept { return t_in.size(); }
    Timestamp time_at(std::size_t k) const noexcept { return start + static_cast<Timestamp>(k) * step_s; }
    Timestamp end() const noexcept { return time_at(size()); }  // exclusive
};

struct NoiseLevels {
    double temperature = 0.2;  // degC
    double power = 20.0;       // W
    double solar = 5.0;        // W/m2
};

// Independent Gaussian noise per channel and step. Throws StateError if already noisy.
SimDataset add_measurement_noise(const SimDataset& ds, std::uint64_t seed, const NoiseLevels& levels = {});

// Contiguous slice [start, start + days). Throws RangeError when it leaves the dataset.
SimDataset extract_subset(const SimDataset& ds, Timestamp start, double duration_days);

// CSV `time,t_in,t_out,i_sol,p_h` plus a JSON sidecar at `<path>.json`.
void save_dataset(const std::filesystem::path& csv_path, const SimDataset& ds);
SimDataset load_dataset(const std::filesystem::path& csv_path);
std::string format_dataset_csv(const SimDataset& ds);
std::string dataset_sidecar_json(const SimDataset& ds);

}  // namespace reqvar
