#pragma once

#include <filesystem>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "reqvar/config.hpp"
#include "reqvar/dataset.hpp"
#include "reqvar/inference.hpp"
#include "reqvar/network.hpp"
#include "reqvar/weather.hpp"

namespace reqvar {

struct StageRecord {
    std::string key;  // hash of the inputs the stage depends on
    bool complete = false;
    bool cache_hit = false;
    double wall_s = 0.0;
    std::vector<std::string> files;  // relative to output_dir
};

struct RunManifest {
    std::string config_hash;
    std::map<std::string, StageRecord> stages;
    // "<sample_id>/<duration>" -> "ok" or "failed: <reason>"
    std::map<std::string, std::string> row_status;
};

std::string manifest_to_json(const RunManifest& m);
RunManifest manifest_from_json(const std::string& text);

// One fitted subset of one plan row.
struct FitRecord {
    double duration_days = 0.0;
    bool ok = false;         // a finite estimate was produced
    bool converged = false;  // and the fit passed the convergence checks
    double r_eq = std::numeric_limits<double>::quiet_NaN();
    double sigma = std::numeric_limits<double>::quiet_NaN();
    double interpretability = std::numeric_limits<double>::quiet_NaN();
    std::string reason;
};

struct RowResult {
    std::size_t row_id = 0;
    std::string sample_id;
    std::vector<FitRecord> fits;      // one per configured duration
    std::optional<TwoThirds> two_thirds;
};

std::string sample_id_of(const SampleRow& row);

struct PipelineHooks {
    // Called on each dataset after noise and before slicing (tests use it to inject faults).
    std::function<void(const SampleRow&, SimDataset&)> dataset;
};

class Pipeline {
public:
    explicit Pipeline(ExperimentConfig cfg, std::ostream* log = nullptr, PipelineHooks hooks = {});

    void generate_weather();
    void target();
    void sweep(bool resume = false);
    void report();
    void run_all(bool resume = false);

    const ExperimentConfig& config() const noexcept { return cfg_; }
    const RunManifest& manifest() const noexcept { return manifest_; }
    std::filesystem::path path(const std::string& relative) const { return cfg_.output_dir / relative; }

private:
    RowResult process_row(const SampleRow& row, const NetworkModel& net, double target) const;
    void save_manifest() const;
    void message(const std::string& text) const;
    bool stage_cached(const std::string& stage, const std::string& key) const;
    void require(const std::string& stage) const;
    std::string weather_key() const;
    std::string target_key() const;

    ExperimentConfig cfg_;
    std::ostream* log_;
    PipelineHooks hooks_;
    RunManifest manifest_;
    std::string config_hash_;
    mutable std::mutex log_mutex_;
};

// Runs fn(i) for i in [0, count) on `workers` threads. The first exception is rethrown.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn);

}  // namespace reqvar
