#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "reqvar/time.hpp"

namespace reqvar {

enum class WeatherVariable { t_out, rh, i_dn, i_dh, wind_speed, wind_dir };

inline constexpr std::size_t kWeatherVariableCount = 6;
inline constexpr std::array<WeatherVariable, kWeatherVariableCount> kWeatherVariables{
    WeatherVariable::t_out,      WeatherVariable::rh,       WeatherVariable::i_dn,
    WeatherVariable::i_dh,       WeatherVariable::wind_speed, WeatherVariable::wind_dir};

std::string_view to_string(WeatherVariable v);
WeatherVariable weather_variable_from_string(std::string_view name);
constexpr std::size_t index_of(WeatherVariable v) { return static_cast<std::size_t>(v); }

struct Site {
    double latitude_deg = 46.2;
    double longitude_deg = 6.13;
    double utc_offset_h = 1.0;
};

struct WeatherSeries {
    Timestamp start = 0;
    int step_s = 3600;
    std::vector<double> t_out;
    std::vector<double> rh;
    std::vector<double> i_dn;
    std::vector<double> i_dh;
    std::vector<double> wind_speed;
    std::vector<double> wind_dir;
    Site site;

    std::size_t size() const noexcept { return t_out.size(); }
    Timestamp time_at(std::size_t k) const noexcept { return start + static_cast<Timestamp>(k) * step_s; }
    Timestamp end() const noexcept { return time_at(size() == 0 ? 0 : size() - 1); }

    std::vector<double>& channel(WeatherVariable v);
    const std::vector<double>& channel(WeatherVariable v) const;

    // Throws ValidationError (naming the 1-based data row) on the first
    // invariant violation.
    void validate() const;
};

// CSV with header `time,t_out,rh,i_dn,i_dh,wind_speed,wind_dir`.
WeatherSeries load_weather(const std::filesystem::path& path, const Site& site = {});
WeatherSeries parse_weather_csv(std::string_view text, const Site& site = {});
void save_weather(const std::filesystem::path& path, const WeatherSeries& series);
std::string format_weather_csv(const WeatherSeries& series);

// Physical clamp range of each variable. Wind direction is wrapped rather than clamped.
struct Bounds {
    double lower;
    double upper;
};
Bounds physical_bounds(WeatherVariable v);

// Mean plus harmonics; `periods_s[k]` pairs with `cos_coef[k]` and `sin_coef[k]`.
// Time is absolute (seconds since epoch) so daily terms stay phase-locked to the clock.
struct HarmonicTrend {
    double mean = 0.0;
    std::vector<double> periods_s;
    std::vector<double> cos_coef;
    std::vector<double> sin_coef;

    double operator()(Timestamp t) const;
    double amplitude(double period_s) const;
};

struct Ar1 {
    double phi = 0.0;
    double sigma = 0.0;  // innovation standard deviation
};

// Monotone table mapping standard Gaussian quantiles onto empirical residual quantiles.
struct QuantileMap {
    std::vector<double> gaussian;
    std::vector<double> residual;

    double operator()(double z) const;
};

struct VariableModel {
    WeatherVariable variable = WeatherVariable::t_out;
    HarmonicTrend trend;
    Ar1 residual_ar1;
    QuantileMap quantile_map;
    Bounds bounds{0.0, 0.0};
    bool degenerate = false;  // residual variance is zero
};

VariableModel fit_variable_model(const WeatherSeries& base, WeatherVariable v);
std::array<VariableModel, kWeatherVariableCount> fit_weather_models(const WeatherSeries& base);

using GroupSeeds = std::array<std::uint64_t, kWeatherVariableCount>;

// Each variable = trend + amplitude * quantile_map(AR(1) Gaussian driven by its group seed),
// then clamped (or wrapped); solar channels are forced to zero while the sun is down.
WeatherSeries sample_weather(std::span<const VariableModel, kWeatherVariableCount> models,
                             const WeatherSeries& base, const GroupSeeds& group_seeds, double amplitude);

// What sample_weather returns for amplitude 0.
WeatherSeries trend_reconstruction(std::span<const VariableModel, kWeatherVariableCount> models,
                                   const WeatherSeries& base);

// Cosine of the solar zenith angle at a local-standard-time instant.
double cos_solar_zenith(Timestamp t, const Site& site);

// I_gh = i_dn * max(0, cos zenith) + i_dh, per step.
std::vector<double> global_horizontal(const WeatherSeries& series);

// Pick-freeze layout over the six weather groups: block A (index 0) and
// substituted blocks C_1..C_6 (index i), n rows each, stored block-major.
struct SampleRow {
    std::size_t id = 0;
    int block = 0;
    std::size_t base_row = 0;
    GroupSeeds group_seeds{};
};

struct SamplePlan {
    std::size_t n = 0;
    std::uint64_t master_seed = 0;
    std::vector<std::uint64_t> seeds_a;
    std::vector<std::uint64_t> seeds_b;
    std::vector<SampleRow> rows;

    const SampleRow& row(int block, std::size_t r) const { return rows[static_cast<std::size_t>(block) * n + r]; }
};

SamplePlan build_sample_plan(std::size_t n, std::uint64_t master_seed);
std::string sample_plan_to_json(const SamplePlan& plan);
SamplePlan sample_plan_from_json(std::string_view text);

std::string block_name(int block);

}  // namespace reqvar
