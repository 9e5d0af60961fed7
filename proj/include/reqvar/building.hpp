#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "reqvar/time.hpp"

namespace reqvar {

inline constexpr std::string_view kOutdoorNode = "outdoor";
inline constexpr std::string_view kGroundNode = "ground";

inline constexpr double kAirDensity = 1.204;       // kg/m3
inline constexpr double kAirHeatCapacity = 1006.0;  // J/kgK

struct Zone {
    std::string id;
    double air_capacitance = 0.0;  // J/K
    double volume = 0.0;           // m3
};

struct Layer {
    double thickness = 0.0;      // m
    double conductivity = 0.0;   // W/mK
    double density = 0.0;        // kg/m3
    double specific_heat = 0.0;  // J/kgK
};

struct WallAssembly {
    std::string name;
    std::string from;
    std::string to;
    std::vector<Layer> layers;  // ordered from `from` to `to`
    double area = 0.0;          // m2
    int sub_nodes = 3;          // per layer
    double from_film = 0.0;     // surface resistance on the `from` side, m2K/W
    double to_film = 0.0;       // surface resistance on the `to` side, m2K/W

    double resistance() const;  // K/W, films included
};

struct Window {
    std::string zone;
    std::string orientation;
    double area = 0.0;            // m2
    double u_value = 0.0;         // W/m2K
    double solar_aperture = 0.0;  // fraction of I_gh * area delivered to the zone
};

struct Ventilation {
    double design_flow = 0.0;  // m3/s
    double a = 0.606;
    double b = 0.03636;
    double c = 0.1177;
    double d = 0.0;
    std::vector<double> schedule{1.0};  // one constant value or 24 hourly fractions
    // Power-law wind profile carrying the 10 m station wind to the site and height.
    double terrain_exponent = 0.14;
    double boundary_layer_m = 270.0;
    double height_m = 10.0;

    double schedule_at(Timestamp t) const;
    double wind_factor() const;  // local over station wind speed
};

struct Heater {
    std::string zone;
    double max_power = 0.0;           // W
    double proportional_gain = 800.0;  // W/K
};

// Hours are [begin, end) in local time.
struct SetpointSchedule {
    double occupied = 20.0;
    double unoccupied = 17.0;
    std::vector<std::pair<double, double>> workday_windows{{6.0, 9.0}, {18.0, 23.0}};
    std::vector<std::pair<double, double>> full_day_windows{{7.0, 23.0}};
    std::array<bool, 7> full_days{false, false, true, false, false, true, true};  // Monday first
};

struct BuildingSpec {
    std::string name;
    std::vector<Zone> zones;
    std::vector<WallAssembly> walls;
    std::vector<Window> windows;
    Ventilation ventilation;
    Heater heater;
    SetpointSchedule setpoint;
    double ground_temperature = 10.0;

    // Throws ArgumentError on a violated invariant (non-positive property, unknown node...).
    void validate() const;
    std::size_t zone_index(std::string_view id) const;
};

BuildingSpec parse_building_spec(std::string_view json_text);
BuildingSpec load_building_spec(const std::filesystem::path& path);
std::string building_spec_to_json(const BuildingSpec& spec);
// Stable digest of the canonical JSON form.
std::string building_spec_hash(const BuildingSpec& spec);

// Airflow in m3/s: design * schedule * (A + B |dT| + C w + D w^2).
double ventilation_flow(double t_zone, double t_odb, double wind, double design_flow, double schedule,
                        double a = 0.606, double b = 0.03636, double c = 0.1177, double d = 0.0);

double setpoint(Timestamp t, const SetpointSchedule& schedule);

}  // namespace reqvar
