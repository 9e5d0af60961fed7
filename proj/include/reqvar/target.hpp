#pragma once

#include <span>
#include <string>
#include <vector>

#include "reqvar/network.hpp"

namespace reqvar {

struct SteadyBoundary {
    double t_out = 0.0;         // constant, degC
    double setpoint = 20.0;     // constant, degC
    std::vector<double> wind;   // m/s, tiled cyclically; empty means calm
    int wind_step_s = 3600;
    Timestamp start = 0;        // calendar anchor for schedules
};

struct RegressionPoint {
    double delta_t;  // daily mean T_in - T_out, K
    double power;    // daily mean heating power, W
};

struct TargetReport {
    double r_eq_star = 0.0;  // K/W
    double htc = 0.0;        // W/K
    double r_squared = 0.0;
    std::vector<RegressionPoint> points;
    bool low_linearity = false;  // R^2 < 0.99
};

// Daily-mean heating power regressed through the origin on daily-mean dT under
// constant temperatures and no sun. Throws InsufficientDataError below 10 days.
TargetReport compute_target_req(const NetworkModel& net, const SteadyBoundary& steady, int days);

std::string target_report_to_json(const TargetReport& report);
TargetReport target_report_from_json(const std::string& text);

}  // namespace reqvar
