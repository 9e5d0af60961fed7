#pragma once

#include <optional>

#include <Eigen/Dense>

#include "reqvar/dataset.hpp"
#include "reqvar/network.hpp"
#include "reqvar/weather.hpp"

namespace reqvar {

inline constexpr int kWarmupDays = 15;

struct RunWindow {
    Timestamp start = 0;  // first output instant
    Timestamp end = 0;    // exclusive
    int step_s = 600;
};

struct SimulationOptions {
    std::optional<double> constant_setpoint;  // overrides the weekly schedule
    double initial_temperature = 17.0;
    int warmup_days = kWarmupDays;
};

// Boundary values applying over one implicit-Euler step.
struct StepBoundary {
    double t_out = 0.0;
    double i_gh = 0.0;
    double wind = 0.0;
    double setpoint = 20.0;
    double ventilation_schedule = 1.0;
};

// Implicit-Euler integrator of the node energy balances at a fixed step. The heated
// zone carries the ventilation conductance (lagged by one step) and a clamped
// proportional heater, handled as a rank-one update of a factorization held for
// the whole run.
class ThermalIntegrator {
public:
    ThermalIntegrator(const NetworkModel& net, double dt_s, double initial_temperature);

    // Advances one step and returns the heating power applied over it.
    double step(const StepBoundary& b);

    const Eigen::VectorXd& state() const noexcept { return state_; }
    double zone_temperature() const { return state_(static_cast<Eigen::Index>(net_->heated_node)); }

    // Heat leaving the heated zone at the current state, W: conduction into
    // adjacent nodes, window and direct boundary losses, and ventilation.
    double zone_heat_loss(const StepBoundary& b) const;
    double ventilation_conductance(double t_zone, const StepBoundary& b) const;

private:
    const NetworkModel* net_;
    double dt_;
    Eigen::VectorXd state_;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
    Eigen::VectorXd unit_response_;  // lu^-1 e_zone
};

// Runs from `run.start - warmup` and returns the clean dataset on [run.start, run.end).
SimDataset simulate(const NetworkModel& net, const WeatherSeries& weather, const RunWindow& run,
                    const SimulationOptions& options = {});

}  // namespace reqvar
