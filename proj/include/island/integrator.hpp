#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace island {

using RhsFunction = std::function<void(double t, std::span<const double> y, std::span<double> dy)>;

struct IntegrationConfig {
    double rtol = 1e-9;
    double atol = 1e-16;
    double t_end = 0.0;
    std::vector<double> checkpoints;  // sorted ascending, within [0, t_end]
    long max_steps = 20'000'000;
    double negativity_floor = 1e-12;
    // Leading components subject to the negativity abort (concentrations);
    // appended bookkeeping components are exempt.
    std::size_t nonneg_prefix = 0;
};

struct IntegrationError : std::runtime_error {
    IntegrationError(const std::string& what, double t) : std::runtime_error(what), time(t) {}
    double time;
};

struct Checkpoint {
    double t = 0.0;
    std::vector<double> y;
    std::vector<double> err_est;  // accumulated local error estimates, per component
};

struct StepStats {
    long accepted = 0;
    long rejected = 0;
    long rhs_evaluations = 0;
};

struct RawTrajectory {
    std::vector<Checkpoint> points;
    StepStats stats;
};

// Adaptive integration with the Dormand-Prince 5(4) embedded pair and a
// proportional-integral step-size controller. Checkpoints are hit exactly by
// shortening steps; no dense output.
RawTrajectory integrate(const RhsFunction& rhs, std::vector<double> y0, const IntegrationConfig& config);

// Geometrically spaced output times, endpoints included.
std::vector<double> log_checkpoints(double t_start, double t_end, int count);

}  // namespace island
