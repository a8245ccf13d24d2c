#pragma once

#include "island/integrator.hpp"
#include "island/model.hpp"

namespace island {

struct TruncatedPoint {
    TruncatedState state;
    double rho = 0.0;     // integral of c1 up to this time
    double tau = 0.0;     // integral of c1/(c1^2 + 1e-16), a regularised 1/c1
    double err_c1 = 0.0;  // accumulated local error estimate for c1
};

struct TruncatedTrajectory {
    ModelParams params;
    std::vector<TruncatedPoint> points;
    StepStats stats;
};

struct ReducedPoint {
    ReducedState state;
    double err_c1 = 0.0;
};

struct ReducedTrajectory {
    ModelParams params;
    std::vector<ReducedPoint> points;
    StepStats stats;
};

// Truncation size that keeps the advancing front inside the explicit state:
// the predicted front position rho(t_end) + i, padded by 20% plus 50 sizes.
int auto_n_max(const ModelParams& params, double t_end);

// Integrates the truncated system from the given state (zeros = bare
// substrate). rho and tau ride along as extra quadrature components under the
// same error control.
TruncatedTrajectory simulate_truncated(const ModelParams& params, const TruncatedState& initial,
                                       const IntegrationConfig& config);

TruncatedTrajectory simulate_truncated(const ModelParams& params, int n_max,
                                       const IntegrationConfig& config);

ReducedTrajectory simulate_reduced(const ModelParams& params, const ReducedState& initial,
                                   const IntegrationConfig& config);

// Predicted largest populated cluster size at each checkpoint: rho(T) + i.
std::vector<double> front_position(const TruncatedTrajectory& trajectory);

}  // namespace island
