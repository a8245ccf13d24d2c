#include "island/simulate.hpp"

#include <cmath>

namespace island {

namespace {
// tau' = c1/(c1^2 + g^2), a smooth stand-in for 1/c1: for a bare substrate
// the integral of 1/c1 from 0 diverges, so the recorded tau is a
// regularisation (diagnostic only). Once c1 >> g the relative error is
// below g^2/c1^2.
constexpr double kTauGuard = 1e-8;

double tau_rate(double c1) {
    if (c1 <= 0.0) return 0.0;
    return c1 / (c1 * c1 + kTauGuard * kTauGuard);
}
}  // namespace

int auto_n_max(const ModelParams& params, double t_end) {
    const double alpha = to_double(params.alpha);
    const double i = params.i;
    const double rho_est = (i + 2.0) / (i + 1.0) * std::pow(alpha / (i + 2.0), 1.0 / (i + 2.0)) *
                           std::pow(std::max(t_end, 1.0), (i + 1.0) / (i + 2.0));
    return static_cast<int>(std::ceil(1.2 * (rho_est + params.i))) + 50;
}

TruncatedTrajectory simulate_truncated(const ModelParams& params, const TruncatedState& initial,
                                       const IntegrationConfig& config) {
    const int n_max = initial.n_max();
    if (n_max < params.i + 2) throw std::invalid_argument("N_max must be at least i+2");
    const std::size_t dim = n_max + 4;  // c_1..c_N, overflow_count, overflow_mass, rho, tau

    std::vector<double> y(dim, 0.0);
    for (int j = 0; j < n_max; ++j) {
        if (initial.c[j] < 0.0) throw std::invalid_argument("negative initial concentration");
        y[j] = initial.c[j];
    }
    y[n_max] = initial.overflow_count;
    y[n_max + 1] = initial.overflow_mass;

    auto rhs = [&params, n_max](double, std::span<const double> state, std::span<double> d) {
        std::span<const double> c = state.subspan(0, n_max);
        std::span<double> dc = d.subspan(0, n_max);
        double d_count = 0.0, d_mass = 0.0;
        rhs_truncated<double>(params, c, dc, d_count, d_mass);
        d[n_max] = d_count;
        d[n_max + 1] = d_mass;
        d[n_max + 2] = state[0];            // rho' = c1
        d[n_max + 3] = tau_rate(state[0]);  // tau' ~ 1/c1
    };

    IntegrationConfig cfg = config;
    cfg.nonneg_prefix = n_max;
    RawTrajectory raw = integrate(rhs, std::move(y), cfg);

    TruncatedTrajectory out;
    out.params = params;
    out.stats = raw.stats;
    out.points.reserve(raw.points.size());
    for (auto& pt : raw.points) {
        TruncatedPoint tp;
        tp.state.c.assign(pt.y.begin(), pt.y.begin() + n_max);
        tp.state.overflow_count = pt.y[n_max];
        tp.state.overflow_mass = pt.y[n_max + 1];
        tp.state.time = pt.t;
        tp.rho = pt.y[n_max + 2];
        tp.tau = pt.y[n_max + 3];
        tp.err_c1 = pt.err_est[0];
        out.points.push_back(std::move(tp));
    }
    return out;
}

TruncatedTrajectory simulate_truncated(const ModelParams& params, int n_max,
                                       const IntegrationConfig& config) {
    TruncatedState bare;
    bare.c.assign(n_max, 0.0);
    return simulate_truncated(params, bare, config);
}

ReducedTrajectory simulate_reduced(const ModelParams& params, const ReducedState& initial,
                                   const IntegrationConfig& config) {
    const int i = params.i;
    if (static_cast<int>(initial.c.size()) != i) throw std::invalid_argument("reduced state needs i entries");
    std::vector<double> y(i + 1, 0.0);
    for (int j = 0; j < i; ++j) {
        if (initial.c[j] < 0.0) throw std::invalid_argument("negative initial concentration");
        y[j] = initial.c[j];
    }
    if (initial.y < 0.0) throw std::invalid_argument("negative initial tail");
    y[i] = initial.y;

    auto rhs = [&params](double, std::span<const double> state, std::span<double> d) {
        rhs_reduced<double>(params, state, d);
    };

    IntegrationConfig cfg = config;
    cfg.nonneg_prefix = i + 1;
    RawTrajectory raw = integrate(rhs, std::move(y), cfg);

    ReducedTrajectory out;
    out.params = params;
    out.stats = raw.stats;
    out.points.reserve(raw.points.size());
    for (auto& pt : raw.points) {
        ReducedPoint rp;
        rp.state.c.assign(pt.y.begin(), pt.y.begin() + i);
        rp.state.y = pt.y[i];
        rp.state.time = pt.t;
        rp.err_c1 = pt.err_est[0];
        out.points.push_back(std::move(rp));
    }
    return out;
}

std::vector<double> front_position(const TruncatedTrajectory& trajectory) {
    if (trajectory.points.empty()) throw std::invalid_argument("empty trajectory");
    std::vector<double> front;
    front.reserve(trajectory.points.size());
    for (const auto& pt : trajectory.points) front.push_back(pt.rho + trajectory.params.i);
    return front;
}

}  // namespace island
