#include "island/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace island {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192,
                 a75 = -2187.0 / 6784, a76 = 11.0 / 84;
// Difference between the 5th- and 4th-order weights.
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

// PI controller constants (standard dopri5 values).
constexpr double kSafety = 0.9;
constexpr double kBeta = 0.04;
constexpr double kExpo = 0.2 - kBeta * 0.75;
constexpr double kMinFactor = 0.2;
constexpr double kMaxFactor = 10.0;

bool all_finite(std::span<const double> v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

}  // namespace

std::vector<double> log_checkpoints(double t_start, double t_end, int count) {
    if (!(t_start > 0.0) || !(t_end > t_start)) throw std::invalid_argument("need 0 < t_start < t_end");
    if (count < 2) throw std::invalid_argument("need at least 2 checkpoints");
    std::vector<double> out(count);
    const double step = std::log(t_end / t_start) / (count - 1);
    for (int k = 0; k < count; ++k) out[k] = t_start * std::exp(step * k);
    out.front() = t_start;
    out.back() = t_end;
    return out;
}

RawTrajectory integrate(const RhsFunction& rhs, std::vector<double> y0, const IntegrationConfig& config) {
    if (!(config.rtol > 0.0) || !(config.atol > 0.0))
        throw std::invalid_argument("tolerances must be positive");
    for (std::size_t k = 0; k < config.checkpoints.size(); ++k) {
        const double t = config.checkpoints[k];
        if (t < 0.0 || t > config.t_end) throw std::invalid_argument("checkpoint outside [0, t_end]");
        if (k > 0 && t <= config.checkpoints[k - 1]) throw std::invalid_argument("checkpoints not ascending");
    }

    const std::size_t n = y0.size();
    RawTrajectory traj;
    std::vector<double> err_cum(n, 0.0);
    std::size_t next_cp = 0;

    auto at_checkpoint = [&](double t) {
        return next_cp < config.checkpoints.size() &&
               std::abs(config.checkpoints[next_cp] - t) <= 1e-12 * std::max(1.0, std::abs(t));
    };
    auto record = [&](const std::vector<double>& y) {
        traj.points.push_back({config.checkpoints[next_cp], y, err_cum});
        ++next_cp;
    };

    while (at_checkpoint(0.0)) record(y0);
    if (next_cp >= config.checkpoints.size()) return traj;

    std::vector<double> k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n);
    std::vector<double> ytmp(n), ynew(n), eloc(n);
    double t = 0.0;

    rhs(t, y0, k1);
    ++traj.stats.rhs_evaluations;

    // Initial step-size guess from the local scale of y and y'.
    double h;
    {
        double d0 = 0.0, d1 = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double sc = config.atol + config.rtol * std::abs(y0[j]);
            d0 += (y0[j] / sc) * (y0[j] / sc);
            d1 += (k1[j] / sc) * (k1[j] / sc);
        }
        d0 = std::sqrt(d0 / n);
        d1 = std::sqrt(d1 / n);
        h = (d0 < 1e-10 || d1 < 1e-10) ? 1e-6 : 0.01 * d0 / d1;
        h = std::min(h, config.t_end);
    }

    double err_old = 1e-4;

    while (next_cp < config.checkpoints.size()) {
        if (traj.stats.accepted + traj.stats.rejected >= config.max_steps)
            throw IntegrationError("step budget exhausted", t);
        if (h < 1e-14 * std::max(1.0, std::abs(t)))
            throw IntegrationError("step size underflow (non-finite or unstable right-hand side)", t);

        // Land exactly on the next checkpoint.
        const double t_target = config.checkpoints[next_cp];
        bool hit = false;
        if (t + h >= t_target) {
            h = t_target - t;
            hit = true;
        }

        for (std::size_t j = 0; j < n; ++j) ytmp[j] = y0[j] + h * a21 * k1[j];
        rhs(t + c2 * h, ytmp, k2);
        for (std::size_t j = 0; j < n; ++j) ytmp[j] = y0[j] + h * (a31 * k1[j] + a32 * k2[j]);
        rhs(t + c3 * h, ytmp, k3);
        for (std::size_t j = 0; j < n; ++j)
            ytmp[j] = y0[j] + h * (a41 * k1[j] + a42 * k2[j] + a43 * k3[j]);
        rhs(t + c4 * h, ytmp, k4);
        for (std::size_t j = 0; j < n; ++j)
            ytmp[j] = y0[j] + h * (a51 * k1[j] + a52 * k2[j] + a53 * k3[j] + a54 * k4[j]);
        rhs(t + c5 * h, ytmp, k5);
        for (std::size_t j = 0; j < n; ++j)
            ytmp[j] = y0[j] + h * (a61 * k1[j] + a62 * k2[j] + a63 * k3[j] + a64 * k4[j] + a65 * k5[j]);
        rhs(t + h, ytmp, k6);
        for (std::size_t j = 0; j < n; ++j)
            ynew[j] = y0[j] + h * (a71 * k1[j] + a73 * k3[j] + a74 * k4[j] + a75 * k5[j] + a76 * k6[j]);
        rhs(t + h, ynew, k7);
        traj.stats.rhs_evaluations += 6;

        // Componentwise error contract: every |e_j| must fit rtol*|y_j| + atol.
        double err = 0.0;
        bool finite = all_finite(ynew);
        if (finite) {
            for (std::size_t j = 0; j < n; ++j) {
                eloc[j] = h * (e1 * k1[j] + e3 * k3[j] + e4 * k4[j] + e5 * k5[j] + e6 * k6[j] +
                               e7 * k7[j]);
                const double sc = config.atol + config.rtol * std::max(std::abs(y0[j]), std::abs(ynew[j]));
                err = std::max(err, std::abs(eloc[j]) / sc);
            }
            if (!std::isfinite(err)) finite = false;
        }

        if (finite && err <= 1.0) {
            ++traj.stats.accepted;
            for (std::size_t j = 0; j < n; ++j) err_cum[j] += std::abs(eloc[j]);
            t = hit ? t_target : t + h;
            y0.swap(ynew);
            k1.swap(k7);  // first-same-as-last

            for (std::size_t j = 0; j < std::min(config.nonneg_prefix, n); ++j) {
                if (y0[j] < -config.negativity_floor)
                    throw IntegrationError("negativity violation in component " + std::to_string(j + 1), t);
            }

            while (at_checkpoint(t)) record(y0);

            const double fac11 = std::pow(std::max(err, 1e-16), kExpo);
            double fac = fac11 / std::pow(err_old, kBeta);
            fac = std::max(1.0 / kMaxFactor, std::min(1.0 / kMinFactor, fac / kSafety));
            h = h / fac;
            err_old = std::max(err, 1e-4);
        } else {
            ++traj.stats.rejected;
            if (!finite)
                h *= 0.1;
            else
                h = h / std::min(1.0 / kMinFactor, std::pow(err, kExpo) / kSafety);
        }
    }

    return traj;
}

}  // namespace island
