#include "island/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

namespace island {

AsymptoticLaw leading_law(const ModelParams& params, Quantity quantity, int j) {
    const int i = params.i;
    const double at = to_double(params.alpha_tilde);
    const double b = to_double(params.beta);
    AsymptoticLaw law;
    switch (quantity) {
        case Quantity::Monomer:
            law.amplitude = std::pow(at * std::pow(b, i - 1) / (i + 2), 1.0 / (i + 2));
            law.exponent = rat(-1, i + 2);
            law.descriptor = "C_1";
            break;
        case Quantity::Subcritical: {
            if (j < 1 || j > i) throw std::invalid_argument("subcritical law needs 1 <= j <= i");
            const double beta_power = static_cast<double>(i - 3 * j + 2) / j;
            law.amplitude =
                std::pow(at * std::pow(b, beta_power) / (i + 2), static_cast<double>(j) / (i + 2));
            law.exponent = rat(-j, i + 2);
            law.descriptor = "C_" + std::to_string(j);
            break;
        }
        case Quantity::Supercritical: {
            if (j <= i) throw std::invalid_argument("supercritical law needs j > i");
            const double beta_power = static_cast<double>(-2 * i + 2) / i;
            law.amplitude =
                std::pow(at * std::pow(b, beta_power) / (i + 2), static_cast<double>(i) / (i + 2));
            law.exponent = rat(-i, i + 2);
            law.descriptor = "C_j (j > i)";
            break;
        }
        case Quantity::MeanSize:
            law.amplitude = std::pow(at * std::pow(b, i - 1) / (i + 2), 1.0 / (i + 2));
            law.exponent = rat(i + 1, i + 2);
            law.descriptor = "<j>";
            break;
    }
    return law;
}

double psi(int i, double r) {
    if (i < 2) throw std::invalid_argument("i must be >= 2");
    if (r >= 1.0) return 0.0;
    return std::pow(1.0 - r, -static_cast<double>(i) / (i + 1));
}

double eta(const ModelParams& params, double j, double mean_size) {
    if (!(mean_size > 0.0)) throw std::invalid_argument("mean size must be positive");
    const int i = params.i;
    const double b = to_double(params.beta);
    return (i + 1.0) / (i + 2.0) * std::pow(b, -(i + 1.0) / (i + 2.0)) * j / mean_size;
}

SimilaritySnapshot similarity_snapshot(const ModelParams& params, const TruncatedState& state) {
    double number = 0.0, mass = 0.0;
    for (int j = 1; j <= state.n_max(); ++j) {
        number += state.c[j - 1];
        mass += j * state.c[j - 1];
    }
    if (number <= 0.0) throw std::invalid_argument("empty state");

    SimilaritySnapshot snap;
    snap.time = state.time;
    snap.mean_size = mass / number;
    const double scale = std::pow(snap.mean_size, static_cast<double>(params.i) / (params.i + 1));
    snap.rows.reserve(state.n_max());
    for (int j = 1; j <= state.n_max(); ++j) {
        SimilaritySnapshot::Row row;
        row.j = j;
        row.eta = eta(params, j, snap.mean_size);
        row.concentration = state.c[j - 1];
        row.scaled = scale * state.c[j - 1];
        row.psi = psi(params.i, row.eta);
        snap.rows.push_back(row);
    }
    return snap;
}

SlopeFit slope_fit(std::span<const double> times, std::span<const double> values,
                   double window_lo, double window_hi) {
    if (times.size() != values.size()) throw std::invalid_argument("size mismatch");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (std::size_t k = 0; k < times.size(); ++k) {
        const double t = times[k];
        if (t < window_lo || t > window_hi) continue;
        if (!(t > 0.0)) throw std::invalid_argument("non-positive time in window");
        if (!(values[k] > 0.0)) throw std::invalid_argument("non-positive value in window");
        const double x = std::log(t), y = std::log(values[k]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    if (n < 5) throw std::invalid_argument("need at least 5 checkpoints in the fit window");
    const double denom = n * sxx - sx * sx;
    SlopeFit fit;
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.amplitude = std::exp((sy - fit.slope * sx) / n);
    fit.points = n;
    return fit;
}

std::vector<double> cm_distance(const ModelParams& params, const TruncatedState& state,
                                const CentreManifoldExpansion& expansion) {
    if (expansion.i != params.i) throw std::invalid_argument("critical size mismatch");
    const double c1 = state.c.at(0);
    if (!(c1 > 0.0)) throw std::invalid_argument("c1 must be positive");
    std::vector<double> out;
    out.reserve(params.i - 1);
    double power = c1;
    for (int j = 2; j <= params.i; ++j) {
        power *= c1;  // c1^j
        const double predicted = expansion.series_for(j).evaluate(c1);
        out.push_back(std::abs(state.c.at(j - 1) - predicted) / power);
    }
    return out;
}

}  // namespace island
