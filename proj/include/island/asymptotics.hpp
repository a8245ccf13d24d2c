#pragma once

#include <span>
#include <string>
#include <vector>

#include "island/centre_manifold.hpp"
#include "island/model.hpp"

namespace island {

enum class Quantity {
    Monomer,        // C_1
    Subcritical,    // C_j, 1 <= j <= i
    Supercritical,  // C_j, j > i
    MeanSize        // average cluster size <j>
};

// Leading power law amplitude * t^exponent in physical units.
struct AsymptoticLaw {
    double amplitude = 0.0;
    Rational exponent = 0;
    std::string descriptor;
};

AsymptoticLaw leading_law(const ModelParams& params, Quantity quantity, int j = 0);

// Limit shape of the size distribution: (1-r)^(-i/(i+1)) below the front,
// zero at and beyond it.
double psi(int i, double r);

// Similarity coordinate of cluster size j at a given mean size.
double eta(const ModelParams& params, double j, double mean_size);

struct SimilaritySnapshot {
    double time = 0.0;
    double mean_size = 0.0;
    struct Row {
        int j;
        double eta;
        double concentration;
        double scaled;  // <j>^{i/(i+1)} * C_j
        double psi;
    };
    std::vector<Row> rows;
};

// Empirical mean size and rescaled profile of a state. Overflow past the
// truncation edge is excluded from the mean (sizes unknown); callers should
// keep it negligible via N_max sizing. Meaningful as a profile only once the
// run has populated sizes beyond i.
SimilaritySnapshot similarity_snapshot(const ModelParams& params, const TruncatedState& state);

struct SlopeFit {
    double slope = 0.0;
    double amplitude = 0.0;  // exp(intercept) of the log-log fit
    int points = 0;
};

// Least-squares slope of ln(value) against ln(t) over a window.
SlopeFit slope_fit(std::span<const double> times, std::span<const double> values,
                   double window_lo, double window_hi);

// Relative deviation |c_j - g_j(c1)| / c1^j of a state from the invariant
// curve, for j = 2..i.
std::vector<double> cm_distance(const ModelParams& params, const TruncatedState& state,
                                const CentreManifoldExpansion& expansion);

}  // namespace island
