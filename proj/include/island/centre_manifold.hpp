#pragma once

#include <map>
#include <vector>

#include "island/polynomial.hpp"
#include "island/series.hpp"

namespace island {

// Desingularised vector field near the origin in the (c_1, .., c_i, w)
// chart, generated programmatically from the kinetic equations rather than
// transcribed. Variables are indexed 0 -> c_1, .., i-1 -> c_i, i -> w.
struct PolynomialField {
    int i = 2;
    Rational alpha = 1;  // deposition rate entering the c_1 equation
    Rational beta = 1;   // fragmentation rate
    SparsePolynomial dot_c1;               // slow-time c_1 rate, equals c1*(w - 2*c1^2)
    std::vector<SparsePolynomial> rate_c;  // original-time rates for c_2..c_i
    SparsePolynomial dot_w;                // slow-time w rate, generated

    const SparsePolynomial& rate_for(int j) const { return rate_c.at(j - 2); }
    int w_index() const { return i; }
};

PolynomialField build_field(int i, const Rational& alpha, const Rational& beta);

struct ZeroPivotError : std::runtime_error {
    ZeroPivotError(const std::string& msg, int order, const std::string& variable)
        : std::runtime_error(msg), order(order), variable(variable) {}
    int order;
    std::string variable;
};

// The invariant-curve expansions: c_j = g_j(c_1) for 2 <= j <= i, the
// restricted stable coordinate g_w, and the one-dimensional reduced equation
// c_1' = g_w(c_1) - 2 c_1^2.
struct CentreManifoldExpansion {
    int i = 2;
    Rational alpha = 1;
    Rational beta = 1;
    int order = 0;
    std::map<int, TruncatedSeries> g;
    TruncatedSeries g_w;
    TruncatedSeries reduced;

    const TruncatedSeries& series_for(int j) const { return g.at(j); }
};

// Solves the invariance equations order by order: at each power k the w
// coefficient is determined first (pivot alpha), then the c_i, .., c_2
// coefficients (pivot beta). Each solve is a linear equation in one unknown;
// pivots are checked during solving.
CentreManifoldExpansion solve_centre_manifold(const PolynomialField& field, int order);

TruncatedSeries reduced_ode(const CentreManifoldExpansion& expansion);

// Coefficient growth diagnostic: |coeff_k|^(1/k) per retained power. We
// report, and deliberately assert, nothing.
struct GrowthReport {
    std::vector<std::pair<int, double>> roots;  // (power, |coeff|^(1/power)), nonzero coeffs only
};
GrowthReport coefficient_growth(const TruncatedSeries& series);

struct ConvergenceProbe {
    std::map<int, GrowthReport> g;  // per cluster series
    GrowthReport g_w;
    GrowthReport reduced;
};
ConvergenceProbe convergence_probe(const CentreManifoldExpansion& expansion);

}  // namespace island
