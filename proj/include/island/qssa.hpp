#pragma once

#include <map>
#include <vector>

#include "island/centre_manifold.hpp"
#include "island/series.hpp"

namespace island {

// Closed-form cluster concentration under the quasi-steady-state assumption,
// as an exact rational function of c1 (valid for every c1 >= 0, unlike the
// asymptotic manifold series).
struct QssaClosedForm {
    std::vector<Rational> numerator;    // coefficient list in c1
    std::vector<Rational> denominator;  // sum of c1^k, k = 0..i-1; value >= 1 on c1 >= 0

    Rational evaluate(const Rational& c1) const;
    double evaluate(double c1) const;
};

struct QssaExpansion {
    int i = 2;
    Rational alpha = 1;
    int order = 0;
    std::map<int, QssaClosedForm> closed_forms;  // j -> c_j(c1), 2 <= j <= i
    std::map<int, TruncatedSeries> series;       // MacLaurin expansions of the closed forms
    TruncatedSeries g_w;
    TruncatedSeries reduced;  // g_w - 2 c1^2
};

QssaClosedForm qssa_closed_form(int i, int j);

// Values of c_2..c_i at a given monomer concentration, exact.
std::vector<Rational> qssa_closed_form_values(int i, const Rational& c1);

// MacLaurin series of the closed forms, by exact long division.
std::map<int, TruncatedSeries> qssa_series(int i, int order);

// The stable-coordinate series under QSSA: the same generated w equation as
// the centre-manifold branch, evaluated on the QSSA cluster series with w at
// its leading quadratic term and the residual rate balanced against the
// -alpha*w relaxation. The comparison below then isolates exactly the
// modelling assumption.
TruncatedSeries qssa_gw(int i, const Rational& alpha, int order);

QssaExpansion qssa_expand(int i, const Rational& alpha, int order);

struct DivergenceRow {
    int power;
    Rational cm_coeff;
    Rational qssa_coeff;
    bool equal;
};

struct DivergenceReport {
    int i = 2;
    Rational alpha = 1;
    std::vector<DivergenceRow> rows;
    int first_divergence = -1;  // -1: identical through the compared order
    bool leading_terms_agree = false;  // equal at powers i+3, i+4, 2i+3
};

// Power-by-power comparison of the two reduced monomer equations. Requires
// matching (i, alpha), order, and the scaled setting beta = 1 on the
// centre-manifold side.
DivergenceReport compare_expansions(const CentreManifoldExpansion& cm, const QssaExpansion& qssa);

}  // namespace island
