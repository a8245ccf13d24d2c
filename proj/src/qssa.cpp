#include "island/qssa.hpp"

#include <stdexcept>

namespace island {

namespace {

Rational eval_poly(const std::vector<Rational>& coeffs, const Rational& x) {
    Rational acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double eval_poly(const std::vector<Rational>& coeffs, double x) {
    double acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + to_double(*it);
    return acc;
}

}  // namespace

Rational QssaClosedForm::evaluate(const Rational& c1) const {
    return eval_poly(numerator, c1) / eval_poly(denominator, c1);
}

double QssaClosedForm::evaluate(double c1) const {
    return eval_poly(numerator, c1) / eval_poly(denominator, c1);
}

QssaClosedForm qssa_closed_form(int i, int j) {
    if (i < 2) throw std::invalid_argument("i must be >= 2");
    if (j < 2 || j > i) throw std::invalid_argument("j must lie in [2, i]");
    QssaClosedForm f;
    // numerator: sum_{k=1..i-j+1} c1^{k+j-1}, i.e. powers j .. i
    f.numerator.assign(i + 1, Rational(0));
    for (int p = j; p <= i; ++p) f.numerator[p] = 1;
    // denominator: sum_{k=1..i} c1^{k-1}, i.e. powers 0 .. i-1
    f.denominator.assign(i, Rational(1));
    return f;
}

std::vector<Rational> qssa_closed_form_values(int i, const Rational& c1) {
    if (sgn(c1) < 0) throw std::invalid_argument("c1 must be non-negative");
    std::vector<Rational> out;
    out.reserve(i - 1);
    for (int j = 2; j <= i; ++j) {
        Rational v = qssa_closed_form(i, j).evaluate(c1);
        v.canonicalize();
        out.push_back(v);
    }
    return out;
}

std::map<int, TruncatedSeries> qssa_series(int i, int order) {
    if (order < i + 1) throw std::invalid_argument("order must be at least i+1");
    std::map<int, TruncatedSeries> out;
    // All closed forms share the denominator; invert it once.
    TruncatedSeries den(order);
    for (int p = 0; p < i && p <= order; ++p) den.set(p, 1);
    const TruncatedSeries den_inv = den.inverse();
    for (int j = 2; j <= i; ++j) {
        TruncatedSeries num(order);
        for (int p = j; p <= i && p <= order; ++p) num.set(p, 1);
        out.emplace(j, num * den_inv);
    }
    return out;
}

TruncatedSeries qssa_gw(int i, const Rational& alpha, int order) {
    if (sgn(alpha) <= 0) throw std::invalid_argument("alpha must be positive");
    if (order < 2) throw std::invalid_argument("order must be >= 2");
    const PolynomialField field = build_field(i, alpha, 1);

    std::vector<TruncatedSeries> args(i + 1, TruncatedSeries(order));
    args[0] = TruncatedSeries::monomial(order, 1);
    {
        auto series = qssa_series(i, std::max(order, i + 1));
        for (int j = 2; j <= i; ++j) {
            TruncatedSeries s(order);
            for (int p = 0; p <= order; ++p) s.set(p, series.at(j)[p]);
            args[j - 1] = s;
        }
    }

    // Leading-order balance of the w equation: substitute the steady-state
    // cluster series and the quadratic leading term of w itself, so that the
    // -alpha*(w - 2c1^2) relaxation absorbs the remaining rate. On this
    // closure the generated rate collapses to -c1^3 * c_i(c1), giving
    //   g_w = 2 c1^2 + dot_w(c1, qssa, 2 c1^2) / alpha.
    args[field.w_index()] = TruncatedSeries::monomial(order, 2, 2);
    const TruncatedSeries rate = field.dot_w.compose(args);
    return TruncatedSeries::monomial(order, 2, 2) + rate * (1 / alpha);
}

QssaExpansion qssa_expand(int i, const Rational& alpha, int order) {
    QssaExpansion out;
    out.i = i;
    out.alpha = alpha;
    out.order = order;
    for (int j = 2; j <= i; ++j) out.closed_forms.emplace(j, qssa_closed_form(i, j));
    {
        auto series = qssa_series(i, std::max(order, i + 1));
        for (int j = 2; j <= i; ++j) {
            TruncatedSeries s(order);
            for (int p = 0; p <= order; ++p) s.set(p, series.at(j)[p]);
            out.series.emplace(j, std::move(s));
        }
    }
    out.g_w = qssa_gw(i, alpha, order);
    out.reduced = out.g_w - TruncatedSeries::monomial(order, 2, 2);
    return out;
}

DivergenceReport compare_expansions(const CentreManifoldExpansion& cm, const QssaExpansion& qssa) {
    if (cm.i != qssa.i) throw std::invalid_argument("critical size mismatch");
    if (cm.alpha != qssa.alpha) throw std::invalid_argument("alpha mismatch");
    if (cm.beta != 1) throw std::invalid_argument("comparison requires the scaled setting beta = 1");
    if (cm.order != qssa.order) throw std::invalid_argument("order mismatch");

    DivergenceReport report;
    report.i = cm.i;
    report.alpha = cm.alpha;
    for (int p = 0; p <= cm.order; ++p) {
        DivergenceRow row{p, cm.reduced[p], qssa.reduced[p], cm.reduced[p] == qssa.reduced[p]};
        if (!row.equal && report.first_divergence < 0) report.first_divergence = p;
        report.rows.push_back(std::move(row));
    }
    const int i = cm.i;
    auto equal_at = [&](int p) {
        return p <= cm.order && report.rows[p].equal;
    };
    report.leading_terms_agree = equal_at(i + 3) && equal_at(i + 4) && equal_at(2 * i + 3);
    return report;
}

}  // namespace island
