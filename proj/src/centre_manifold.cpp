#include "island/centre_manifold.hpp"

#include <cmath>
#include <stdexcept>

namespace island {

namespace {

// Drops a trailing variable whose exponent is zero in every term.
SparsePolynomial drop_last_variable(const SparsePolynomial& p) {
    const int nv = p.nvars();
    SparsePolynomial out(nv - 1);
    for (const auto& [exp, c] : p.terms()) {
        if (exp.back() != 0) throw std::logic_error("variable not eliminated");
        out.add_term({exp.begin(), exp.end() - 1}, c);
    }
    return out;
}

}  // namespace

PolynomialField build_field(int i, const Rational& alpha, const Rational& beta) {
    if (i < 2) throw std::invalid_argument("i must be >= 2");
    if (sgn(alpha) <= 0) throw std::invalid_argument("alpha must be positive");
    if (sgn(beta) <= 0) throw std::invalid_argument("beta must be positive");

    // Assembly variables: 0 -> c1, .., i-1 -> ci, i -> w, i+1 -> v.
    const int nv = i + 2;
    const int w_var = i, v_var = i + 1;
    auto var = [&](int idx, int power = 1) { return SparsePolynomial::variable(nv, idx, power); };
    auto cvar = [&](int j, int power = 1) { return var(j - 1, power); };  // cluster size j
    auto constant = [&](const Rational& r) { return SparsePolynomial::constant(nv, r); };

    const SparsePolynomial c1 = cvar(1);

    // Original-time cluster rates.
    std::vector<SparsePolynomial> rate_c;
    for (int j = 2; j <= i; ++j) {
        SparsePolynomial r = c1 * cvar(j - 1) - c1 * cvar(j) - cvar(j) * beta;
        if (j < i) r += cvar(j + 1) * beta;
        rate_c.push_back(r);
    }

    // Net tail creation rate: d/dT of the total count above size 1.
    const SparsePolynomial tail_rate = var(0, 2) - cvar(2) * beta;

    // Monomer rate with the tail sum eliminated through v.
    SparsePolynomial sum_high(nv);  // c3 + .. + ci
    for (int k = 3; k <= i; ++k) sum_high += cvar(k);
    const SparsePolynomial rate_c1_v =
        var(v_var) - var(0, 2) * Rational(2) + cvar(2) * (Rational(2) * beta) + sum_high * beta;

    // Slow-time equations (everything multiplied by c1 to remove the 1/c1
    // singularity of the v equation).
    const SparsePolynomial dot_v =
        -(rate_c1_v * (constant(alpha) - var(v_var))) - var(0, 2) * tail_rate;
    SparsePolynomial dot_c1 = c1 * rate_c1_v;
    SparsePolynomial dot_w = dot_v + c1 * rate_c[0] * (Rational(2) * beta);
    for (int j = 3; j <= i; ++j) dot_w += c1 * rate_c[j - 2] * beta;

    // Change to the contracted coordinate: v = w - 2*beta*c2 - beta*(c3+..+ci).
    SparsePolynomial v_of_w = var(w_var) - cvar(2) * (Rational(2) * beta) - sum_high * beta;
    dot_c1 = dot_c1.substituted(v_var, v_of_w);
    dot_w = dot_w.substituted(v_var, v_of_w);

    PolynomialField field;
    field.i = i;
    field.alpha = alpha;
    field.beta = beta;
    field.dot_c1 = drop_last_variable(dot_c1);
    field.dot_w = drop_last_variable(dot_w);
    for (auto& r : rate_c) field.rate_c.push_back(drop_last_variable(r));

    // The monomer equation must collapse to c1*(w - 2*c1^2).
    SparsePolynomial expected = SparsePolynomial::variable(i + 1, 0) *
                                (SparsePolynomial::variable(i + 1, i) -
                                 SparsePolynomial::variable(i + 1, 0, 2) * Rational(2));
    if (!(field.dot_c1 == expected)) throw std::logic_error("monomer equation failed to contract");
    return field;
}

namespace {

struct SolveContext {
    const PolynomialField& field;
    int order;
    std::vector<TruncatedSeries> args;  // composition arguments: c1, c2.., ci, w

    TruncatedSeries& w_series() { return args[field.w_index()]; }
    TruncatedSeries& c_series(int j) { return args[j - 1]; }

    // Residual of the invariance equation for w:
    //   dot_c1(args) * dw/dc1 - dot_w(args)
    Rational w_residual_coeff(int k) const {
        const TruncatedSeries lhs =
            field.dot_c1.compose(args) * args[field.w_index()].derivative();
        return (lhs - field.dot_w.compose(args))[k];
    }

    // Residual of the invariance equation for c_j:
    //   (w - 2 c1^2) * dg_j/dc1 - rate_j(args)
    Rational c_residual_coeff(int j, int k) const {
        TruncatedSeries slow = args[field.w_index()] -
                               TruncatedSeries::monomial(order, 2, 2);
        const TruncatedSeries lhs = slow * args[j - 1].derivative();
        return (lhs - field.rate_for(j).compose(args))[k];
    }
};

// Solves the affine equation residual(gamma) = 0 for the coefficient at
// power k of one series, probing gamma = 0 and gamma = 1.
template <class Residual>
Rational solve_coefficient(TruncatedSeries& series, int k, const Residual& residual,
                           const Rational& expected_pivot, const std::string& variable) {
    series.set(k, 0);
    const Rational r0 = residual();
    series.set(k, 1);
    const Rational r1 = residual();
    const Rational pivot = r1 - r0;
    if (pivot == 0) throw ZeroPivotError("zero pivot at order " + std::to_string(k) +
                                             " for " + variable,
                                         k, variable);
    if (abs(pivot) != abs(expected_pivot))
        throw ZeroPivotError("unexpected pivot structure at order " + std::to_string(k) +
                                 " for " + variable,
                             k, variable);
    Rational gamma = -r0 / pivot;
    gamma.canonicalize();
    series.set(k, gamma);
    return gamma;
}

}  // namespace

CentreManifoldExpansion solve_centre_manifold(const PolynomialField& field, int order) {
    if (order < 2) throw std::invalid_argument("order must be >= 2");
    const int i = field.i;

    SolveContext ctx{field, order, {}};
    ctx.args.assign(i + 1, TruncatedSeries(order));
    ctx.args[0] = TruncatedSeries::monomial(order, 1);  // c1 is the curve parameter

    for (int k = 2; k <= order; ++k) {
        solve_coefficient(
            ctx.w_series(), k, [&] { return ctx.w_residual_coeff(k); }, field.alpha, "w");
        for (int j = i; j >= 2; --j) {
            solve_coefficient(
                ctx.c_series(j), k, [&] { return ctx.c_residual_coeff(j, k); }, field.beta,
                "c" + std::to_string(j));
        }
    }

    CentreManifoldExpansion out;
    out.i = i;
    out.alpha = field.alpha;
    out.beta = field.beta;
    out.order = order;
    for (int j = 2; j <= i; ++j) out.g.emplace(j, ctx.c_series(j));
    out.g_w = ctx.w_series();
    out.reduced = out.g_w - TruncatedSeries::monomial(order, 2, 2);
    return out;
}

TruncatedSeries reduced_ode(const CentreManifoldExpansion& expansion) { return expansion.reduced; }

GrowthReport coefficient_growth(const TruncatedSeries& series) {
    GrowthReport report;
    for (int k = 1; k <= series.order(); ++k) {
        if (series[k] == 0) continue;
        const double mag = std::abs(to_double(series[k]));
        report.roots.emplace_back(k, std::pow(mag, 1.0 / k));
    }
    return report;
}

ConvergenceProbe convergence_probe(const CentreManifoldExpansion& expansion) {
    if (expansion.order < 10) throw std::invalid_argument("probe needs order >= 10");
    ConvergenceProbe probe;
    for (const auto& [j, series] : expansion.g) probe.g.emplace(j, coefficient_growth(series));
    probe.g_w = coefficient_growth(expansion.g_w);
    probe.reduced = coefficient_growth(expansion.reduced);
    return probe;
}

}  // namespace island
