#include "island/compartments.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace island {

Rational Flow::rate(std::span<const Rational> state) const {
    Rational r = coefficient;
    for (std::size_t k = 0; k < exponents.size(); ++k)
        for (int e = 0; e < exponents[k]; ++e) r *= state[k];
    return r;
}

std::string Flow::monomial_str() const {
    std::ostringstream out;
    bool printed = false;
    if (coefficient != 1) {
        out << to_string(coefficient);
        printed = true;
    }
    for (std::size_t k = 0; k < exponents.size(); ++k) {
        if (exponents[k] == 0) continue;
        if (printed) out << "*";
        out << "c" << (k + 1);
        if (exponents[k] > 1) out << "^" << exponents[k];
        printed = true;
    }
    if (!printed) out << "1";
    return out.str();
}

namespace {

Flow make_flow(int i, int to, int from, std::initializer_list<int> powers_of,
               const Rational& coefficient, const Rational& w_target, const Rational& w_source,
               std::string label) {
    Flow f;
    f.to = to;
    f.from = from;
    f.coefficient = coefficient;
    f.exponents.assign(i, 0);
    for (int size : powers_of) ++f.exponents.at(size - 1);
    f.weight_target = w_target;
    f.weight_source = w_source;
    f.label = std::move(label);
    return f;
}

}  // namespace

CompartmentDecomposition decompose(int i, const Rational& alpha, std::span<const Rational> state) {
    if (i < 2) throw std::invalid_argument("i must be >= 2");
    if (static_cast<int>(state.size()) != i) throw std::invalid_argument("state needs i entries");
    for (const auto& c : state)
        if (sgn(c) < 0) throw std::invalid_argument("negative state");

    CompartmentDecomposition d;
    d.i = i;
    d.alpha = alpha;
    d.state.assign(state.begin(), state.end());
    d.input_1 = alpha;

    // Dimerisation: two monomers leave compartment 1, one dimer arrives.
    d.flows.push_back(make_flow(i, 2, 1, {1, 1}, 1, 1, 2, "F_{2,1}"));
    // Growth along the chain: the cluster converts (j-1 -> j)...
    for (int j = 3; j <= i; ++j)
        d.flows.push_back(make_flow(i, j, j - 1, {1, j - 1}, 1, 1, 1,
                                    "F_{" + std::to_string(j) + "," + std::to_string(j - 1) + "}"));
    // ...and the attached monomer leaves compartment 1 (already credited to j
    // by the conversion flow above).
    for (int j = 3; j <= i; ++j)
        d.flows.push_back(make_flow(i, j, 1, {1, j - 1}, 1, 0, 1,
                                    "F_{" + std::to_string(j) + ",1}"));
    // Dimer fragmentation: one dimer leaves, two monomers arrive.
    d.flows.push_back(make_flow(i, 1, 2, {2}, 2, 1, Rational(1, 2), "F_{1,2}"));
    // Fragmentation down the chain plus the released monomer (the cluster is
    // already charged by the conversion flow).
    for (int j = 3; j <= i; ++j) {
        d.flows.push_back(make_flow(i, j - 1, j, {j}, 1, 1, 1,
                                    "F_{" + std::to_string(j - 1) + "," + std::to_string(j) + "}"));
        d.flows.push_back(make_flow(i, 1, j, {j}, 1, 1, 0, "F_{1," + std::to_string(j) + "}"));
    }
    // Outflows: the monomer consumed on an i-mer leaves the system; the
    // grown i-mer would leave too, but the comparison system suppresses that
    // escape (reported with weight zero).
    d.outflows.push_back(make_flow(i, 0, 1, {1, i}, 1, 0, 1, "F_{0,1}"));
    d.outflows.push_back(make_flow(i, 0, i, {1, i}, 1, 0, 0, "F_{0," + std::to_string(i) + "}"));
    return d;
}

Rational CompartmentDecomposition::flow_value(int to, int from) const {
    Rational acc = 0;
    for (const auto& f : flows)
        if (f.to == to && f.from == from) acc += f.rate(state);
    return acc;
}

Rational CompartmentDecomposition::outflow_value(int j) const {
    Rational acc = 0;
    for (const auto& f : outflows)
        if (f.from == j) acc += f.rate(state);
    return acc;
}

std::vector<Rational> CompartmentDecomposition::reconstruct() const {
    std::vector<Rational> d(i, Rational(0));
    d[0] += input_1;
    auto apply = [&](const Flow& f) {
        const Rational r = f.rate(state);
        if (f.to >= 1) d[f.to - 1] += f.weight_target * r;
        if (f.from >= 1) d[f.from - 1] -= f.weight_source * r;
    };
    for (const auto& f : flows) apply(f);
    for (const auto& f : outflows) apply(f);
    for (auto& v : d) v.canonicalize();
    return d;
}

MonotonicityReport check_flows(const std::vector<Flow>& flows) {
    MonotonicityReport report;
    for (const auto& f : flows) {
        std::string desc = f.label + " = " + f.monomial_str();
        report.flows.push_back(desc);
        bool ok = sgn(f.coefficient) > 0;
        for (int e : f.exponents) ok = ok && e >= 0;
        if (!ok && !report.witness) {
            report.pass = false;
            report.witness = desc;
        }
    }
    return report;
}

MonotonicityReport monotonicity_check(int i) {
    std::vector<Rational> probe(i, Rational(1));
    const CompartmentDecomposition d = decompose(i, 1, probe);
    std::vector<Flow> all = d.flows;
    all.insert(all.end(), d.outflows.begin(), d.outflows.end());
    return check_flows(all);
}

Equilibrium equilibrium(int i, const Rational& alpha) {
    if (sgn(alpha) <= 0) throw std::invalid_argument("alpha must be positive");
    Equilibrium eq;
    const auto root = exact_root(alpha, i + 1);
    if (root) {
        eq.is_exact = true;
        Rational power = 1;
        for (int j = 1; j <= i; ++j) {
            power *= *root;
            power.canonicalize();
            eq.exact.push_back(power);
        }
    }
    const double alpha_d = to_double(alpha);
    for (int j = 1; j <= i; ++j)
        eq.approx.push_back(std::pow(alpha_d, static_cast<double>(j) / (i + 1)));
    if (eq.is_exact)
        for (int j = 0; j < i; ++j) eq.approx[j] = to_double(eq.exact[j]);
    return eq;
}

std::vector<Rational> verify_equilibrium(int i, const Rational& alpha,
                                         std::span<const Rational> point) {
    return comparison_rhs<Rational>(i, alpha, point);
}

std::vector<double> verify_equilibrium(int i, double alpha, std::span<const double> point) {
    return comparison_rhs<double>(i, alpha, point);
}

}  // namespace island
