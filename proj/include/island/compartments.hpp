#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "island/rational.hpp"

namespace island {

// One directed flow between compartments (0 denotes the environment). The
// rate is a monomial coefficient * prod c_k^exponents[k]. Reactions that
// change the cluster count cannot be written as unit-for-unit transfers, so
// each flow carries explicit stoichiometric weights: `weight_target` units
// arrive per rate unit and `weight_source` units leave.
struct Flow {
    int to = 0;
    int from = 0;
    Rational coefficient = 1;
    std::vector<int> exponents;  // over c_1..c_i
    Rational weight_target = 1;
    Rational weight_source = 1;
    std::string label;

    Rational rate(std::span<const Rational> state) const;
    std::string monomial_str() const;
};

// The flow-graph form of the bounded comparison system: the chain of
// compartments 1..i with growth flows upward, fragmentation flows downward,
// monomer returns to compartment 1, deposition input at 1, and the escape of
// i-mers into immobile sizes suppressed (reported, weight zero).
struct CompartmentDecomposition {
    int i = 2;
    Rational alpha = 1;
    std::vector<Rational> state;
    std::vector<Flow> flows;     // inter-compartment flows
    std::vector<Flow> outflows;  // to the environment: F_01 and F_0i, both c1*c_i
    Rational input_1 = 1;        // deposition, the only external input

    // Sum of flow rates into `to` from `from` (the labelled flow values).
    Rational flow_value(int to, int from) const;
    Rational outflow_value(int j) const;

    // Reassembles the per-compartment derivatives from the flows; equals the
    // comparison-system right-hand side exactly.
    std::vector<Rational> reconstruct() const;
};

// Right-hand side of the comparison system used for the boundedness and
// equilibrium checks: the reduced chain with the i-mer escape term dropped
// from the i-th equation (growth past size i neither depletes i-mers nor
// feeds back), while the monomer budget keeps its consumption term.
template <class S>
std::vector<S> comparison_rhs(int i, const S& alpha, std::span<const S> c) {
    if (static_cast<int>(c.size()) != i) throw std::invalid_argument("state needs i entries");
    std::vector<S> d(i, S(0));
    S mobile_tail = S(0), subcritical = S(0);
    for (int k = 2; k <= i; ++k) mobile_tail += c[k - 1];
    for (int k = 3; k <= i; ++k) subcritical += c[k - 1];
    const S& c1 = c[0];
    d[0] = alpha - S(2) * c1 * c1 + S(2) * c[1] - c1 * mobile_tail + subcritical;
    for (int j = 2; j < i; ++j)
        d[j - 1] = c1 * c[j - 2] - c1 * c[j - 1] - c[j - 1] + c[j];
    d[i - 1] = c1 * c[i - 2] - c[i - 1];
    return d;
}

CompartmentDecomposition decompose(int i, const Rational& alpha, std::span<const Rational> state);

struct MonotonicityReport {
    bool pass = true;
    std::vector<std::string> flows;          // monomial form of every flow
    std::optional<std::string> witness;      // first offending flow, if any
};

// The flows are fixed monomials, so checking the sign of every coefficient
// (and non-negativity of every exponent) settles the monotonicity condition
// on the whole non-negative orthant; nothing is sampled.
MonotonicityReport monotonicity_check(int i);
MonotonicityReport check_flows(const std::vector<Flow>& flows);  // test hook

struct Equilibrium {
    std::vector<Rational> exact;   // populated when alpha is a perfect (i+1)-th power
    std::vector<double> approx;    // always populated
    bool is_exact = false;
};

// The positive rest point (alpha^{1/(i+1)}, .., alpha^{i/(i+1)}).
Equilibrium equilibrium(int i, const Rational& alpha);

// Residuals of the comparison system at a candidate point.
std::vector<Rational> verify_equilibrium(int i, const Rational& alpha, std::span<const Rational> point);
std::vector<double> verify_equilibrium(int i, double alpha, std::span<const double> point);

}  // namespace island
