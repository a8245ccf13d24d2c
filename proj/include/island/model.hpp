#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "island/rational.hpp"

namespace island {

// Physical and scaled parameters of the deposition model. Internally all
// dynamics run in scaled variables (fragmentation rate eliminated); physical
// units appear only at the I/O boundary via scale_state/unscale_state.
struct ModelParams {
    int i = 2;                 // critical island size; clusters above i are immobile
    int n = 3;                 // immobile threshold, always i + 1
    Rational alpha_tilde = 1;  // deposition rate, physical units
    Rational beta = 1;         // fragmentation rate, physical units
    Rational alpha = 1;        // scaled deposition rate, alpha_tilde / beta^2

    template <class S>
    S alpha_as() const;
};

template <>
inline double ModelParams::alpha_as<double>() const { return to_double(alpha); }
template <>
inline Rational ModelParams::alpha_as<Rational>() const { return alpha; }

ModelParams build_params(int i, const Rational& alpha_tilde, const Rational& beta);

// Concentrations c_1..c_N plus the matter absorbed past the truncation edge.
// Clusters that grow beyond N_max leave the explicit state; their number and
// mass are accumulated so conservation checks stay exact.
struct TruncatedState {
    std::vector<double> c;
    double overflow_count = 0.0;
    double overflow_mass = 0.0;
    double time = 0.0;

    int n_max() const { return static_cast<int>(c.size()); }
};

// c_1..c_i plus the lumped tail y = sum of all concentrations above size i.
struct ReducedState {
    std::vector<double> c;
    double y = 0.0;
    double time = 0.0;
};

struct Observables {
    double mass = 0.0;       // sum j*c_j, overflow mass included
    double number = 0.0;     // sum c_j, overflow count included
    double tail_number = 0.0;  // z = sum of c_k for k >= 2, overflow included
    double v = 0.0;          // alpha - c1 * z
    double w = 0.0;          // v + 2 c2 + sum_{k=3..i} c_k
    double tail_rate = 0.0;  // c1^2 - c2
};

// Right-hand side of the truncated full system, scaled variables. The
// infinite tail sum in the monomer equation is replaced by the sum up to
// N_max; the boundary cluster loses mass to the overflow accumulators at
// rates d_count = c1*c_N and d_mass = (N_max+1)*c1*c_N.
//
// Works over double (integration) and Rational (exact identity checks).
template <class S>
void rhs_truncated(const ModelParams& params, std::span<const S> c, std::span<S> dc,
                   S& d_overflow_count, S& d_overflow_mass) {
    const int n_max = static_cast<int>(c.size());
    if (n_max < params.i + 2) throw std::invalid_argument("state too short: need N_max >= i+2");
    if (static_cast<int>(dc.size()) != n_max) throw std::invalid_argument("derivative size mismatch");
    const S alpha = params.alpha_as<S>();
    const S& c1 = c[0];

    S tail = S(0);  // sum_{k=2..N_max} c_k
    for (int k = 2; k <= n_max; ++k) tail += c[k - 1];
    S subcritical = S(0);  // sum_{k=3..i} c_k (empty for i = 2)
    for (int k = 3; k <= params.i; ++k) subcritical += c[k - 1];

    dc[0] = alpha - S(2) * c1 * c1 + S(2) * c[1] - c1 * tail + subcritical;
    for (int j = 2; j <= n_max; ++j) {
        S growth = c1 * c[j - 2] - c1 * c[j - 1];
        if (j < params.i)
            dc[j - 1] = growth - c[j - 1] + c[j];
        else if (j == params.i)
            dc[j - 1] = growth - c[j - 1];
        else
            dc[j - 1] = growth;
    }
    d_overflow_count = c1 * c[n_max - 1];
    d_overflow_mass = S(n_max + 1) * c1 * c[n_max - 1];
}

// Right-hand side of the (i+1)-dimensional reduced system: components
// c_1..c_i evolve as in the full system with the tail lumped into y, and
// y' = c1*c_i counts clusters crossing the immobile threshold.
template <class S>
void rhs_reduced(const ModelParams& params, std::span<const S> state, std::span<S> d) {
    const int i = params.i;
    if (static_cast<int>(state.size()) != i + 1) throw std::invalid_argument("reduced state needs i+1 entries");
    if (d.size() != state.size()) throw std::invalid_argument("derivative size mismatch");
    const S alpha = params.alpha_as<S>();
    const S& c1 = state[0];
    const S& y = state[i];

    S mobile_tail = S(0);  // sum_{k=2..i} c_k
    for (int k = 2; k <= i; ++k) mobile_tail += state[k - 1];
    S subcritical = S(0);
    for (int k = 3; k <= i; ++k) subcritical += state[k - 1];

    d[0] = alpha - S(2) * c1 * c1 + S(2) * state[1] - c1 * mobile_tail + subcritical - c1 * y;
    for (int j = 2; j < i; ++j)
        d[j - 1] = c1 * state[j - 2] - c1 * state[j - 1] - state[j - 1] + state[j];
    d[i - 1] = c1 * state[i - 2] - c1 * state[i - 1] - state[i - 1];
    d[i] = c1 * state[i - 1];
}

Observables observables(const ModelParams& params, const TruncatedState& state);

// Scaled <-> physical unit maps: C_j = beta*c_j, t = T/beta.
TruncatedState scale_state(const ModelParams& params, const TruncatedState& physical);
TruncatedState unscale_state(const ModelParams& params, const TruncatedState& scaled);

}  // namespace island
