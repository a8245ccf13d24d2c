#include "island/model.hpp"

namespace island {

ModelParams build_params(int i, const Rational& alpha_tilde, const Rational& beta) {
    if (i < 2) throw std::invalid_argument("i must be >= 2");
    if (sgn(alpha_tilde) <= 0) throw std::invalid_argument("alpha_tilde must be positive");
    if (sgn(beta) <= 0) throw std::invalid_argument("beta must be positive");
    ModelParams p;
    p.i = i;
    p.n = i + 1;
    p.alpha_tilde = alpha_tilde;
    p.beta = beta;
    p.alpha = alpha_tilde / (beta * beta);
    p.alpha.canonicalize();
    return p;
}

Observables observables(const ModelParams& params, const TruncatedState& state) {
    Observables obs;
    const auto& c = state.c;
    for (int j = 1; j <= state.n_max(); ++j) {
        obs.mass += j * c[j - 1];
        obs.number += c[j - 1];
        if (j >= 2) obs.tail_number += c[j - 1];
    }
    obs.mass += state.overflow_mass;
    obs.number += state.overflow_count;
    obs.tail_number += state.overflow_count;

    const double c1 = c.empty() ? 0.0 : c[0];
    obs.v = to_double(params.alpha) - c1 * obs.tail_number;
    obs.w = obs.v;
    if (state.n_max() >= 2) obs.w += 2.0 * c[1];
    for (int k = 3; k <= params.i && k <= state.n_max(); ++k) obs.w += c[k - 1];
    obs.tail_rate = c1 * c1 - (state.n_max() >= 2 ? c[1] : 0.0);
    return obs;
}

TruncatedState scale_state(const ModelParams& params, const TruncatedState& physical) {
    const double beta = to_double(params.beta);
    TruncatedState s = physical;
    for (auto& cj : s.c) cj /= beta;
    s.overflow_count /= beta;
    s.overflow_mass /= beta;
    s.time = physical.time * beta;
    return s;
}

TruncatedState unscale_state(const ModelParams& params, const TruncatedState& scaled) {
    const double beta = to_double(params.beta);
    TruncatedState s = scaled;
    for (auto& cj : s.c) cj *= beta;
    s.overflow_count *= beta;
    s.overflow_mass *= beta;
    s.time = scaled.time / beta;
    return s;
}

}  // namespace island
