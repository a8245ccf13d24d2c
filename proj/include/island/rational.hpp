#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace island {

// Exact rational scalar used everywhere an identity must hold exactly.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "p/q" or a plain decimal integer string.
inline Rational parse_rational(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0)
        throw std::invalid_argument("cannot parse rational: '" + text + "'");
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    r.canonicalize();
    return r;
}

// Canonical "p/q" (or "p" when q = 1), lowest terms.
inline std::string to_string(const Rational& r) {
    return r.get_str();
}

inline double to_double(const Rational& r) {
    return r.get_d();
}

inline Rational pow_rational(const Rational& base, unsigned exp) {
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exp);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exp);
    out.canonicalize();
    return out;
}

// Exact n-th root when one exists: returns r with r^n == value (value >= 0).
inline std::optional<Rational> exact_root(const Rational& value, unsigned n) {
    if (n == 0) throw std::invalid_argument("zeroth root");
    if (sgn(value) < 0) return std::nullopt;
    Rational root;
    const int num_exact =
        mpz_root(root.get_num_mpz_t(), value.get_num_mpz_t(), n);
    const int den_exact =
        mpz_root(root.get_den_mpz_t(), value.get_den_mpz_t(), n);
    if (!num_exact || !den_exact) return std::nullopt;
    root.canonicalize();
    return root;
}

}  // namespace island
