#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "island/rational.hpp"
#include "island/series.hpp"

namespace island {

// Sparse multivariate polynomial with exact rational coefficients.
// Monomials are exponent vectors of a fixed length (one slot per variable).
class SparsePolynomial {
  public:
    using Exponents = std::vector<int>;

    SparsePolynomial() = default;
    explicit SparsePolynomial(int nvars) : nvars_(nvars) {}

    static SparsePolynomial constant(int nvars, Rational value);
    static SparsePolynomial variable(int nvars, int var, int power = 1);

    int nvars() const { return nvars_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponents& exp, const Rational& coeff);
    Rational coefficient(const Exponents& exp) const;

    SparsePolynomial& operator+=(const SparsePolynomial& other);
    SparsePolynomial& operator-=(const SparsePolynomial& other);
    friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
    friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
    SparsePolynomial operator*(const SparsePolynomial& other) const;
    SparsePolynomial operator*(const Rational& scalar) const;
    SparsePolynomial operator-() const { return *this * Rational(-1); }
    bool operator==(const SparsePolynomial& other) const;

    // Replaces one variable by a polynomial (exact; exponents of the replaced
    // variable become repeated products).
    SparsePolynomial substituted(int var, const SparsePolynomial& replacement) const;

    // Exact division by a single variable; every term must contain it.
    SparsePolynomial divided_by_variable(int var) const;

    Rational evaluate(std::span<const Rational> point) const;
    double evaluate(std::span<const double> point) const;

    // Composes the polynomial with one truncated series per variable.
    TruncatedSeries compose(std::span<const TruncatedSeries> args) const;

    std::string str(const std::vector<std::string>& names) const;

  private:
    int nvars_ = 0;
    std::map<Exponents, Rational> terms_;
};

}  // namespace island
