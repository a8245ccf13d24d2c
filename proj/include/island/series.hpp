#pragma once

#include <vector>

#include "island/rational.hpp"

namespace island {

// Dense univariate power series in the monomer concentration, truncated at a
// fixed order. All arithmetic stays inside the truncated ring: products drop
// terms beyond the order, so results are exact through the retained powers.
class TruncatedSeries {
  public:
    TruncatedSeries() = default;
    explicit TruncatedSeries(int order) : coeff_(order + 1) {}
    TruncatedSeries(int order, std::vector<Rational> coeffs);

    static TruncatedSeries monomial(int order, int power, Rational scale = 1);

    int order() const { return static_cast<int>(coeff_.size()) - 1; }
    const Rational& operator[](int power) const { return coeff_.at(power); }
    void set(int power, Rational value) { coeff_.at(power) = std::move(value); }
    const std::vector<Rational>& coefficients() const { return coeff_; }

    TruncatedSeries& operator+=(const TruncatedSeries& other);
    TruncatedSeries& operator-=(const TruncatedSeries& other);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    TruncatedSeries operator*(const TruncatedSeries& other) const;
    TruncatedSeries operator*(const Rational& scalar) const;
    bool operator==(const TruncatedSeries& other) const { return coeff_ == other.coeff_; }

    // d/dc1; the top coefficient of the result is unreliable only beyond
    // order()-1, which the solver never reads.
    TruncatedSeries derivative() const;

    // Multiplies by c1^k (shift up, dropping overflowing powers).
    TruncatedSeries shifted(int k) const;

    // Multiplicative inverse; requires a nonzero constant term.
    TruncatedSeries inverse() const;

    bool is_zero() const;

    Rational evaluate(const Rational& x) const;  // Horner, exact
    double evaluate(double x) const;

    std::string str(const std::string& var = "c1") const;

  private:
    std::vector<Rational> coeff_;  // coeff_[k] multiplies c1^k
};

}  // namespace island
