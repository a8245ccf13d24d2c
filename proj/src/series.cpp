#include "island/series.hpp"

#include <sstream>
#include <stdexcept>

namespace island {

TruncatedSeries::TruncatedSeries(int order, std::vector<Rational> coeffs)
    : coeff_(std::move(coeffs)) {
    coeff_.resize(order + 1);
}

TruncatedSeries TruncatedSeries::monomial(int order, int power, Rational scale) {
    TruncatedSeries s(order);
    if (power <= order) s.coeff_[power] = std::move(scale);
    return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
    if (other.order() != order()) throw std::invalid_argument("series order mismatch");
    for (size_t k = 0; k < coeff_.size(); ++k) coeff_[k] += other.coeff_[k];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
    if (other.order() != order()) throw std::invalid_argument("series order mismatch");
    for (size_t k = 0; k < coeff_.size(); ++k) coeff_[k] -= other.coeff_[k];
    return *this;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& other) const {
    if (other.order() != order()) throw std::invalid_argument("series order mismatch");
    const int n = order();
    TruncatedSeries out(n);
    for (int a = 0; a <= n; ++a) {
        if (coeff_[a] == 0) continue;
        for (int b = 0; a + b <= n; ++b) {
            if (other.coeff_[b] == 0) continue;
            out.coeff_[a + b] += coeff_[a] * other.coeff_[b];
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::operator*(const Rational& scalar) const {
    TruncatedSeries out(order());
    for (size_t k = 0; k < coeff_.size(); ++k) out.coeff_[k] = coeff_[k] * scalar;
    return out;
}

TruncatedSeries TruncatedSeries::derivative() const {
    TruncatedSeries out(order());
    for (int k = 1; k <= order(); ++k) out.coeff_[k - 1] = coeff_[k] * k;
    return out;
}

TruncatedSeries TruncatedSeries::shifted(int k) const {
    TruncatedSeries out(order());
    for (int p = 0; p + k <= order(); ++p) out.coeff_[p + k] = coeff_[p];
    return out;
}

TruncatedSeries TruncatedSeries::inverse() const {
    if (coeff_[0] == 0) throw std::domain_error("series has no inverse: zero constant term");
    const int n = order();
    TruncatedSeries out(n);
    out.coeff_[0] = 1 / coeff_[0];
    for (int k = 1; k <= n; ++k) {
        Rational acc = 0;
        for (int m = 1; m <= k; ++m) acc += coeff_[m] * out.coeff_[k - m];
        out.coeff_[k] = -acc / coeff_[0];
    }
    return out;
}

bool TruncatedSeries::is_zero() const {
    for (const auto& c : coeff_)
        if (c != 0) return false;
    return true;
}

Rational TruncatedSeries::evaluate(const Rational& x) const {
    Rational acc = 0;
    for (int k = order(); k >= 0; --k) acc = acc * x + coeff_[k];
    return acc;
}

double TruncatedSeries::evaluate(double x) const {
    double acc = 0.0;
    for (int k = order(); k >= 0; --k) acc = acc * x + to_double(coeff_[k]);
    return acc;
}

std::string TruncatedSeries::str(const std::string& var) const {
    std::ostringstream out;
    bool first = true;
    for (int k = 0; k <= order(); ++k) {
        if (coeff_[k] == 0) continue;
        Rational c = coeff_[k];
        if (first) {
            if (sgn(c) < 0) out << "-";
        } else {
            out << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        Rational a = abs(c);
        if (a != 1 || k == 0) out << to_string(a) << (k > 0 ? "*" : "");
        if (k == 1)
            out << var;
        else if (k > 1)
            out << var << "^" << k;
    }
    if (first) out << "0";
    return out.str();
}

}  // namespace island
