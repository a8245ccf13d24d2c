#include "island/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace island {

SparsePolynomial SparsePolynomial::constant(int nvars, Rational value) {
    SparsePolynomial p(nvars);
    p.add_term(Exponents(nvars, 0), value);
    return p;
}

SparsePolynomial SparsePolynomial::variable(int nvars, int var, int power) {
    SparsePolynomial p(nvars);
    Exponents e(nvars, 0);
    e.at(var) = power;
    p.add_term(e, 1);
    return p;
}

void SparsePolynomial::add_term(const Exponents& exp, const Rational& coeff) {
    if (static_cast<int>(exp.size()) != nvars_)
        throw std::invalid_argument("exponent vector length mismatch");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(exp, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational SparsePolynomial::coefficient(const Exponents& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rational(0) : it->second;
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& other) {
    if (other.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
    for (const auto& [exp, c] : other.terms_) add_term(exp, c);
    return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& other) {
    if (other.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
    for (const auto& [exp, c] : other.terms_) add_term(exp, -c);
    return *this;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& other) const {
    if (other.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
    SparsePolynomial out(nvars_);
    Exponents sum(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : other.terms_) {
            for (int v = 0; v < nvars_; ++v) sum[v] = ea[v] + eb[v];
            out.add_term(sum, ca * cb);
        }
    }
    return out;
}

SparsePolynomial SparsePolynomial::operator*(const Rational& scalar) const {
    SparsePolynomial out(nvars_);
    if (scalar == 0) return out;
    for (const auto& [exp, c] : terms_) out.terms_.emplace(exp, c * scalar);
    return out;
}

bool SparsePolynomial::operator==(const SparsePolynomial& other) const {
    return nvars_ == other.nvars_ && terms_ == other.terms_;
}

SparsePolynomial SparsePolynomial::substituted(int var, const SparsePolynomial& replacement) const {
    if (replacement.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
    SparsePolynomial out(nvars_);
    for (const auto& [exp, c] : terms_) {
        Exponents rest = exp;
        const int power = rest[var];
        rest[var] = 0;
        SparsePolynomial term(nvars_);
        term.add_term(rest, c);
        for (int k = 0; k < power; ++k) term = term * replacement;
        out += term;
    }
    return out;
}

SparsePolynomial SparsePolynomial::divided_by_variable(int var) const {
    SparsePolynomial out(nvars_);
    for (const auto& [exp, c] : terms_) {
        if (exp[var] < 1) throw std::domain_error("term not divisible by variable");
        Exponents e = exp;
        --e[var];
        out.add_term(e, c);
    }
    return out;
}

Rational SparsePolynomial::evaluate(std::span<const Rational> point) const {
    if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("point size mismatch");
    Rational acc = 0;
    for (const auto& [exp, c] : terms_) {
        Rational term = c;
        for (int v = 0; v < nvars_; ++v)
            for (int k = 0; k < exp[v]; ++k) term *= point[v];
        acc += term;
    }
    return acc;
}

double SparsePolynomial::evaluate(std::span<const double> point) const {
    if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("point size mismatch");
    double acc = 0.0;
    for (const auto& [exp, c] : terms_) {
        double term = to_double(c);
        for (int v = 0; v < nvars_; ++v)
            for (int k = 0; k < exp[v]; ++k) term *= point[v];
        acc += term;
    }
    return acc;
}

TruncatedSeries SparsePolynomial::compose(std::span<const TruncatedSeries> args) const {
    if (static_cast<int>(args.size()) != nvars_) throw std::invalid_argument("argument count mismatch");
    int order = args.empty() ? 0 : args[0].order();
    for (const auto& s : args)
        if (s.order() != order) throw std::invalid_argument("series order mismatch");
    TruncatedSeries acc(order);
    for (const auto& [exp, c] : terms_) {
        TruncatedSeries term = TruncatedSeries::monomial(order, 0, c);
        for (int v = 0; v < nvars_; ++v)
            for (int k = 0; k < exp[v]; ++k) term = term * args[v];
        acc += term;
    }
    return acc;
}

std::string SparsePolynomial::str(const std::vector<std::string>& names) const {
    if (static_cast<int>(names.size()) != nvars_) throw std::invalid_argument("name count mismatch");
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [exp, c] : terms_) {
        if (first) {
            if (sgn(c) < 0) out << "-";
        } else {
            out << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        Rational a = abs(c);
        bool printed = false;
        if (a != 1) {
            out << to_string(a);
            printed = true;
        }
        for (int v = 0; v < nvars_; ++v) {
            if (exp[v] == 0) continue;
            if (printed) out << "*";
            out << names[v];
            if (exp[v] > 1) out << "^" << exp[v];
            printed = true;
        }
        if (!printed) out << "1";
    }
    return out.str();
}

}  // namespace island
