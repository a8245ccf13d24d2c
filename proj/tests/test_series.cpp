#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "island/polynomial.hpp"
#include "island/series.hpp"

using namespace island;

TEST_CASE("series arithmetic is exact and truncated") {
    TruncatedSeries a(4), b(4);
    a.set(0, rat(1));
    a.set(2, rat(1, 2));
    b.set(1, rat(3));
    b.set(3, rat(-1));

    auto sum = a + b;
    CHECK(sum[0] == rat(1));
    CHECK(sum[1] == rat(3));
    CHECK(sum[2] == rat(1, 2));
    CHECK(sum[3] == rat(-1));

    auto prod = a * b;
    // (1 + x^2/2)(3x - x^3) = 3x + x^3/2 - x^5/2 -> truncation drops x^5
    CHECK(prod[1] == rat(3));
    CHECK(prod[2] == 0);
    CHECK(prod[3] == rat(1, 2));
    CHECK(prod[4] == 0);
}

TEST_CASE("derivative and shift") {
    TruncatedSeries s(5);
    s.set(2, rat(1));
    s.set(5, rat(7));
    auto d = s.derivative();
    CHECK(d[1] == rat(2));
    CHECK(d[4] == rat(35));
    auto up = s.shifted(2);
    CHECK(up[4] == rat(1));
    CHECK(up[2] == 0);
}

TEST_CASE("geometric series inverse") {
    // 1/(1 - x) has all coefficients 1
    TruncatedSeries denom(8);
    denom.set(0, rat(1));
    denom.set(1, rat(-1));
    auto inv = denom.inverse();
    for (int k = 0; k <= 8; ++k) CHECK(inv[k] == rat(1));
}

TEST_CASE("Horner evaluation is exact for rational points") {
    TruncatedSeries s = TruncatedSeries::monomial(4, 2, rat(2));  // 2 x^2
    CHECK(s.evaluate(rat(1, 2)) == rat(1, 2));
    CHECK(s.evaluate(rat(0)) == 0);
    CHECK(s.evaluate(0.5) == doctest::Approx(0.5));
}

TEST_CASE("sparse polynomial algebra") {
    // p = x0^2 - x0*x1, q = x1 + 1 over two variables
    auto x0 = SparsePolynomial::variable(2, 0);
    auto x1 = SparsePolynomial::variable(2, 1);
    auto p = x0 * x0 - x0 * x1;
    auto q = x1 + SparsePolynomial::constant(2, 1);

    auto prod = p * q;
    CHECK(prod.coefficient({2, 1}) == rat(1));
    CHECK(prod.coefficient({2, 0}) == rat(1));
    CHECK(prod.coefficient({1, 2}) == rat(-1));
    CHECK(prod.coefficient({1, 1}) == rat(-1));

    std::vector<Rational> point{rat(3), rat(2)};
    CHECK(p.evaluate(point) == rat(3));  // 9 - 6

    auto swapped = p.substituted(1, x0);  // x1 -> x0: x0^2 - x0^2 = 0
    CHECK(swapped.is_zero());

    auto divided = p.divided_by_variable(0);
    CHECK(divided.coefficient({1, 0}) == rat(1));
    CHECK(divided.coefficient({0, 1}) == rat(-1));
}

TEST_CASE("polynomial-series composition truncates correctly") {
    // p(x0, x1) = x0 * x1 with x0 = identity, x1 = x^2 + x^3 -> x^3 + x^4
    auto p = SparsePolynomial::variable(2, 0) * SparsePolynomial::variable(2, 1);
    std::vector<TruncatedSeries> args{TruncatedSeries::monomial(4, 1), TruncatedSeries(4)};
    args[1].set(2, rat(1));
    args[1].set(3, rat(1));
    auto composed = p.compose(args);
    CHECK(composed[3] == rat(1));
    CHECK(composed[4] == rat(1));
    CHECK(composed[2] == 0);
}

TEST_CASE("series survives round trips through strings") {
    TruncatedSeries s(3);
    s.set(0, rat(-1, 3));
    s.set(2, rat(5));
    CHECK(s.str() == "-1/3 + 5*c1^2");
}
