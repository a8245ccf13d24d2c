#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "island/model.hpp"
#include "island/qssa.hpp"

using namespace island;

TEST_CASE("closed forms at frozen points") {
    SUBCASE("i=2 at c1=1") {
        auto values = qssa_closed_form_values(2, 1);
        REQUIRE(values.size() == 1);
        CHECK(values[0] == rat(1, 2));
    }
    SUBCASE("i=3 at c1=1") {
        auto values = qssa_closed_form_values(3, 1);
        REQUIRE(values.size() == 2);
        CHECK(values[0] == rat(2, 3));
        CHECK(values[1] == rat(1, 3));
    }
    SUBCASE("all zero at c1=0") {
        for (int i = 2; i <= 6; ++i)
            for (const auto& v : qssa_closed_form_values(i, 0)) CHECK(v == 0);
    }
    SUBCASE("rejects negative c1") { CHECK_THROWS(qssa_closed_form_values(3, rat(-1))); }
}

TEST_CASE("steady-state property: cluster rates vanish identically on the closed forms") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> num(0, 12), den(1, 9);
    for (int i = 2; i <= 6; ++i) {
        auto params = build_params(i, rat(3, 4), rat(1));
        const int n_max = i + 2;
        for (int trial = 0; trial < 12; ++trial) {
            const Rational c1 = rat(num(rng), den(rng));
            auto tail = qssa_closed_form_values(i, c1);
            std::vector<Rational> c(n_max, Rational(0));
            c[0] = c1;
            for (int j = 2; j <= i; ++j) c[j - 1] = tail[j - 2];
            std::vector<Rational> d(n_max);
            Rational d_count, d_mass;
            rhs_truncated<Rational>(params, c, d, d_count, d_mass);
            for (int j = 2; j <= i; ++j) {
                CAPTURE(i);
                CAPTURE(j);
                CHECK(d[j - 1] == 0);
            }
        }
    }
}

TEST_CASE("MacLaurin series of the closed forms") {
    SUBCASE("i=2, j=2: alternating tail") {
        auto s = qssa_series(2, 6);
        const auto& c2 = s.at(2);
        CHECK(c2[2] == 1);
        CHECK(c2[3] == rat(-1));
        CHECK(c2[4] == 1);
        CHECK(c2[5] == rat(-1));
        CHECK(c2[6] == 1);
        CHECK(c2[0] == 0);
        CHECK(c2[1] == 0);
    }
    SUBCASE("i=3, j=2 through order 5") {
        auto s = qssa_series(3, 5);
        const auto& c2 = s.at(2);
        CHECK(c2[2] == 1);
        CHECK(c2[3] == 0);
        CHECK(c2[4] == rat(-1));
        CHECK(c2[5] == 1);
    }
    SUBCASE("leading coefficient is 1 at power j") {
        for (int i = 2; i <= 6; ++i) {
            auto s = qssa_series(i, i + 4);
            for (int j = 2; j <= i; ++j) {
                for (int p = 0; p < j; ++p) CHECK(s.at(j)[p] == 0);
                CHECK(s.at(j)[j] == 1);
            }
        }
    }
    SUBCASE("series matches the closed pattern c1^j + sum_k(-c1^{ki+1} + c1^{ki+j})") {
        for (int i = 2; i <= 5; ++i) {
            const int n = 3 * i + 2;
            auto s = qssa_series(i, n);
            for (int j = 2; j <= i; ++j) {
                TruncatedSeries expected(n);
                expected.set(j, 1);
                for (int k = 1; k * i + 1 <= n; ++k) {
                    expected.set(k * i + 1, expected[k * i + 1] - 1);
                    if (k * i + j <= n) expected.set(k * i + j, expected[k * i + j] + 1);
                }
                CAPTURE(i);
                CAPTURE(j);
                CHECK(s.at(j) == expected);
            }
        }
    }
    SUBCASE("series evaluate to the closed-form values") {
        // agreement through the truncation order: difference divisible by c1^{n+1}
        auto s = qssa_series(4, 20);
        const Rational c1 = rat(1, 7);
        auto values = qssa_closed_form_values(4, c1);
        for (int j = 2; j <= 4; ++j) {
            const Rational series_value = s.at(j).evaluate(c1);
            const Rational diff = abs(series_value - values[j - 2]);
            CHECK(diff < pow_rational(c1, 20));
        }
    }
}

TEST_CASE("stable-coordinate series under the steady-state closure") {
    SUBCASE("i=2, alpha=1, through order 9") {
        auto gw = qssa_gw(2, 1, 9);
        CHECK(gw[2] == 2);
        CHECK(gw[3] == 0);
        CHECK(gw[4] == 0);
        CHECK(gw[5] == rat(-1));
        CHECK(gw[6] == 1);
        CHECK(gw[7] == rat(-1));
        CHECK(gw[8] == 1);
        CHECK(gw[9] == rat(-1));
    }
    SUBCASE("no cubic term for any i") {
        for (int i = 2; i <= 6; ++i) CHECK(qssa_gw(i, rat(5, 3), 4)[3] == 0);
    }
    SUBCASE("i=5, alpha=2 through order 9") {
        auto gw = qssa_gw(5, 2, 9);
        CHECK(gw[2] == 2);
        for (int p = 3; p <= 7; ++p) CHECK(gw[p] == 0);
        CHECK(gw[8] == rat(-1, 2));
        CHECK(gw[9] == rat(1, 2));
    }
    SUBCASE("matches the closed pattern 2c1^2 + (1/alpha) sum_k(-c1^{ki+3} + c1^{ki+4})") {
        for (int i = 2; i <= 5; ++i) {
            for (const Rational& alpha : {rat(1), rat(1, 2), rat(3)}) {
                const int n = 2 * i + 5;
                auto gw = qssa_gw(i, alpha, n);
                TruncatedSeries expected(n);
                expected.set(2, 2);
                for (int k = 1; k * i + 3 <= n; ++k) {
                    expected.set(k * i + 3, expected[k * i + 3] - 1 / alpha);
                    if (k * i + 4 <= n) expected.set(k * i + 4, expected[k * i + 4] + 1 / alpha);
                }
                CAPTURE(i);
                CHECK(gw == expected);
            }
        }
    }
}

TEST_CASE("divergence between the manifold and steady-state reductions") {
    SUBCASE("i=5, alpha=1: equal at 8, 9, 13; first difference at 14 with 31 vs 1") {
        auto cm = solve_centre_manifold(build_field(5, 1, 1), 16);
        auto q = qssa_expand(5, 1, 16);
        auto report = compare_expansions(cm, q);
        CHECK(report.leading_terms_agree);
        CHECK(report.rows[8].equal);
        CHECK(report.rows[9].equal);
        CHECK(report.rows[13].equal);
        CHECK(report.first_divergence == 14);
        CHECK(report.rows[14].cm_coeff == rat(31));
        CHECK(report.rows[14].qssa_coeff == rat(1));
    }
    SUBCASE("i=2, alpha=1: same first three terms") {
        auto cm = solve_centre_manifold(build_field(2, 1, 1), 10);
        auto q = qssa_expand(2, 1, 10);
        auto report = compare_expansions(cm, q);
        CHECK(report.rows[5].equal);
        CHECK(report.rows[6].equal);
        CHECK(report.rows[7].equal);
        CHECK(report.leading_terms_agree);
        CHECK(report.first_divergence == 8);
    }
    SUBCASE("an expansion never diverges from itself") {
        auto q = qssa_expand(3, rat(2, 3), 12);
        DivergenceReport report;
        CentreManifoldExpansion fake;
        fake.i = 3;
        fake.alpha = rat(2, 3);
        fake.beta = 1;
        fake.order = 12;
        fake.reduced = q.reduced;
        report = compare_expansions(fake, q);
        CHECK(report.first_divergence == -1);
        for (const auto& row : report.rows) CHECK(row.equal);
    }
    SUBCASE("first divergence is at power 2i+4 for i = 2..6 and three alphas") {
        for (int i = 2; i <= 6; ++i) {
            for (const Rational& alpha : {rat(1), rat(1, 2), rat(3)}) {
                const int n = 2 * i + 6;
                auto cm = solve_centre_manifold(build_field(i, alpha, 1), n);
                auto q = qssa_expand(i, alpha, n);
                auto report = compare_expansions(cm, q);
                CAPTURE(i);
                CAPTURE(to_string(alpha));
                CHECK(report.leading_terms_agree);
                CHECK(report.first_divergence == 2 * i + 4);
            }
        }
    }
    SUBCASE("parameter mismatch is rejected") {
        auto cm = solve_centre_manifold(build_field(3, 1, 1), 10);
        auto q = qssa_expand(3, 2, 10);
        CHECK_THROWS(compare_expansions(cm, q));
        auto cm_unscaled = solve_centre_manifold(build_field(3, 1, 2), 10);
        auto q1 = qssa_expand(3, 1, 10);
        CHECK_THROWS(compare_expansions(cm_unscaled, q1));
    }
}
