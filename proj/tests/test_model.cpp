#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "island/model.hpp"

using namespace island;

namespace {

Rational random_rational(std::mt19937& rng, int max_num = 20, int max_den = 7) {
    std::uniform_int_distribution<int> num(0, max_num), den(1, max_den);
    return rat(num(rng), den(rng));
}

// Truncated right-hand side over exact rationals, plus overflow rates.
struct ExactRhs {
    std::vector<Rational> dc;
    Rational d_count = 0, d_mass = 0;
};

ExactRhs exact_rhs(const ModelParams& p, const std::vector<Rational>& c) {
    ExactRhs out;
    out.dc.assign(c.size(), Rational(0));
    rhs_truncated<Rational>(p, c, out.dc, out.d_count, out.d_mass);
    return out;
}

}  // namespace

TEST_CASE("build_params computes the scaled deposition rate exactly") {
    auto p = build_params(5, rat(2), rat(3));
    CHECK(p.alpha == rat(2, 9));
    CHECK(p.n == 6);

    auto q = build_params(3, rat(1), rat(1));
    CHECK(q.alpha == rat(1));

    CHECK_THROWS_WITH(build_params(1, rat(1), rat(1)), "i must be >= 2");
    CHECK_THROWS(build_params(3, rat(0), rat(1)));
    CHECK_THROWS(build_params(3, rat(1), rat(-2)));
}

TEST_CASE("truncated right-hand side at frozen states") {
    SUBCASE("empty substrate: deposition only") {
        auto p = build_params(2, rat(1), rat(1));
        std::vector<Rational> c(6, Rational(0));
        auto r = exact_rhs(p, c);
        CHECK(r.dc[0] == rat(1));
        for (std::size_t j = 1; j < c.size(); ++j) CHECK(r.dc[j] == 0);
        CHECK(r.d_count == 0);
        CHECK(r.d_mass == 0);
    }
    SUBCASE("i=2 at (1,1,1,0,..)") {
        auto p = build_params(2, rat(1), rat(1));
        std::vector<Rational> c{1, 1, 1, 0, 0, 0};
        auto r = exact_rhs(p, c);
        CHECK(r.dc[0] == rat(-1));
        CHECK(r.dc[1] == rat(-1));
        CHECK(r.dc[2] == rat(0));
        CHECK(r.dc[3] == rat(1));  // c1*c3
        CHECK(r.dc[4] == 0);
    }
    SUBCASE("i=3 at (1,1,1,1,0,..)") {
        auto p = build_params(3, rat(1), rat(1));
        std::vector<Rational> c{1, 1, 1, 1, 0, 0};
        auto r = exact_rhs(p, c);
        CHECK(r.dc[0] == rat(-1));
    }
    SUBCASE("dimension guard") {
        auto p = build_params(3, rat(1), rat(1));
        std::vector<Rational> c{1, 1, 1};  // needs at least i+2 = 5
        std::vector<Rational> d(3);
        Rational a, b;
        CHECK_THROWS(rhs_truncated<Rational>(p, c, d, a, b));
    }
}

TEST_CASE("reduced right-hand side at frozen states") {
    auto p2 = build_params(2, rat(1), rat(1));
    SUBCASE("monomer-only production at empty state") {
        std::vector<Rational> s{0, 0, 5}, d(3);
        rhs_reduced<Rational>(p2, s, d);
        CHECK(d[0] == rat(1));
        CHECK(d[1] == 0);
        CHECK(d[2] == 0);
    }
    SUBCASE("i=2 at (1,1,0)") {
        std::vector<Rational> s{1, 1, 0}, d(3);
        rhs_reduced<Rational>(p2, s, d);
        CHECK(d[0] == 0);
        CHECK(d[1] == rat(-1));  // c1^2 - c1 c2 - c2
        CHECK(d[2] == rat(1));   // y' = c1 c_i
    }
    SUBCASE("i=3 at the power point (2,4,8,0)") {
        auto p3 = build_params(3, rat(16), rat(1));
        std::vector<Rational> s{2, 4, 8, 0}, d(4);
        rhs_reduced<Rational>(p3, s, d);
        CHECK(d[0] == 0);
        CHECK(d[1] == 0);
        CHECK(d[2] == rat(-16));  // escape to immobile sizes: -c1*c3
        CHECK(d[3] == rat(16));
    }
}

TEST_CASE("observables at frozen states") {
    auto p = build_params(2, rat(1), rat(1));
    SUBCASE("i=2, c=(1,1,0..)") {
        TruncatedState s;
        s.c = {1, 1, 0, 0, 0, 0};
        auto obs = observables(p, s);
        CHECK(obs.tail_number == doctest::Approx(1.0));
        CHECK(obs.v == doctest::Approx(0.0));
        CHECK(obs.w == doctest::Approx(2.0));
        CHECK(obs.mass == doctest::Approx(3.0));
        CHECK(obs.number == doctest::Approx(2.0));
        CHECK(obs.tail_rate == doctest::Approx(0.0));
    }
    SUBCASE("empty system") {
        TruncatedState s;
        s.c.assign(6, 0.0);
        auto obs = observables(p, s);
        CHECK(obs.v == doctest::Approx(1.0));
        CHECK(obs.w == doctest::Approx(1.0));
        CHECK(obs.mass == doctest::Approx(0.0));
    }
    SUBCASE("monomers only") {
        auto p3 = build_params(3, rat(1), rat(1));
        TruncatedState s;
        s.c = {1, 0, 0, 0, 0, 0};
        auto obs = observables(p3, s);
        CHECK(obs.tail_number == doctest::Approx(0.0));
        CHECK(obs.v == doctest::Approx(1.0));
        CHECK(obs.w == doctest::Approx(1.0));
    }
    SUBCASE("overflow is included in mass, number and tail") {
        TruncatedState s;
        s.c = {1, 0, 0, 0, 0, 0};
        s.overflow_count = 2.0;
        s.overflow_mass = 14.0;
        auto obs = observables(p, s);
        CHECK(obs.mass == doctest::Approx(15.0));
        CHECK(obs.number == doctest::Approx(3.0));
        CHECK(obs.tail_number == doctest::Approx(2.0));
    }
}

TEST_CASE("unit scaling round trips") {
    auto p = build_params(2, rat(8), rat(2));
    SUBCASE("frozen map") {
        TruncatedState phys;
        phys.c = {1, 1, 1, 1};
        phys.time = 2.0;
        auto scaled = scale_state(p, phys);
        CHECK(scaled.c[0] == doctest::Approx(0.5));
        CHECK(scaled.time == doctest::Approx(4.0));
        auto back = unscale_state(p, scaled);
        CHECK(back.c[0] == doctest::Approx(1.0));
        CHECK(back.time == doctest::Approx(2.0));
    }
    SUBCASE("identity at beta = 1") {
        auto q = build_params(3, rat(1), rat(1));
        TruncatedState s;
        s.c = {0.25, 0.5, 0.125, 0.0, 0.0};
        s.time = 7.0;
        auto scaled = scale_state(q, s);
        CHECK(scaled.c == s.c);
        CHECK(scaled.time == s.time);
    }
    SUBCASE("random round trips") {
        std::mt19937 rng(7);
        std::uniform_real_distribution<double> u(0.0, 3.0);
        for (int trial = 0; trial < 20; ++trial) {
            TruncatedState s;
            for (int k = 0; k < 5; ++k) s.c.push_back(u(rng));
            s.overflow_count = u(rng);
            s.overflow_mass = u(rng);
            s.time = u(rng);
            auto back = unscale_state(p, scale_state(p, s));
            for (int k = 0; k < 5; ++k) CHECK(back.c[k] == doctest::Approx(s.c[k]).epsilon(1e-14));
            CHECK(back.time == doctest::Approx(s.time).epsilon(1e-14));
        }
    }
}

TEST_CASE("mass balance holds exactly at random rational states") {
    std::mt19937 rng(11);
    for (int i = 2; i <= 5; ++i) {
        auto p = build_params(i, rat(3, 2), rat(1));
        const int n_max = i + 4;
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<Rational> c;
            for (int k = 0; k < n_max; ++k) c.push_back(random_rational(rng));
            auto r = exact_rhs(p, c);
            Rational mass_rate = r.d_mass;
            for (int j = 1; j <= n_max; ++j) mass_rate += j * r.dc[j - 1];
            CHECK(mass_rate == p.alpha);
        }
    }
}

TEST_CASE("number balance matches the closed-form rate") {
    std::mt19937 rng(13);
    for (int i = 2; i <= 5; ++i) {
        auto p = build_params(i, rat(2, 3), rat(1));
        const int n_max = i + 5;
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<Rational> c;
            for (int k = 0; k < n_max; ++k) c.push_back(random_rational(rng));
            auto r = exact_rhs(p, c);
            Rational number_rate = r.d_count;
            for (const auto& d : r.dc) number_rate += d;

            Rational z = 0, subcritical = 0;
            for (int k = 2; k <= n_max; ++k) z += c[k - 1];
            for (int k = 3; k <= i; ++k) subcritical += c[k - 1];
            const Rational expected = p.alpha - c[0] * c[0] - c[0] * z + c[1] + subcritical;
            CHECK(number_rate == expected);
        }
    }
}

TEST_CASE("tail count changes at rate c1^2 - c2 exactly") {
    std::mt19937 rng(17);
    auto p = build_params(3, rat(5, 4), rat(1));
    const int n_max = 9;
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Rational> c;
        for (int k = 0; k < n_max; ++k) c.push_back(random_rational(rng));
        auto r = exact_rhs(p, c);
        Rational tail_rate = r.d_count;
        for (int k = 2; k <= n_max; ++k) tail_rate += r.dc[k - 1];
        CHECK(tail_rate == c[0] * c[0] - c[1]);
    }
}

TEST_CASE("reduced system agrees with the truncated one when y matches the tail") {
    std::mt19937 rng(19);
    for (int i = 2; i <= 4; ++i) {
        auto p = build_params(i, rat(7, 5), rat(1));
        const int n_max = i + 6;
        for (int trial = 0; trial < 25; ++trial) {
            std::vector<Rational> c;
            for (int k = 0; k < n_max; ++k) c.push_back(random_rational(rng));
            Rational tail = 0;
            for (int k = i + 1; k <= n_max; ++k) tail += c[k - 1];

            std::vector<Rational> reduced(c.begin(), c.begin() + i);
            reduced.push_back(tail);
            std::vector<Rational> d_reduced(i + 1);
            rhs_reduced<Rational>(p, reduced, d_reduced);

            auto r = exact_rhs(p, c);
            for (int j = 0; j < i; ++j) CHECK(d_reduced[j] == r.dc[j]);
        }
    }
}

TEST_CASE("quasi-positivity at axis states") {
    for (int i = 2; i <= 4; ++i) {
        auto p = build_params(i, rat(1, 2), rat(1));
        const int n_max = i + 4;
        for (int m = 1; m <= n_max; ++m) {
            std::vector<Rational> c(n_max, Rational(0));
            c[m - 1] = rat(3, 7);
            auto r = exact_rhs(p, c);
            for (int j = 1; j <= n_max; ++j) {
                if (j == m) continue;
                CHECK(sgn(r.dc[j - 1]) >= 0);
            }
            CHECK(sgn(r.d_count) >= 0);
            CHECK(sgn(r.d_mass) >= 0);
        }
    }
}
