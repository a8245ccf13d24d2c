#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "island/io.hpp"

using namespace island;

TEST_CASE("doubles print as shortest round-trip decimals") {
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(1e-12) == "1e-12");
    const double v = 1.0 / 3.0;
    CHECK(std::stod(format_double(v)) == v);
}

TEST_CASE("parameter JSON carries the exact scaled rate") {
    auto p = build_params(5, rat(2), rat(3));
    auto j = params_to_json(p);
    CHECK(j["i"] == 5);
    CHECK(j["alpha_tilde"] == "2");
    CHECK(j["beta"] == "3");
    CHECK(j["alpha"] == "2/9");
}

TEST_CASE("rationals serialize in lowest terms") {
    CHECK(to_string(rat(272, 236196)) == "68/59049");
    CHECK(to_string(rat(-4, 2)) == "-2");
    CHECK(parse_rational("68/59049") == rat(272, 236196));
    CHECK_THROWS(parse_rational("nonsense"));
    CHECK_THROWS(parse_rational("1/0"));
}

TEST_CASE("identical inputs give byte-identical expansion JSON") {
    auto run = [] {
        auto e = solve_centre_manifold(build_field(3, rat(2, 3), 1), 10);
        return expansion_to_json(e).dump(2);
    };
    CHECK(run() == run());
}

TEST_CASE("series JSON lists coefficients from power zero") {
    auto e = solve_centre_manifold(build_field(2, 1, 1), 7);
    auto j = expansion_to_json(e);
    CHECK(j["series"]["g2"][0] == "0");
    CHECK(j["series"]["g2"][2] == "1");
    CHECK(j["reduced_ode"][5] == "-1");
    CHECK(j["params"]["order"] == 7);
}

TEST_CASE("trajectory CSV has the documented header") {
    TruncatedTrajectory traj;
    traj.params = build_params(2, 1, 1);
    TruncatedPoint pt;
    pt.state.c = {0.5, 0.25};
    pt.state.time = 1.0;
    pt.rho = 0.1;
    pt.tau = 2.0;
    traj.points.push_back(pt);
    auto csv = trajectory_csv(traj);
    CHECK(csv.rfind("T,rho,tau,c_1,c_2,overflow_count,overflow_mass\n", 0) == 0);
    CHECK(csv.find("1,0.1,2,0.5,0.25,0,0\n") != std::string::npos);
}

TEST_CASE("single states serialize as CSV rows and JSON objects") {
    TruncatedState s;
    s.c = {0.5, 0.25, 0.0};
    s.time = 3.0;
    s.overflow_count = 0.125;
    s.overflow_mass = 1.5;
    CHECK(state_csv_row(s) == "3,0.5,0.25,0,0.125,1.5");
    auto j = state_to_json(s);
    CHECK(j["T"] == "3");
    CHECK(j["c"][1] == "0.25");
    CHECK(j["overflow_mass"] == "1.5");
}

TEST_CASE("divergence report JSON is a power table") {
    auto cm = solve_centre_manifold(build_field(2, 1, 1), 8);
    auto q = qssa_expand(2, 1, 8);
    auto j = divergence_to_json(compare_expansions(cm, q));
    CHECK(j["first_divergence_power"] == 8);
    CHECK(j["table"][5]["cm_coeff"] == "-1");
    CHECK(j["table"][5]["qssa_coeff"] == "-1");
    CHECK(j["table"][5]["equal"] == true);
}

TEST_CASE("decomposition JSON lists flows with monomials and values") {
    std::vector<Rational> state{1, 1};
    auto j = decomposition_to_json(decompose(2, 1, state));
    bool found_growth = false;
    for (const auto& f : j["flows"]) {
        if (f["to"] == 2 && f["from"] == 1) {
            CHECK(f["monomial"] == "c1^2");
            CHECK(f["value"] == "1");
            found_growth = true;
        }
    }
    CHECK(found_growth);
    CHECK(j["outflows"][0]["monomial"] == "c1*c2");
    CHECK(j["reconstructed_derivatives"][0] == "0");
    CHECK(j["reconstructed_derivatives"][1] == "0");
}
