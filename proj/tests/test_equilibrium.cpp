#include <catch2/catch_amalgamated.hpp>

#include "pigou/equilibrium.hpp"
#include "test_support.hpp"

using pigou::curves;
using pigou::equilibria;
using pigou::Regime;
using test_support::close_rel;

TEST_CASE("curve construction per regime") {
    const auto s = test_support::worked();

    const auto nc = curves(s, Regime::noncooperative);
    CHECK(nc.msb.slope == -1);
    CHECK(nc.msb.intercept == 12);

    const auto co = curves(s, Regime::cooperative);
    CHECK(co.msb.slope == -3);
    CHECK(co.msb.intercept == 12);

    // cost curves pass through the origin in both regimes
    for (const auto& cs : {nc, co}) {
        CHECK(cs.mpc.intercept == 0);
        CHECK(cs.msc.intercept == 0);
        CHECK(cs.mpc.slope == 1);
        CHECK(cs.msc.slope == 2);
    }
}

TEST_CASE("worked equilibria, both regimes") {
    const auto s = test_support::worked();

    const auto nc = equilibria(s, Regime::noncooperative);
    CHECK(close_rel(nc.x_private, 6, 1e-12));
    CHECK(close_rel(nc.x_social, 4, 1e-12));

    const auto co = equilibria(s, Regime::cooperative);
    CHECK(close_rel(co.x_private, 3, 1e-12));
    CHECK(close_rel(co.x_social, 2.4, 1e-12));
}

TEST_CASE("second parameter set, cooperative") {
    const auto eq = equilibria(test_support::second(), Regime::cooperative);
    CHECK(close_rel(eq.x_private, 4.0 / 3.0, 1e-12));
    CHECK(close_rel(eq.x_social, 1.0, 1e-12));
}

TEST_CASE("closed forms, ordering, and cooperative contraction hold on random scenarios") {
    for (const auto& s : test_support::random_scenarios(2000, 13)) {
        const auto nc = equilibria(s, Regime::noncooperative);
        const auto co = equilibria(s, Regime::cooperative);

        CHECK(close_rel(nc.x_private, s.y1() / (2 * s.a()), 1e-12));
        CHECK(close_rel(nc.x_social, s.y1() / (s.a() + s.b()), 1e-12));
        CHECK(close_rel(co.x_private, s.y1() / (s.a() + s.c()), 1e-12));
        CHECK(close_rel(co.x_social, s.y1() / (s.b() + s.c()), 1e-12));

        // 0 < x_social < x_private in each regime
        CHECK(nc.x_social > 0);
        CHECK(nc.x_social < nc.x_private);
        CHECK(co.x_social > 0);
        CHECK(co.x_social < co.x_private);

        // cooperation contracts both points
        CHECK(co.x_social < nc.x_social);
        CHECK(co.x_private < nc.x_private);
    }
}
