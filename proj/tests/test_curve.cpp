#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "pigou/curve.hpp"

using pigou::AffineCurve;
using pigou::intersect;
using pigou::Point;

TEST_CASE("symmetric lines cross at the midpoint") {
    const Point p = intersect(AffineCurve{1, 0}, AffineCurve{-1, 12});
    CHECK(p.x == Catch::Approx(6).epsilon(1e-12));
    CHECK(p.y == Catch::Approx(6).epsilon(1e-12));
}

TEST_CASE("asymmetric intersection satisfies both line equations") {
    const AffineCurve f{2, 0};
    const AffineCurve g{-1, 12};
    const Point p = intersect(f, g);
    CHECK(p.x == Catch::Approx(4).epsilon(1e-12));
    CHECK(p.y == Catch::Approx(8).epsilon(1e-12));
    // oracle: substitute x back into both lines
    CHECK(f.value(p.x) == Catch::Approx(p.y).epsilon(1e-12));
    CHECK(g.value(p.x) == Catch::Approx(p.y).epsilon(1e-12));
}

TEST_CASE("equal slopes are rejected") {
    CHECK_THROWS_AS(intersect(AffineCurve{2, 0}, AffineCurve{2, 5}),
                    pigou::ParallelCurves);
    // tolerance is absolute at 1e-12
    CHECK_THROWS_AS(intersect(AffineCurve{2, 0}, AffineCurve{2 + 5e-13, 5}),
                    pigou::ParallelCurves);
    CHECK_NOTHROW(intersect(AffineCurve{2, 0}, AffineCurve{2 + 1e-6, 5}));
}

TEST_CASE("intersection residual stays below 1e-9 relative on random lines") {
    std::mt19937_64 gen(991);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int i = 0; i < 2000; ++i) {
        const AffineCurve f{u(gen), u(gen)};
        const AffineCurve g{u(gen), u(gen)};
        if (std::abs(f.slope - g.slope) <= 1e-3) continue;
        const Point p = intersect(f, g);
        const double bound = 1e-9 * std::max(1.0, std::abs(p.y));
        REQUIRE(std::abs(p.y - f.value(p.x)) <= bound);
        REQUIRE(std::abs(p.y - g.value(p.x)) <= bound);
    }
}
