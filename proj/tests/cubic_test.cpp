#include <doctest.h>

#include <cmath>

#include "limbs/cubic.hpp"

using namespace limbs;
using doctest::Approx;

TEST_CASE("evaluation and the critical table") {
    CubicMap z3{{0, 0}, {0, 0}};
    CHECK(eval(z3, {2, 0}) == Complex{8, 0});

    CubicMap P{{0.3, -0.2}, {0, 0}};
    Complex w2 = P.omega2();
    CHECK(std::abs(eval(P, w2) - P.critical_value2()) < 1e-15);
    CHECK(std::abs(eval(P, P.cocritical2()) - P.critical_value2()) < 1e-14);
    CHECK(std::abs(eval(P, P.cocritical1()) - P.critical_value1()) < 1e-14);
    CHECK(eval_derivative(P, {0, 0}) == Complex{0, 0});
    CHECK(std::abs(eval_derivative(P, w2)) < 1e-15);
}

TEST_CASE("green basics") {
    CubicMap z3{{0, 0}, {0, 0}};
    CHECK(green(z3, {2, 0}) == Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(green(z3, {0.5, 0.3}) == 0.0);

    CubicMap P{{0.2, 0.1}, {-0.3, 0.4}};
    for (Complex z : {Complex{1.7, 0.4}, Complex{-2.0, 1.0}, Complex{3.0, -0.5}}) {
        double g = green(P, z);
        if (g <= 0) continue;
        double g2 = green(P, eval(P, z));
        CHECK(g2 == Approx(3.0 * g).epsilon(1e-10));
    }
}

TEST_CASE("periodic point refinement") {
    CubicMap z3{{0, 0}, {0, 0}};
    PeriodicPoint a = find_periodic(z3, 1, {0.1, 0.0});
    CHECK(std::abs(a.z) < 1e-12);
    CHECK(std::abs(a.multiplier) < 1e-10);

    PeriodicPoint b = find_periodic(z3, 1, {0.9, 0.0});
    CHECK(std::abs(b.z - 1.0) < 1e-12);
    CHECK(std::abs(b.multiplier - 3.0) < 1e-10);

    // reproducibility: re-seeding from the root converges immediately
    PeriodicPoint c = find_periodic(z3, 1, b.z);
    CHECK(c.newton_steps <= 2);
    CHECK(std::abs(c.z - b.z) < 1e-13);
}

TEST_CASE("normal form translation") {
    auto n0 = to_normal_form({0, 0}, {0, 0}, {0.5, 0.25});
    REQUIRE(n0.size() >= 1);
    CHECK(std::abs(n0[0].map.a) < 1e-14);
    CHECK(std::abs(n0[0].map.b - Complex{0.5, 0.25}) < 1e-14);

    Complex a{0.4, -0.7};
    auto n1 = to_normal_form(3.0 * a, {0, 0}, {0.25, 0});
    bool found = false;
    for (const auto& n : n1)
        if (std::abs(n.map.a - a) < 1e-12 && std::abs(n.map.b - Complex{0.25, 0}) < 1e-12)
            found = true;
    CHECK(found);
}

TEST_CASE("normal form preserves fixed point multipliers") {
    // z^3 - sqrt2 z^2 + (3/2) z has fixed points 0 and 1/sqrt2
    const double s2 = std::sqrt(2.0);
    Complex c2{-s2, 0}, c1{1.5, 0}, c0{0, 0};
    auto q = [&](Complex z) { return ((z + c2) * z + c1) * z + c0; };
    auto dq = [&](Complex z) { return (3.0 * z + 2.0 * c2) * z + c1; };
    CHECK(std::abs(q({0, 0})) < 1e-14);
    CHECK(std::abs(q({1 / s2, 0}) - Complex{1 / s2, 0}) < 1e-14);

    auto forms = to_normal_form(c2, c1, c0);
    REQUIRE_FALSE(forms.empty());
    for (const auto& n : forms) {
        // the fixed pair persists at shifted positions with equal multipliers
        for (Complex zfix : {Complex{0, 0}, Complex{1 / s2, 0}}) {
            Complex moved = zfix - n.shift;
            CHECK(std::abs(eval(n.map, moved) - moved) < 1e-12);
            CHECK(std::abs(eval_derivative(n.map, moved) - dq(zfix)) < 1e-10);
        }
    }
}
