#include <doctest.h>

#include "limbs/simulating.hpp"

using namespace limbs;

namespace {

std::vector<Angle> angles80(std::initializer_list<long> nums) {
    std::vector<Angle> v;
    for (long n : nums) v.push_back(Angle(n, 80));
    return v;
}

} // namespace

TEST_CASE("ordered realizations") {
    auto r = realizations_ordered(CyclicPerm::parse("(12)"));
    REQUIRE(r.size() == 3);
    CHECK(r[0].angles == std::vector<Angle>{Angle(5, 8), Angle(7, 8)});
    CHECK(r[1].angles == std::vector<Angle>{Angle(2, 8), Angle(6, 8)});
    CHECK(r[2].angles == std::vector<Angle>{Angle(1, 8), Angle(3, 8)});

    auto r4 = realizations_ordered(CyclicPerm::parse("(1243)"));
    REQUIRE(r4.size() == 5);
    CHECK(r4[0].angles == angles80({44, 52, 68, 76}));
    CHECK(r4[1].angles == angles80({17, 51, 59, 73}));
    CHECK(r4[2].angles == angles80({8, 24, 56, 72}));
    CHECK(r4[3].angles == angles80({7, 21, 29, 63}));
    CHECK(r4[4].angles == angles80({4, 12, 28, 36}));

    auto r1 = realizations_ordered(CyclicPerm{{1}});
    REQUIRE(r1.size() == 2);
    CHECK(r1[0].angles == std::vector<Angle>{Angle(1, 2)});
    CHECK(r1[1].angles == std::vector<Angle>{Angle(0, 1)});

    CHECK_THROWS_AS(realizations_ordered(CyclicPerm::parse("(1324)")), NotM2Combinatorics);
}

TEST_CASE("simulating pair marked angles") {
    SimulatingPair sp = simulating_pair(Angle(1, 3));
    CHECK(sp.k == 1);
    CHECK(sp.x_k == Angle(2, 8));
    CHECK(sp.y_k == Angle(5, 8));

    SimulatingPair sp2 = simulating_pair(Angle(2, 5));
    CHECK(sp2.k == 2);
    CHECK(sp2.x_k == Angle(24, 80));
    CHECK(sp2.y_k == Angle(51, 80));
    CHECK(sp2.xprime_k == Angle(24, 80) + Angle(1, 3));
    CHECK(sp2.yprime_k == Angle(51, 80) - Angle(1, 3));

    SimulatingPair sp0 = simulating_pair(Angle(0, 1));
    CHECK(sp0.x_k == Angle(0, 1));
    CHECK(sp0.y_k == Angle(1, 2));

    CHECK_THROWS_AS(simulating_pair(Angle(1, 6)), PreperiodicAngle);
}

TEST_CASE("marked angles of every t in the period-4 family") {
    // all four marked pairs of {1,2,3,4}/5 against the published picture
    long xs[4] = {17, 24, 29, 36};
    long ys[4] = {44, 51, 56, 63};
    for (long k = 1; k <= 4; ++k) {
        SimulatingPair sp = simulating_pair(Angle(k, 5));
        CHECK(sp.k == k);
        CHECK(sp.x_k == Angle(xs[k - 1], 80));
        CHECK(sp.y_k == Angle(ys[k - 1], 80));
    }
}

TEST_CASE("projection collapses marked intervals") {
    SimulatingPair sp = simulating_pair(Angle(2, 5));
    Projection proj(sp, 8);
    for (long i = 1; i <= 4; ++i) {
        ProjectionResult rx = proj.eval(sp.x(i));
        ProjectionResult ry = proj.eval(sp.y(i));
        REQUIRE(rx.plateau);
        REQUIRE(ry.plateau);
        CHECK(rx.value == sp.orbit_t[(std::size_t)i - 1]);
        CHECK(ry.value == sp.orbit_t[(std::size_t)i - 1]);
    }
}

TEST_CASE("projection fixes zero") {
    SimulatingPair sp = simulating_pair(Angle(2, 5));
    ProjectionResult r = project_angle(sp, Angle(0, 1), 8);
    REQUIRE_FALSE(r.plateau);
    // the bracket arc [lo, hi] must contain 0
    CHECK(arc_length(r.lo, Angle(0, 1)) <= arc_length(r.lo, r.hi));
}

TEST_CASE("projection brackets the third-cycle angle") {
    SimulatingPair sp = simulating_pair(Angle(2, 5));
    Projection proj(sp, 8);
    ProjectionResult r = proj.eval(Angle(2, 80));
    REQUIRE_FALSE(r.plateau);
    Angle target(1, 15);
    Angle w = arc_length(r.lo, r.hi);
    CHECK(arc_length(r.lo, target) <= w);
    // width <= 2^-depth
    CHECK(w <= Angle(1, 256));
}

TEST_CASE("projection monotone and equivariant on a sample") {
    SimulatingPair sp = simulating_pair(Angle(1, 3));
    const int depth = 8;
    Projection proj(sp, depth);
    // monotone: brackets of increasing angles are weakly ordered
    Angle prev_lo(0, 1);
    for (long p = 0; p < 64; ++p) {
        ProjectionResult r = proj.eval(Angle(p, 64));
        Angle lo = r.plateau ? r.value : r.lo;
        if (p > 0) CHECK(arc_length(prev_lo, lo) < Angle(63, 64));
        prev_lo = lo;
    }
    // equivariance: the bracket of 3*theta contains the doubled bracket value
    for (long p : {1L, 5L, 11L, 23L, 40L, 55L}) {
        Angle th(p, 64);
        ProjectionResult r = proj.eval(th);
        ProjectionResult r3 = proj.eval(mul_map(3, th));
        if (!r.plateau && !r3.plateau) {
            // m_2 of the bracket of theta must meet the bracket of 3 theta
            Angle lo2 = mul_map(2, r.lo), hi2 = mul_map(2, r.hi);
            Angle w3 = arc_length(r3.lo, r3.hi);
            bool overlap = arc_length(r3.lo, lo2) <= w3 || arc_length(r3.lo, hi2) <= w3 ||
                           arc_length(lo2, r3.lo) <= arc_length(lo2, hi2);
            CHECK(overlap);
        }
    }
}

TEST_CASE("rotated orbits and the involution") {
    // degree-1 combinatorics: O*_k = O_{q-k} for all k
    for (Angle t : {Angle(1, 3), Angle(1, 7), Angle(3, 7), Angle(1, 15)}) {
        SimulatingPair sp = simulating_pair(t);
        if (degree(sp.sigma) != 1) continue;
        long q = sp.q();
        for (long k = 0; k <= q; ++k)
            CHECK(rotated_orbit(sp.realizations[(std::size_t)k]) ==
                  sp.realizations[(std::size_t)(q - k)]);
    }
    // degree-2: fails for all 0 < k < q
    SimulatingPair sp = simulating_pair(Angle(1, 5));
    long q = sp.q();
    CHECK(rotated_orbit(sp.realizations[0]) == sp.realizations[(std::size_t)q]);
    for (long k = 1; k < q; ++k) {
        Orbit r = rotated_orbit(sp.realizations[(std::size_t)k]);
        CHECK_FALSE(r == sp.realizations[(std::size_t)(q - k)]);
        // the rotated orbit has conjugated combinatorics, distinct from sigma
        CHECK_FALSE(combinatorics(r) == sp.sigma);
    }
}

TEST_CASE("complementary angles") {
    auto c = complementary_angle(Angle(1, 7));
    REQUIRE(c.has_value());
    CHECK(*c == Angle(4, 7));
    auto c2 = complementary_angle(Angle(2, 7));
    REQUIRE(c2.has_value());
    CHECK(*c2 == Angle(2, 7));
    CHECK_FALSE(complementary_angle(Angle(1, 5)).has_value());
}

TEST_CASE("marked interval meets all other realizations") {
    CHECK(verify_nothird(CyclicPerm::parse("(12)"), 1));
    CHECK(verify_nothird(CyclicPerm::parse("(1243)"), 2));
    CHECK(verify_nothird(CyclicPerm{{1}}, 1));
    // the explicit instance: O_2 = {1,3}/8 meets ]2/8, 5/8[ at 3/8
    SimulatingPair sp = simulating_pair(Angle(1, 3));
    CHECK(in_open_arc(Angle(3, 8), sp.x_k, sp.y_k));
}

TEST_CASE("marked interval length window") {
    // |I_k| = 3^{q-1}/(3^q-1) lies in ]1/3, 3/8] for q >= 2
    for (Angle t : {Angle(1, 3), Angle(1, 7), Angle(1, 5), Angle(1, 15)}) {
        SimulatingPair sp = simulating_pair(t);
        Angle len = arc_length(sp.x_k, sp.y_k);
        CHECK(Angle(1, 3) < len);
        CHECK(len <= Angle(3, 8));
    }
}
