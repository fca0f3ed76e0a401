#include <doctest.h>

#include "limbs/angle.hpp"

using namespace limbs;

TEST_CASE("angle reduction and wraparound") {
    CHECK(Angle(5, 10) == Angle(1, 2));
    CHECK(Angle(-1, 3) == Angle(2, 3));
    CHECK(Angle(17, 80).str() == "17/80");
    CHECK(Angle(0, 7).str() == "0");
    CHECK(Angle(7, 7) == Angle(0, 1));
    CHECK_THROWS_AS(Angle(1, 0), ZeroDenominator);
}

TEST_CASE("angle parse round trip") {
    for (const char* s : {"0", "1/2", "17/80", "44/80", "123456789123456789/123456789123456790"}) {
        Angle a = Angle::parse(s);
        CHECK(Angle::parse(a.str()) == a);
    }
    CHECK(Angle::parse("44/80") == Angle(11, 20));
    CHECK_THROWS_AS(Angle::parse("x/y"), ParseError);
}

TEST_CASE("mul_map") {
    CHECK(mul_map(2, Angle(1, 3)) == Angle(2, 3));
    CHECK(mul_map(3, Angle(17, 80)) == Angle(51, 80));
    CHECK(mul_map(3, Angle(1, 2)) == Angle(1, 2));
}

TEST_CASE("forward_orbit") {
    Orbit o = forward_orbit(2, Angle(1, 5));
    REQUIRE(o.size() == 4);
    CHECK(o[0] == Angle(1, 5));
    CHECK(o[3] == Angle(4, 5));

    Orbit fix = forward_orbit(2, Angle(0, 1));
    CHECK(fix.size() == 1);

    Orbit o3 = forward_orbit(3, Angle(2, 8));
    CHECK(o3.str() == "{1,3}/4");  // {2,6}/8 reduced
    CHECK(o3.contains(Angle(6, 8)));

    CHECK_THROWS_AS(forward_orbit(2, Angle(1, 6)), PreperiodicAngle);
}

TEST_CASE("period") {
    CHECK(period(2, Angle(1, 3)) == 2);
    CHECK(period(2, Angle(1, 5)) == 4);
    CHECK(period(3, Angle(0, 1)) == 1);
    CHECK_THROWS_AS(period(3, Angle(1, 6)), PreperiodicAngle);
}

TEST_CASE("orbit closes up after its period") {
    for (long k : {2L, 3L}) {
        for (long den : {3L, 5L, 7L, 11L, 13L, 255L}) {
            if (den % k == 0) continue;
            Angle t(1, den);
            long q = period(k, t);
            Angle x = t;
            for (long i = 0; i < q; ++i) x = mul_map(k, x);
            CHECK(x == t);
            Orbit o = forward_orbit(k, t);
            for (std::size_t i = 1; i < o.size(); ++i) CHECK(o[i - 1] < o[i]);
        }
    }
}

TEST_CASE("period-q points are the p/(k^q-1)") {
    // every angle p/(3^4-1) has period dividing 4; the exact-period-4 count
    // matches the divisor sieve
    long D = 80;
    int exact = 0;
    for (long p = 0; p < D; ++p) {
        Angle t(p, D);
        long q = period(3, t);
        CHECK(4 % q == 0);
        if (q == 4) ++exact;
    }
    CHECK(exact == 80 - 8);  // remove the period-1 and period-2 points
}

TEST_CASE("rotated orbit") {
    Orbit z = forward_orbit(3, Angle(0, 1));
    Orbit r = rotated_orbit(z);
    CHECK(r.size() == 1);
    CHECK(r[0] == Angle(1, 2));
}

TEST_CASE("big denominators stay exact") {
    // 3^41 - 1 overflows 64-bit; orbit arithmetic must not care
    BigInt D;
    mpz_ui_pow_ui(D.get_mpz_t(), 3, 41);
    D -= 1;
    Angle t(BigInt(1), D);
    CHECK(period(3, t) == 41);
}
