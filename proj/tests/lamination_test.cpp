#include <doctest.h>

#include "limbs/lamination.hpp"

using namespace limbs;

TEST_CASE("partners from the published tables") {
    CHECK(m_partner(Angle(1, 15)) == Angle(2, 15));
    CHECK(m_partner(Angle(6, 15)) == Angle(9, 15));
    CHECK(m_partner(Angle(13, 31)) == Angle(18, 31));
    CHECK_THROWS_AS(m_partner(Angle(0, 1)), ZeroAngle);
}

TEST_CASE("full period-4 and period-5 pair tables") {
    PartnerTable table;
    auto p4 = table.pairs_of_period(4);
    std::vector<std::pair<long, long>> want4{{1, 2}, {3, 4}, {6, 9}, {7, 8}, {11, 12}, {13, 14}};
    REQUIRE(p4.size() == want4.size());
    std::vector<std::pair<Angle, Angle>> got;
    for (const auto& pr : p4) got.emplace_back(pr.t, pr.t_hat);
    std::sort(got.begin(), got.end());
    std::sort(want4.begin(), want4.end());
    for (std::size_t i = 0; i < want4.size(); ++i) {
        CHECK(got[i].first == Angle(want4[i].first, 15));
        CHECK(got[i].second == Angle(want4[i].second, 15));
    }

    auto p5 = table.pairs_of_period(5);
    std::vector<std::pair<long, long>> want5{{1, 2},   {3, 4},   {5, 6},   {7, 8},   {9, 10},
                                             {11, 12}, {13, 18}, {14, 17}, {15, 16}, {19, 20},
                                             {21, 22}, {23, 24}, {25, 26}, {27, 28}, {29, 30}};
    REQUIRE(p5.size() == want5.size());
    got.clear();
    for (const auto& pr : p5) got.emplace_back(pr.t, pr.t_hat);
    std::sort(got.begin(), got.end());
    for (std::size_t i = 0; i < want5.size(); ++i) {
        CHECK(got[i].first == Angle(want5[i].first, 31));
        CHECK(got[i].second == Angle(want5[i].second, 31));
    }
}

TEST_CASE("partner involution and period preservation up to period 8") {
    PartnerTable table;
    for (int q = 2; q <= 8; ++q) {
        for (const auto& pr : table.pairs_of_period(q)) {
            CHECK(table.partner(pr.t) == pr.t_hat);
            CHECK(table.partner(pr.t_hat) == pr.t);
            CHECK(period(2, pr.t) == q);
            CHECK(period(2, pr.t_hat) == q);
        }
    }
}

TEST_CASE("partner chords never cross") {
    PartnerTable table;
    std::vector<PartnerPair> all;
    for (int q = 2; q <= 8; ++q)
        for (const auto& pr : table.pairs_of_period(q)) all.push_back(pr);
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            bool a_in = in_open_arc(all[j].t, all[i].t, all[i].t_hat);
            bool b_in = in_open_arc(all[j].t_hat, all[i].t, all[i].t_hat);
            CHECK(a_in == b_in);
        }
}

TEST_CASE("partner pair inside an orbit") {
    auto p = partner_pair_in_orbit(forward_orbit(2, Angle(1, 5)));
    REQUIRE(p.has_value());
    CHECK(p->first == 2);
    CHECK(p->second == 3);  // angles 6/15, 9/15

    CHECK_FALSE(partner_pair_in_orbit(forward_orbit(2, Angle(3, 31))).has_value());

    auto p3 = partner_pair_in_orbit(forward_orbit(2, Angle(1, 3)));
    REQUIRE(p3.has_value());
    CHECK(p3->first == 1);
    CHECK(p3->second == 2);
}

TEST_CASE("merging predictions") {
    auto mp = predict_merging(CyclicPerm::parse("(1243)"));
    REQUIRE(mp.has_value());
    CHECK(mp->p == 2);
    CHECK(mp->r == 2);
    CHECK(mp->portrait.type == PortraitType::Satellite);
    REQUIRE(mp->portrait.classes.size() == 2);
    CHECK(mp->portrait.classes[0] == std::vector<Angle>{Angle(1, 5), Angle(4, 5)});
    CHECK(mp->portrait.classes[1] == std::vector<Angle>{Angle(2, 5), Angle(3, 5)});
    REQUIRE(mp->portrait.characteristic_arc.has_value());
    CHECK(mp->portrait.characteristic_arc->first == Angle(2, 5));
    CHECK(mp->portrait.characteristic_arc->second == Angle(3, 5));

    auto rot = predict_merging(CyclicPerm::parse("(123)"));
    REQUIRE(rot.has_value());
    CHECK(rot->p == 1);

    CHECK_FALSE(predict_merging(CyclicPerm::parse("(12354)")).has_value());
    CHECK_FALSE(predict_merging(CyclicPerm::parse("(123465)")).has_value());
}

TEST_CASE("prediction agrees with reducibility everywhere") {
    for (int q = 2; q <= 8; ++q) {
        BigInt D;
        mpz_ui_pow_ui(D.get_mpz_t(), 2, (unsigned long)q);
        D -= 1;
        for (BigInt p(0); p < D; ++p) {
            Angle t(p, D);
            Orbit o = forward_orbit(2, t);
            if ((long)o.size() != q || !(o[0] == t)) continue;
            CyclicPerm sigma = combinatorics(o);
            auto red = dynamically_reducible(sigma);
            auto mp = predict_merging(sigma);
            CHECK(red.has_value() == mp.has_value());
            if (red) {
                CHECK(red->p == mp->p);
                CHECK(red->r == mp->r);
            }
        }
    }
}

TEST_CASE("portrait classification for limbs") {
    Orbit orbit = forward_orbit(2, Angle(1, 5));
    Portrait prim = portrait_for_limb(orbit, {Angle(3, 15), Angle(4, 15)});
    CHECK(prim.type == PortraitType::Primitive);
    CHECK(prim.orbit_period == 4);

    Portrait sat = portrait_for_limb(orbit, {Angle(6, 15), Angle(9, 15)});
    CHECK(sat.type == PortraitType::Satellite);
    CHECK(sat.orbit_period == 2);

    Portrait triv = portrait_for_limb(orbit, {Angle(1, 15), Angle(2, 15)});
    CHECK(triv.type == PortraitType::Trivial);
    CHECK_FALSE(triv.characteristic_arc.has_value());
}

TEST_CASE("third cycle of the period-4 example") {
    auto orb = third_cycle(Angle(2, 5), {Angle(3, 15), Angle(4, 15)});
    REQUIRE(orb.has_value());
    CHECK(orb->angles == std::vector<Angle>{Angle(2, 80), Angle(6, 80), Angle(18, 80), Angle(54, 80)});
    CHECK(combinatorics(*orb).images == std::vector<int>{2, 3, 4, 1});
    // as an m_3 cycle the third cycle is of low degree
    int d = degree(combinatorics(*orb));
    CHECK((d == 1 || d == 2));

    CHECK_THROWS_AS(third_cycle(Angle(2, 5), PartnerPair{Angle(6, 15), Angle(9, 15)}),
                    NotPrimitive);
    CHECK_THROWS_AS(third_cycle(Angle(1, 3), PartnerPair{Angle(1, 3), Angle(2, 3)}), NotPrimitive);
}
