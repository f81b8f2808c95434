#include <doctest.h>

#include <set>

#include "trapcong/kcong.hpp"

using namespace trapcong;

namespace {
Rat rq(const char* s) { return Rat::parse(s).value(); }
}  // namespace

TEST_SUITE_BEGIN("kcong");

TEST_CASE("ratio curve") {
    CHECK(curve_k(2, 2) == CurveQ{Rat(-36), Rat(0)});
    CHECK(curve_k(2, 11) == CurveQ{Rat(-57600), Rat(0)});
    CHECK(curve_k(1, 3) == CurveQ{Rat(-64), Rat(0)});
    CHECK_THROWS_AS(curve_k(2, 1), std::invalid_argument);
    for (long n = 1; n <= 10; ++n)
        for (long k = 2; k <= 10; ++k) CHECK(j_invariant(curve_k(n, k)) == Rat(1728));
}

TEST_CASE("point to trapezoid") {
    TrapezoidK t = point_to_trapezoid_k(2, 2, PointQ(Rat(12), Rat(36)));
    CHECK(t == TrapezoidK{rq("8/3"), rq("1"), rq("5/3"), rq("4/3"), 2});
    CHECK(area(t) == Rat(2));

    TrapezoidK t11 = point_to_trapezoid_k(2, 11, PointQ(Rat(400), Rat(6400)));
    CHECK(t11 == TrapezoidK{rq("11/4"), rq("4/3"), rq("17/6"), rq("1/4"), 11});
    CHECK(area(t11) == Rat(2));

    // 2-torsion and axis points are rejected
    CHECK_THROWS_AS(point_to_trapezoid_k(2, 2, PointQ(Rat(6), Rat(0))), std::invalid_argument);
    CHECK_THROWS_AS(point_to_trapezoid_k(2, 2, PointQ(Rat(0), Rat(0))), std::invalid_argument);
    CHECK_THROWS_AS(point_to_trapezoid_k(2, 2, PointQ(Rat(1), Rat(1))), std::invalid_argument);
}

TEST_CASE("cubic identity solutions") {
    auto s2 = cubic_identity_solutions(2);
    CHECK(s2[0] == std::pair<Int, Int>{2, 2});
    CHECK(s2[1] == std::pair<Int, Int>{13, 7});
    CHECK(s2[2] == std::pair<Int, Int>{19, 9});
    CHECK(Int(2) * (Int(13) * 13 - 1) == Int(343 - 7));

    auto s5 = cubic_identity_solutions(5);
    CHECK(s5[1] == std::pair<Int, Int>{37, 19});
    CHECK(s5[2] == std::pair<Int, Int>{43, 21});

    for (long n = 1; n <= 1000; ++n) cubic_identity_solutions(n);  // throws on failure
}

TEST_CASE("ratio-n witness") {
    TrapezoidK t2 = nnn_witness(2);
    CHECK(t2 == TrapezoidK{rq("8/3"), rq("1"), rq("5/3"), rq("4/3"), 2});

    TrapezoidK t3 = nnn_witness(3);
    CHECK(t3.k == 3);
    CHECK(area(t3) == Rat(3));

    TrapezoidK t10 = nnn_witness(10);
    CHECK(t10.k == 10);
    CHECK(area(t10) == Rat(10));
}

TEST_CASE("pell reduction") {
    auto p12 = pell_reduce(2, 1);
    CHECK(p12.D == 3);
    CHECK(p12.N == 4);
    CHECK(p12.scale == 1);

    auto p15 = pell_reduce(5, 1);
    CHECK(p15.D == 24);
    CHECK(p15.N == 40);
    CHECK(p15.scale == 4);

    auto p210 = pell_reduce(10, 2);
    CHECK(p210.D == 84);
    CHECK(p210.scale == 6);

    CHECK_THROWS_AS(pell_reduce(4, 2), std::invalid_argument);  // lambda^2 = n
}

TEST_CASE("pell solutions") {
    auto s = pell_solve(pell_reduce(2, 1), 4);
    REQUIRE(s.pairs.size() == 4);
    CHECK(s.pairs[0] == std::pair<Int, Int>{2, 0});
    CHECK(s.pairs[1] == std::pair<Int, Int>{4, 2});
    CHECK(s.pairs[2] == std::pair<Int, Int>{14, 8});
    CHECK(s.pairs[3] == std::pair<Int, Int>{52, 30});
    CHECK_FALSE(s.finite_only);

    auto s5 = pell_solve(pell_reduce(5, 1), 3);
    REQUIRE(s5.pairs.size() >= 2);
    CHECK(s5.pairs[0] == std::pair<Int, Int>{2, 1});
    CHECK(s5.pairs[1] == std::pair<Int, Int>{4, 3});

    // every returned pair satisfies the original equation
    for (auto [lam, n] : std::vector<std::pair<long, long>>{{1, 2}, {1, 5}, {2, 10}, {2, 13}, {3, 13}}) {
        auto prob = pell_reduce(n, lam);
        for (const auto& [alpha, beta] : pell_solve(prob, 4).pairs)
            CHECK((Int(n) - lam * lam) * alpha * alpha - (Int(n) + lam * lam) * beta * beta ==
                  2 * Int(n) * lam);
    }

    // square discriminant: (lambda, n) = (2, 5) gives D = 9; the finite
    // search is flagged and returns nothing (3 divides no solution)
    auto sq = pell_solve(pell_reduce(5, 2), 4);
    CHECK(sq.finite_only);
    CHECK(sq.pairs.empty());

    CHECK_THROWS_AS(pell_solve(pell_reduce(1, 2), 3), std::domain_error);  // D < 0
}

TEST_CASE("pell solution to ratio") {
    CHECK(pell_to_k(2, 1, 4, 2).value() == 11);
    CHECK(pell_to_k(2, 1, 14, 8).value() == 131);
    CHECK(pell_to_k(2, 1, 2, 0).value() == 3);
    CHECK(pell_to_k(5, 1, 2, 1).value() == 2);
    // mapping fails when lambda does not divide alpha^2 - beta^2
    CHECK_FALSE(pell_to_k(52, 2, 3, 2).has_value());
}

TEST_CASE("quartic search reproduces the printed rows") {
    auto rows2 = quartic_search(2, 1000);
    std::set<std::array<long, 3>> got;
    for (const auto& r : rows2)
        got.insert({static_cast<long>(r.k.get_si()), static_cast<long>(r.alpha.get_si()),
                    static_cast<long>(r.beta.get_si())});
    CHECK(got == std::set<std::array<long, 3>>{
                     {11, 4, 2}, {131, 14, 8}, {181, 16, 2}, {513, 34, 30}, {573, 29, 15}});

    auto rows9 = quartic_search(9, 1000);
    REQUIRE(rows9.size() == 1);
    CHECK(rows9[0] == QuarticRow{9, 649, 57, 51});

    auto rows5 = quartic_search(5, 10);
    REQUIRE(rows5.size() == 3);
    CHECK(rows5[0] == QuarticRow{5, 2, 2, 1});
    CHECK(rows5[1] == QuarticRow{5, 6, 4, 3});
    CHECK(rows5[2] == QuarticRow{5, 7, 4, 2});
}

TEST_CASE("quartic row to trapezoid") {
    TrapezoidK t = quartic_to_trapezoid(QuarticRow{2, 11, 4, 2});
    CHECK(t == TrapezoidK{rq("11/4"), rq("4/3"), rq("17/6"), rq("1/4"), 11});

    TrapezoidK t5 = quartic_to_trapezoid(QuarticRow{5, 2, 2, 1});
    CHECK(t5.k == 2);
    CHECK(area(t5) == Rat(5));

    TrapezoidK t9 = quartic_to_trapezoid(QuarticRow{9, 649, 57, 51});
    CHECK(t9.k == 649);
    CHECK(area(t9) == Rat(9));

    CHECK_THROWS_AS(quartic_to_trapezoid(QuarticRow{2, 3, 2, 0}), std::invalid_argument);
}

TEST_CASE("fixed-ratio family witnesses") {
    auto [n2, t2] = prop31_witness(2);
    CHECK(n2 == 5);
    CHECK(area(t2) == Rat(5));
    CHECK(t2.k == 2);

    auto [n3, t3] = prop31_witness(3);
    CHECK(n3 == 10);
    CHECK(area(t3) == Rat(10));

    auto [n4, t4] = prop31_witness(4);
    CHECK(n4 == 17);
    CHECK(area(t4) == Rat(17));

    for (long k = 2; k <= 10; ++k) {
        auto [n, t] = prop31_witness(k);
        CHECK(n == k * k + 1);
        CHECK(area(t) == Rat(n));
        CHECK(t.a == Rat(t.k) * t.d);
    }
}

TEST_CASE("pipeline outputs always validate") {
    for (const auto& row : quartic_search(3, 100)) {
        auto t = quartic_to_trapezoid(row);
        auto v = validate_trapezoid_k(t.a, t.b, t.c, t.d, t.k);
        CHECK(v.ok());
        CHECK(area(t) == Rat(3));
    }
}

TEST_SUITE_END();
