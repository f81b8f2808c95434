#include <doctest.h>

#include <cstdint>

#include "trapcong/classic.hpp"

using namespace trapcong;

namespace {

// sign-complete reference count over the full box, for cross-checking the
// octant-folded implementation
std::uint64_t count_ternary_full(TernaryForm f, std::uint64_t m) {
    auto [cx, cy, cz] = ternary_coeffs(f);
    auto box = [m](std::uint64_t c) {
        std::int64_t r = 0;
        while (c * static_cast<std::uint64_t>((r + 1) * (r + 1)) <= m) ++r;
        return r;
    };
    std::int64_t xm = box(cx), ym = box(cy), zm = box(cz);
    std::uint64_t count = 0;
    for (std::int64_t x = -xm; x <= xm; ++x)
        for (std::int64_t y = -ym; y <= ym; ++y)
            for (std::int64_t z = -zm; z <= zm; ++z)
                if (cx * static_cast<std::uint64_t>(x * x) +
                        cy * static_cast<std::uint64_t>(y * y) +
                        cz * static_cast<std::uint64_t>(z * z) ==
                    m)
                    ++count;
    return count;
}

}  // namespace

TEST_SUITE_BEGIN("classic");

TEST_CASE("triangle to point") {
    RightTriangleQ t{Rat(3), Rat(4), Rat(5)};
    PointQ P = triangle_to_point(6, t);
    CHECK(P == PointQ(Rat(12), Rat(36)));
    CHECK(on_curve(classic_curve(6), P));

    // leg-swapped triangle gives a different valid point
    RightTriangleQ t2{Rat(4), Rat(3), Rat(5)};
    PointQ P2 = triangle_to_point(6, t2);
    CHECK(on_curve(classic_curve(6), P2));
    CHECK(P != P2);

    RightTriangleQ t240{Rat(16), Rat(30), Rat(34)};
    CHECK(triangle_to_point(240, t240) == PointQ(Rat(400), Rat(6400)));

    CHECK_THROWS_AS(triangle_to_point(5, t), std::invalid_argument);
}

TEST_CASE("point to triangle") {
    RightTriangleQ t = point_to_triangle(6, PointQ(Rat(12), Rat(36)));
    CHECK(t == RightTriangleQ{Rat(4), Rat(3), Rat(5)});

    RightTriangleQ t2 = point_to_triangle(6, PointQ(Rat(-3), Rat(9)));
    CHECK(area(t2) == Rat(6));
    CHECK(t2.a * t2.a + t2.b * t2.b == t2.c * t2.c);

    CHECK_THROWS_AS(point_to_triangle(6, PointQ(Rat(6), Rat(0))), std::invalid_argument);
}

TEST_CASE("round trip up to leg order") {
    for (auto [x, y] : {std::pair<long, long>{2, 1}, {3, 2}, {4, 1}, {4, 3}, {5, 2}}) {
        Rat a(2 * x * y), b(x * x - y * y), c(x * x + y * y);
        RightTriangleQ t{a, b, c};
        Int n = Int(x) * y * (x + y) * (x - y);  // area of the primitive triangle
        RightTriangleQ back = point_to_triangle(n, triangle_to_point(n, t));
        bool same = (back == t) || (back == RightTriangleQ{b, a, c});
        CHECK(same);
    }
}

TEST_CASE("quartic triangle family") {
    auto [m, t] = quartic_triangle(4, 2);
    CHECK(m == 240);
    CHECK(t == RightTriangleQ{Rat(16), Rat(30), Rat(34)});

    auto [m2, t2] = quartic_triangle(2, 1);
    CHECK(m2 == 15);
    CHECK(t2 == RightTriangleQ{Rat(4), Rat(Int(15), Int(2)), Rat(Int(17), Int(2))});

    for (long k = 2; k <= 10; ++k) {
        auto [mk, tk] = quartic_triangle(k, 1);
        CHECK(mk == pow_int(k, 4) - 1);
        CHECK(area(tk) == Rat(mk));
    }
    for (Int a = 2; a <= 30; ++a)
        for (Int b = 1; b < a; ++b) {
            auto [mm, tt] = quartic_triangle(a, b);
            CHECK(area(tt) == Rat(mm));
            CHECK(tt.a * tt.a + tt.b * tt.b == tt.c * tt.c);
        }

    CHECK_THROWS_AS(quartic_triangle(2, 2), std::invalid_argument);
}

TEST_CASE("ternary form counts") {
    CHECK(count_ternary(TernaryForm::F1, 1) == 2);   // y = +-1
    CHECK(count_ternary(TernaryForm::F3, 6) == 0);
    CHECK(count_ternary(TernaryForm::F3, 2) == 2);   // (0, +-1, 0)
    for (std::uint64_t m = 1; m <= 100; ++m)
        for (auto f : {TernaryForm::F1, TernaryForm::F2, TernaryForm::F3, TernaryForm::F4})
            CHECK(count_ternary(f, m) == count_ternary_full(f, m));
}

TEST_CASE("counting criterion on classical values") {
    // areas 5, 6, 7 are expressible; 1, 2, 3, 10 are not
    auto consistent = [](std::uint64_t m) {
        if (m % 2) return count_ternary(TernaryForm::F1, m) == 2 * count_ternary(TernaryForm::F2, m);
        return count_ternary(TernaryForm::F3, m) == 2 * count_ternary(TernaryForm::F4, m);
    };
    for (std::uint64_t m : {5, 6, 7}) CHECK(consistent(m));
    for (std::uint64_t m : {1, 2, 3, 10}) CHECK_FALSE(consistent(m));

    auto r = tunnell_check(2, 2);  // m = 6
    CHECK(r.m == 6);
    CHECK(r.m_even);
    CHECK(r.count_base == 0);
    CHECK(r.count_double == 0);
    CHECK(r.consistent);
}

TEST_SUITE_END();
