#include <doctest.h>

#include <random>

#include "trapcong/rat.hpp"

using namespace trapcong;

TEST_SUITE_BEGIN("arith");

TEST_CASE("gcd basics") {
    CHECK(gcd(12, 8) == 4);
    CHECK(gcd(7, 25) == 1);
    CHECK(gcd(0, 5) == 5);
    CHECK(gcd(0, 0) == 0);
    CHECK(gcd(-12, 8) == 4);
}

TEST_CASE("gcd divides and reduces") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 200; ++i) {
        Int a = static_cast<unsigned long>(rng() % 1000000), b = static_cast<unsigned long>(rng() % 1000000);
        Int g = gcd(a, b);
        if (g == 0) continue;
        CHECK(a % g == 0);
        CHECK(b % g == 0);
        CHECK(gcd(a / g, b / g) == 1);
    }
}

TEST_CASE("isqrt and is_square") {
    CHECK(isqrt(Int(10)) == 3);
    CHECK(is_square(Int(25)));
    CHECK_FALSE(is_square(Int(24)));
    CHECK(is_square(Int(24) * 24 + 7 * 7));  // 625, hypotenuse square of (24,7,25)
    for (std::uint64_t n = 0; n <= 100000; ++n) {
        Int r = isqrt(Int(n));
        CHECK(r * r <= Int(n));
        CHECK((r + 1) * (r + 1) > Int(n));
    }
}

TEST_CASE("primality") {
    CHECK(is_prime(Int(97)));
    CHECK_FALSE(is_prime(Int(1)));
    CHECK_FALSE(is_prime(Int(561)));    // Carmichael
    CHECK_FALSE(is_prime(Int(25326001)));
    CHECK(is_prime(Int("2305843009213693951")));  // 2^61 - 1
    auto ps = primes_up_to(10);
    CHECK(ps == std::vector<std::uint64_t>{2, 3, 5, 7});
    CHECK(primes_up_to(100).size() == 25);
}

TEST_CASE("factorize") {
    auto f = factorize(Int(240));
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::pair<Int, unsigned>{2, 4});
    CHECK(f[1] == std::pair<Int, unsigned>{3, 1});
    CHECK(f[2] == std::pair<Int, unsigned>{5, 1});
    CHECK_THROWS_AS(factorize(Int(0)), std::domain_error);
    CHECK(factorize(Int(1)).empty());

    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        Int n = Int(static_cast<unsigned long>(rng() % 1000000000000ull)) + 1;
        Int prod = 1;
        for (const auto& [p, e] : factorize(n)) {
            CHECK(is_prime(p));
            prod *= pow_int(p, e);
        }
        CHECK(prod == n);
    }
}

TEST_CASE("rat canonical form") {
    Rat q(Int(4), Int(8));
    CHECK(q.num() == 1);
    CHECK(q.den() == 2);
    Rat r(Int(3), Int(-6));
    CHECK(r.num() == -1);
    CHECK(r.den() == 2);
    CHECK_THROWS_AS(Rat(Int(1), Int(0)), std::domain_error);
    CHECK(Rat(Int(10), Int(5)).is_integer());
    CHECK(Rat(Int(10), Int(5)).str() == "2");
    CHECK(Rat(Int(-7), Int(3)).str() == "-7/3");
    CHECK(Rat::parse("17/6").value() == Rat(Int(17), Int(6)));
    CHECK(Rat::parse("-5").value() == Rat(-5));
    CHECK_FALSE(Rat::parse("x").has_value());
}

TEST_CASE("rat arithmetic is exact") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        Int p = static_cast<long>(rng() % 2001) - 1000, q = static_cast<unsigned long>(rng() % 999) + 1;
        Int r = static_cast<long>(rng() % 2001) - 1000, s = static_cast<unsigned long>(rng() % 999) + 1;
        Rat a(p, q), b(r, s);
        CHECK((a + b) - b == a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("rat_sqrt") {
    CHECK(rat_sqrt(Rat(Int(289), Int(36))).value() == Rat(Int(17), Int(6)));
    CHECK(rat_sqrt(Rat(4)).value() == Rat(2));
    CHECK_FALSE(rat_sqrt(Rat(2)).has_value());
    CHECK_FALSE(rat_sqrt(Rat(Int(1), Int(3))).has_value());
    CHECK(rat_sqrt(Rat(0)).value() == Rat(0));
}

TEST_SUITE_END();
