#include <doctest.h>

#include "trapcong/json_io.hpp"
#include "trapcong/model.hpp"

using namespace trapcong;

namespace {
Rat rq(const char* s) { return Rat::parse(s).value(); }
}  // namespace

TEST_SUITE_BEGIN("model");

TEST_CASE("integer trapezoid validation") {
    // degenerate trapezoid = right triangle
    auto tri = validate_trapezoid_i(3, 4, 5, 0);
    CHECK(tri.ok());
    auto bad = validate_trapezoid_i(1, 1, 5, 0);
    CHECK_FALSE(bad.ok());
    CHECK(bad.violations == std::vector<std::string>{"(a-d)^2 + b^2 = c^2"});
    // non-coprime height/slant
    auto scaled = validate_trapezoid_i(6, 8, 10, 0);
    CHECK_FALSE(scaled.ok());
    CHECK(scaled.violations == std::vector<std::string>{"gcd(b, c) = 1"});
    // rectangle (a = d) rejected
    CHECK_FALSE(validate_trapezoid_i(4, 3, 3, 4).ok());

    auto w91 = validate_trapezoid_i(25, 7, 25, 1);
    REQUIRE(w91.ok());
    CHECK(area(*w91) == Rat(91));
}

TEST_CASE("ratio trapezoid validation and area") {
    auto t = validate_trapezoid_k(rq("8/3"), rq("1"), rq("5/3"), rq("4/3"), 2);
    REQUIRE(t.ok());
    CHECK(area(*t) == Rat(2));

    auto t3 = validate_trapezoid_k(rq("9/4"), rq("2"), rq("5/2"), rq("3/4"), 3);
    REQUIRE(t3.ok());
    CHECK(area(*t3) == Rat(3));

    // a != k d
    CHECK_FALSE(validate_trapezoid_k(rq("8/3"), rq("1"), rq("5/3"), rq("1/3"), 2).ok());
    // zero offset is not a trapezoid here
    CHECK_FALSE(validate_trapezoid_k(rq("0"), rq("1"), rq("1"), rq("0"), 2).ok());
    // k = 1 rectangle is admitted by the type
    CHECK(validate_trapezoid_k(rq("2"), rq("1/2"), rq("1/2"), rq("2"), 1).ok());
}

TEST_CASE("offset trapezoid validation and area") {
    auto t = validate_trapezoid_d(rq("1352/123"), rq("123/1045"), rq("1412921/128535"), rq("3"));
    REQUIRE(t.ok());
    CHECK(area(*t) == Rat(1));

    // d = 0 reduces to the right-triangle area
    auto tri = validate_trapezoid_d(rq("3"), rq("4"), rq("5"), rq("0"));
    REQUIRE(tri.ok());
    CHECK(area(*tri) == Rat(6));

    CHECK_FALSE(validate_trapezoid_d(rq("3"), rq("4"), rq("6"), rq("0")).ok());
}

TEST_CASE("integer trapezoid area example") {
    auto w = validate_trapezoid_i(25, 7, 25, 1);
    REQUIRE(w.ok());
    CHECK(area(*w) == Rat(91));
    auto w6 = validate_trapezoid_i(4, 3, 5, 0);
    REQUIRE(w6.ok());
    CHECK(area(*w6) == Rat(6));
}

TEST_CASE("json round trip") {
    TrapezoidK t{rq("8/3"), rq("1"), rq("5/3"), rq("4/3"), 2};
    json j = t;
    CHECK(j["a"] == "8/3");
    CHECK(j["k"] == "2");
    CHECK(Rat::parse(j["a"].get<std::string>()).value() == t.a);

    TrapezoidI ti{25, 7, 25, 1};
    json ji = ti;
    CHECK(ji.dump() == R"({"a":"25","b":"7","c":"25","d":"1"})");
}

TEST_CASE("offset witness record schema") {
    TrapezoidD t{rq("10/3"), rq("3/4"), rq("41/12"), rq("1")};
    json r = d_witness_record(2, t, "prop41-S");
    CHECK(r.dump() == R"({"a":"10/3","b":"3/4","c":"41/12","d":"1","n":"2","source":"prop41-S"})");
}

TEST_SUITE_END();
