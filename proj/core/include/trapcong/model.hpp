#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trapcong/rat.hpp"

namespace trapcong {

// Right trapezoid with integer sides: a the longer parallel side, d the
// shorter (possibly 0), b the height shared by both right angles, c the
// slant side. Constraints: a > d >= 0, b,c >= 1, (a-d)^2 + b^2 = c^2,
// gcd(b, c) = 1. d = 0 degenerates to a right triangle.
struct TrapezoidI {
    Int a, b, c, d;
    friend bool operator==(const TrapezoidI&, const TrapezoidI&) = default;
    friend auto operator<=>(const TrapezoidI& l, const TrapezoidI& r) {
        if (auto c0 = cmp(l.a, r.a); c0 != 0) return c0 <=> 0;
        if (auto c1 = cmp(l.b, r.b); c1 != 0) return c1 <=> 0;
        if (auto c2 = cmp(l.c, r.c); c2 != 0) return c2 <=> 0;
        return cmp(l.d, r.d) <=> 0;
    }
};

// Rational right trapezoid constrained by a = k*d for an integer ratio
// k >= 1 (k = 1 is the degenerate rectangle).
struct TrapezoidK {
    Rat a, b, c, d;
    Int k;
    friend bool operator==(const TrapezoidK&, const TrapezoidK&) = default;
};

// Rational right trapezoid with fixed offset d; here the slant relation is
// a^2 + b^2 = c^2 on the legs themselves and the area is (a + 2d) b / 2.
struct TrapezoidD {
    Rat a, b, c, d;
    friend bool operator==(const TrapezoidD&, const TrapezoidD&) = default;
};

template <typename T>
struct Validated {
    std::optional<T> value;
    std::vector<std::string> violations;
    bool ok() const { return value.has_value(); }
    const T& operator*() const { return *value; }
};

Validated<TrapezoidI> validate_trapezoid_i(const Int& a, const Int& b, const Int& c, const Int& d);
Validated<TrapezoidK> validate_trapezoid_k(const Rat& a, const Rat& b, const Rat& c, const Rat& d,
                                           const Int& k);
Validated<TrapezoidD> validate_trapezoid_d(const Rat& a, const Rat& b, const Rat& c, const Rat& d);

Rat area(const TrapezoidI& t);  // (a + d) b / 2
Rat area(const TrapezoidK& t);  // (a + d) b / 2
Rat area(const TrapezoidD& t);  // (a + 2d) b / 2

std::string to_string(const TrapezoidI& t);
std::string to_string(const TrapezoidK& t);
std::string to_string(const TrapezoidD& t);

}  // namespace trapcong
