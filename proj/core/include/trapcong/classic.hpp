#pragma once

#include <array>
#include <cstdint>
#include <utility>

#include "trapcong/ecq.hpp"
#include "trapcong/model.hpp"

namespace trapcong {

struct RightTriangleQ {
    Rat a, b, c;  // legs a, b; hypotenuse c
    friend bool operator==(const RightTriangleQ&, const RightTriangleQ&) = default;
};

Validated<RightTriangleQ> validate_right_triangle(const Rat& a, const Rat& b, const Rat& c);
Rat area(const RightTriangleQ& t);

// y^2 = x^3 - n^2 x
CurveQ classic_curve(const Int& n);

// (a, b, c) with area n maps to (n(a+c)/b, 2n^2(a+c)/b^2); verified on-curve.
PointQ triangle_to_point(const Int& n, const RightTriangleQ& t);

// Inverse map |2nx/y|, |(x^2-n^2)/y|, |(x^2+n^2)/y|; requires y != 0.
RightTriangleQ point_to_triangle(const Int& n, const PointQ& P);

// m = alpha^4 - beta^4 together with the rational triangle
// (2 alpha beta, m/(alpha beta), (alpha^4+beta^4)/(alpha beta)) of area m.
std::pair<Int, RightTriangleQ> quartic_triangle(const Int& alpha, const Int& beta);

// The four fixed ternary quadratic forms used by the counting criterion.
enum class TernaryForm { F1, F2, F3, F4 };
// Coefficient triple (cx, cy, cz) of cx x^2 + cy y^2 + cz z^2.
std::array<std::uint64_t, 3> ternary_coeffs(TernaryForm f);

// Number of integer triples (x, y, z) with F(x, y, z) = m, signs included.
std::uint64_t count_ternary(TernaryForm f, std::uint64_t m);

struct TunnellResult {
    Int m;                       // (k^2 - 1) n
    bool m_even;
    std::uint64_t count_base;    // F1 (odd m) or F3 (even m)
    std::uint64_t count_double;  // F2 (odd m) or F4 (even m)
    bool consistent;             // count_base == 2 * count_double
};

// Counting criterion for m = (k^2-1) n. Inconsistent counts certify that m
// is not a congruent number; the converse direction is conditional and not
// asserted here.
TunnellResult tunnell_check(const Int& n, const Int& k);

}  // namespace trapcong
