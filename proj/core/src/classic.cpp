#include "trapcong/classic.hpp"

#include <cmath>
#include <stdexcept>

namespace trapcong {

namespace {

std::uint64_t u64_isqrt(std::uint64_t v) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

}  // namespace

Validated<RightTriangleQ> validate_right_triangle(const Rat& a, const Rat& b, const Rat& c) {
    Validated<RightTriangleQ> r;
    if (a.sign() <= 0) r.violations.push_back("a > 0");
    if (b.sign() <= 0) r.violations.push_back("b > 0");
    if (c.sign() <= 0) r.violations.push_back("c > 0");
    if (a * a + b * b != c * c) r.violations.push_back("a^2 + b^2 = c^2");
    if (r.violations.empty()) r.value = RightTriangleQ{a, b, c};
    return r;
}

Rat area(const RightTriangleQ& t) { return t.a * t.b / Rat(2); }

CurveQ classic_curve(const Int& n) { return CurveQ{Rat(-(n * n)), Rat(0)}; }

PointQ triangle_to_point(const Int& n, const RightTriangleQ& t) {
    if (area(t) != Rat(n))
        throw std::invalid_argument("triangle_to_point: triangle area does not equal n");
    Rat nq(n);
    Rat x = nq * (t.a + t.c) / t.b;
    Rat y = Rat(2) * nq * nq * (t.a + t.c) / (t.b * t.b);
    PointQ P(x, y);
    if (!on_curve(classic_curve(n), P))
        throw std::logic_error("triangle_to_point: mapped point fails the curve equation");
    return P;
}

RightTriangleQ point_to_triangle(const Int& n, const PointQ& P) {
    CurveQ E = classic_curve(n);
    if (!on_curve(E, P)) throw std::invalid_argument("point_to_triangle: point not on curve");
    if (P.is_infinity() || P.y().is_zero())
        throw std::invalid_argument("point_to_triangle: 2-torsion point has no triangle");
    Rat nq(n);
    Rat a = abs(Rat(2) * nq * P.x() / P.y());
    Rat b = abs((P.x() * P.x() - nq * nq) / P.y());
    Rat c = abs((P.x() * P.x() + nq * nq) / P.y());
    auto v = validate_right_triangle(a, b, c);
    if (!v.ok()) throw std::logic_error("point_to_triangle: degenerate output");
    return *v;
}

std::pair<Int, RightTriangleQ> quartic_triangle(const Int& alpha, const Int& beta) {
    if (!(alpha > beta && beta >= 1))
        throw std::invalid_argument("quartic_triangle: need alpha > beta >= 1");
    Int a4 = pow_int(alpha, 4), b4 = pow_int(beta, 4);
    Int m = a4 - b4;
    Int ab = alpha * beta;
    RightTriangleQ t{Rat(2 * ab), Rat(m, ab), Rat(a4 + b4, ab)};
    // (2 a^2 b^2)^2 + (a^4 - b^4)^2 = (a^4 + b^4)^2, scaled by 1/(ab)
    if (area(t) != Rat(m)) throw std::logic_error("quartic_triangle: area identity failed");
    return {m, t};
}

std::array<std::uint64_t, 3> ternary_coeffs(TernaryForm f) {
    switch (f) {
        case TernaryForm::F1: return {2, 1, 8};
        case TernaryForm::F2: return {2, 1, 32};
        case TernaryForm::F3: return {8, 2, 16};
        case TernaryForm::F4: return {8, 2, 64};
    }
    throw std::logic_error("ternary_coeffs: bad form");
}

std::uint64_t count_ternary(TernaryForm f, std::uint64_t m) {
    auto [cx, cy, cz] = ternary_coeffs(f);
    std::uint64_t count = 0;
    for (std::uint64_t x = 0; cx * x * x <= m; ++x) {
        std::uint64_t rx = m - cx * x * x;
        for (std::uint64_t z = 0; cz * z * z <= rx; ++z) {
            std::uint64_t r = rx - cz * z * z;
            if (r % cy != 0) continue;
            std::uint64_t y2 = r / cy;
            std::uint64_t y = u64_isqrt(y2);
            if (y * y != y2) continue;
            std::uint64_t orbit = (x ? 2 : 1) * (y ? 2 : 1) * (z ? 2 : 1);
            count += orbit;
        }
    }
    return count;
}

TunnellResult tunnell_check(const Int& n, const Int& k) {
    if (k < 2 || n < 1) throw std::invalid_argument("tunnell_check: need k >= 2, n >= 1");
    Int m = (k * k - 1) * n;
    std::uint64_t mu = to_u64(m, "tunnell_check");
    TunnellResult r;
    r.m = m;
    r.m_even = (mu % 2 == 0);
    if (r.m_even) {
        r.count_base = count_ternary(TernaryForm::F3, mu);
        r.count_double = count_ternary(TernaryForm::F4, mu);
    } else {
        r.count_base = count_ternary(TernaryForm::F1, mu);
        r.count_double = count_ternary(TernaryForm::F2, mu);
    }
    r.consistent = (r.count_base == 2 * r.count_double);
    return r;
}

}  // namespace trapcong
