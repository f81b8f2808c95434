#include "trapcong/model.hpp"

namespace trapcong {

Validated<TrapezoidI> validate_trapezoid_i(const Int& a, const Int& b, const Int& c,
                                           const Int& d) {
    Validated<TrapezoidI> r;
    if (!(a > d)) r.violations.push_back("a > d");
    if (d < 0) r.violations.push_back("d >= 0");
    if (b < 1) r.violations.push_back("b >= 1");
    if (c < 1) r.violations.push_back("c >= 1");
    if ((a - d) * (a - d) + b * b != c * c)
        r.violations.push_back("(a-d)^2 + b^2 = c^2");
    if (gcd(b, c) != 1) r.violations.push_back("gcd(b, c) = 1");
    if (r.violations.empty()) r.value = TrapezoidI{a, b, c, d};
    return r;
}

Validated<TrapezoidK> validate_trapezoid_k(const Rat& a, const Rat& b, const Rat& c, const Rat& d,
                                           const Int& k) {
    Validated<TrapezoidK> r;
    if (k < 1) r.violations.push_back("k >= 1");
    if (a.sign() <= 0) r.violations.push_back("a > 0");
    if (b.sign() <= 0) r.violations.push_back("b > 0");
    if (c.sign() <= 0) r.violations.push_back("c > 0");
    if (d.sign() <= 0) r.violations.push_back("d > 0");
    if (a != Rat(k) * d) r.violations.push_back("a = k d");
    Rat e = a - d;
    if (e * e + b * b != c * c) r.violations.push_back("(a-d)^2 + b^2 = c^2");
    if (r.violations.empty()) r.value = TrapezoidK{a, b, c, d, k};
    return r;
}

Validated<TrapezoidD> validate_trapezoid_d(const Rat& a, const Rat& b, const Rat& c,
                                           const Rat& d) {
    Validated<TrapezoidD> r;
    if (a.sign() <= 0) r.violations.push_back("a > 0");
    if (b.sign() <= 0) r.violations.push_back("b > 0");
    if (c.sign() <= 0) r.violations.push_back("c > 0");
    if (d.sign() < 0) r.violations.push_back("d >= 0");
    if (a * a + b * b != c * c) r.violations.push_back("a^2 + b^2 = c^2");
    if (r.violations.empty()) r.value = TrapezoidD{a, b, c, d};
    return r;
}

Rat area(const TrapezoidI& t) { return Rat(t.a + t.d) * Rat(t.b) / Rat(2); }
Rat area(const TrapezoidK& t) { return (t.a + t.d) * t.b / Rat(2); }
Rat area(const TrapezoidD& t) { return (t.a + t.d + t.d) * t.b / Rat(2); }

std::string to_string(const TrapezoidI& t) {
    return "(" + t.a.get_str() + ", " + t.b.get_str() + ", " + t.c.get_str() + ", " +
           t.d.get_str() + ")";
}
std::string to_string(const TrapezoidK& t) {
    return "(" + t.a.str() + ", " + t.b.str() + ", " + t.c.str() + ", " + t.d.str() +
           "; k=" + t.k.get_str() + ")";
}
std::string to_string(const TrapezoidD& t) {
    return "(" + t.a.str() + ", " + t.b.str() + ", " + t.c.str() + "; d=" + t.d.str() + ")";
}

}  // namespace trapcong
