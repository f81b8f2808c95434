#pragma once

#include <optional>
#include <string>
#include <utility>

#include "trapcong/rat.hpp"

namespace trapcong {

// Short Weierstrass curve y^2 = x^3 + A x + B over the rationals.
struct CurveQ {
    Rat A, B;
    friend bool operator==(const CurveQ&, const CurveQ&) = default;
};

bool is_nonsingular(const CurveQ& E);

// Standard convention: -16 (4 A^3 + 27 B^2).
Rat discriminant(const CurveQ& E);

// 6912 A^3 / (4 A^3 + 27 B^2); throws std::domain_error on a singular curve.
Rat j_invariant(const CurveQ& E);

// Affine point or the point at infinity (the group identity).
class PointQ {
public:
    PointQ() = default;  // infinity
    PointQ(Rat x, Rat y) : p_(std::in_place, std::move(x), std::move(y)) {}
    static PointQ infinity() { return PointQ(); }

    bool is_infinity() const { return !p_.has_value(); }
    const Rat& x() const;
    const Rat& y() const;

    std::string str() const;
    friend bool operator==(const PointQ&, const PointQ&) = default;

private:
    std::optional<std::pair<Rat, Rat>> p_;
};

bool on_curve(const CurveQ& E, const PointQ& P);

PointQ neg(const PointQ& P);

// Chord-tangent group law. Operands must lie on E; off-curve input is
// rejected with std::invalid_argument.
PointQ add(const CurveQ& E, const PointQ& P, const PointQ& Q);
PointQ dbl(const CurveQ& E, const PointQ& P);
PointQ mul(const CurveQ& E, const Int& m, const PointQ& P);

// Third intersection of the line through two distinct affine points,
// i.e. -(P + Q). The vertical case P = -Q is rejected.
PointQ chord_third(const CurveQ& E, const PointQ& P, const PointQ& Q);

bool is_integral(const PointQ& P);

// True iff no multiple m P with 1 <= m <= 12 is the identity; complete by
// the bound on rational torsion orders.
bool has_infinite_order(const CurveQ& E, const PointQ& P);

}  // namespace trapcong
