#include "trapcong/ecq.hpp"

#include <stdexcept>

namespace trapcong {

namespace {

Rat disc_core(const CurveQ& E) {
    return Rat(4) * E.A * E.A * E.A + Rat(27) * E.B * E.B;
}

void require_on_curve(const CurveQ& E, const PointQ& P, const char* op) {
    if (!on_curve(E, P))
        throw std::invalid_argument(std::string(op) + ": point not on curve");
}

}  // namespace

bool is_nonsingular(const CurveQ& E) { return !disc_core(E).is_zero(); }

Rat discriminant(const CurveQ& E) { return Rat(-16) * disc_core(E); }

Rat j_invariant(const CurveQ& E) {
    Rat d = disc_core(E);
    if (d.is_zero()) throw std::domain_error("j_invariant: singular curve");
    return Rat(6912) * E.A * E.A * E.A / d;
}

const Rat& PointQ::x() const {
    if (!p_) throw std::domain_error("PointQ: infinity has no coordinates");
    return p_->first;
}

const Rat& PointQ::y() const {
    if (!p_) throw std::domain_error("PointQ: infinity has no coordinates");
    return p_->second;
}

std::string PointQ::str() const {
    if (is_infinity()) return "O";
    return "(" + x().str() + ", " + y().str() + ")";
}

bool on_curve(const CurveQ& E, const PointQ& P) {
    if (P.is_infinity()) return true;
    const Rat& x = P.x();
    const Rat& y = P.y();
    return y * y == x * x * x + E.A * x + E.B;
}

PointQ neg(const PointQ& P) {
    if (P.is_infinity()) return P;
    return PointQ(P.x(), -P.y());
}

PointQ dbl(const CurveQ& E, const PointQ& P) {
    require_on_curve(E, P, "dbl");
    if (P.is_infinity()) return P;
    if (P.y().is_zero()) return PointQ::infinity();  // 2-torsion
    Rat lambda = (Rat(3) * P.x() * P.x() + E.A) / (Rat(2) * P.y());
    Rat x3 = lambda * lambda - P.x() - P.x();
    Rat y3 = lambda * (P.x() - x3) - P.y();
    return PointQ(x3, y3);
}

PointQ add(const CurveQ& E, const PointQ& P, const PointQ& Q) {
    require_on_curve(E, P, "add");
    require_on_curve(E, Q, "add");
    if (P.is_infinity()) return Q;
    if (Q.is_infinity()) return P;
    if (P.x() == Q.x()) {
        if (P.y() == Q.y()) return dbl(E, P);
        return PointQ::infinity();  // P = -Q
    }
    Rat lambda = (Q.y() - P.y()) / (Q.x() - P.x());
    Rat x3 = lambda * lambda - P.x() - Q.x();
    Rat y3 = lambda * (P.x() - x3) - P.y();
    return PointQ(x3, y3);
}

PointQ mul(const CurveQ& E, const Int& m, const PointQ& P) {
    require_on_curve(E, P, "mul");
    if (m < 0) return neg(mul(E, Int(-m), P));
    PointQ acc = PointQ::infinity();
    PointQ base = P;
    Int k = m;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = add(E, acc, base);
        k >>= 1;
        if (k > 0) base = dbl(E, base);
    }
    return acc;
}

PointQ chord_third(const CurveQ& E, const PointQ& P, const PointQ& Q) {
    if (P.is_infinity() || Q.is_infinity())
        throw std::invalid_argument("chord_third: operands must be affine");
    if (P == Q) throw std::invalid_argument("chord_third: points must be distinct");
    if (P == neg(Q))
        throw std::invalid_argument("chord_third: vertical chord meets the curve at infinity");
    return neg(add(E, P, Q));
}

bool is_integral(const PointQ& P) {
    if (P.is_infinity()) return false;
    return P.x().is_integer() && P.y().is_integer();
}

bool has_infinite_order(const CurveQ& E, const PointQ& P) {
    require_on_curve(E, P, "has_infinite_order");
    if (P.is_infinity()) return false;
    PointQ acc = P;
    for (int m = 1; m <= 12; ++m) {
        if (acc.is_infinity()) return false;
        if (m < 12) acc = add(E, acc, P);
    }
    return true;
}

}  // namespace trapcong
