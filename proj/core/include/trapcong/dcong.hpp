#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trapcong/ecq.hpp"
#include "trapcong/model.hpp"

namespace trapcong {

// The offset-d trapezoid curve E: y^2 = x^3 - (3n^2+d^4)/3 x + (9n^2+2d^4)d^2/27
// and its integral model E': y^2 = x^3 - (81n^2+27d^4) x + 27d^2(9n^2+2d^4),
// related by (x, y) -> (9x, 27y).
struct DCurvePair {
    Int n, d;
    CurveQ E, Eprime;
};

DCurvePair d_curves(const Int& n, const Int& d);

PointQ scale_up(const DCurvePair& C, const PointQ& P);    // E  -> E'
PointQ scale_down(const DCurvePair& C, const PointQ& P);  // E' -> E

// Closed-form points on E' (P lives on E and only exists when d = 3n):
//   P    = (-6n^2, 3n^2)                       on E_{n,3n}
//   Q    = (-6d^2, 27dn)
//   R    = (3d^2 - 9n, 27dn)
//   S    = (3(d^6 - nd^4 + 7d^2n^2 - 3n^3)/(n+d^2)^2, -27dn(d^2-n)(d^4+3n^2)/(n+d^2)^3)
//   twoQ = [2]Q, cross-checked against the group law.
// S is omitted when n = d^2 (its y vanishes and the side map degenerates).
struct NamedPoints {
    std::optional<PointQ> P;
    PointQ Q, R, twoQ;
    std::optional<PointQ> S;
};

NamedPoints named_points(const Int& n, const Int& d);

// Side map from a point of E: with u = 3x - d^2 and D0 = 3(-3y + 3dx - d^3),
//   a = (u^2 - 9n^2)/D0, b = 6nu/D0, c = |u^2 + 9n^2|/|D0|.
// Uses -P instead when a or b comes out non-positive; rejects if neither
// sign works. Output is validated (positive, Pythagorean, area n).
TrapezoidD point_to_sides_d(const Int& n, const Int& d, const PointQ& P);

// Closed-form witness with d = 3n, equal to the side map applied to the
// double of P on E_{n,3n}.
TrapezoidD thm16_sides(const Int& n);

// Closed-form witness for n != d^2 from S (n > d^2) or -S (n < d^2),
// cross-checked against the point pipeline.
TrapezoidD prop41_sides(const Int& n, const Int& d);

struct DSearchEntry {
    Int n, d;
    std::optional<TrapezoidD> witness;  // empty iff skipped (d^2 = n)
    // "thm16" (d = 3n), "prop41-S", "prop41-negS", "point", or "skip"
    std::string source;
};

// A witness for every d in [1, d_max] except the excluded square case.
// d = 3n uses the closed-form route; other offsets the S / -S branches.
std::vector<DSearchEntry> search_with_fixed_n(const Int& n, const Int& d_max);

}  // namespace trapcong
