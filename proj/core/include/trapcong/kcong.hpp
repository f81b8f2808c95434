#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "trapcong/classic.hpp"
#include "trapcong/ecq.hpp"
#include "trapcong/model.hpp"

namespace trapcong {

// A solution of (k^2 - 1) n = alpha^4 - beta^4.
struct QuarticRow {
    Int n, k, alpha, beta;
    friend bool operator==(const QuarticRow&, const QuarticRow&) = default;
};

// y^2 = x^3 - ((k^2-1) n)^2 x, the ratio-k trapezoid curve (k >= 2).
CurveQ curve_k(const Int& n, const Int& k);

// Side map from an admissible point of curve_k(n, k):
//   a = |2knx/y|, d = |2nx/y|, b = |(x^2 - M^2)/((k+1)y)|, c = (x^2 + M^2)/((k+1)|y|)
// with M = (k^2-1) n. Requires y != 0, x != 0, x != +-M. The result is
// validated (a = kd, Pythagoras, area n) before returning.
TrapezoidK point_to_trapezoid_k(const Int& n, const Int& k, const PointQ& P);

// The three closed-form integer solutions (k, m) of n(k^2 - 1) = m^3 - m:
// (n, n), (8n-3, 4n-1), (8n+3, 4n+1). Each pair is verified exactly.
std::array<std::pair<Int, Int>, 3> cubic_identity_solutions(const Int& n);

// Ratio-n witness: route the (n^2-1, 2n, n^2+1) triangle of area n^3 - n
// through the curve for k = n.
TrapezoidK nnn_witness(const Int& n);

// (n - L^2) a^2 - (n + L^2) b^2 = 2 n L, normalized to
// X^2 - D b^2 = N with X = (n - L^2) a, D = n^2 - L^4, N = 2 n L (n - L^2).
struct PellProblem {
    Int n, lambda;
    Int D, N, scale;
};

PellProblem pell_reduce(const Int& n, const Int& lambda);

struct PellSolutions {
    std::vector<std::pair<Int, Int>> pairs;  // (alpha, beta), increasing alpha
    bool finite_only = false;                // square D: factorization search
};

// Base solutions by bounded search, extended along the automorphism orbit
// of the unit equation; only X divisible by the scale survive. Square D
// falls back to a finite divisor search; D <= 0 is rejected.
PellSolutions pell_solve(const PellProblem& P, std::size_t want);

// k = (alpha^2 - beta^2)/lambda - 1 when that is an integer >= 2 and
// n(k-1) = lambda(alpha^2 + beta^2) holds; verifies (k^2-1) n = a^4 - b^4.
std::optional<Int> pell_to_k(const Int& n, const Int& lambda, const Int& alpha, const Int& beta);

// All rows with 2 <= k <= k_max, alpha > beta >= 1.
std::vector<QuarticRow> quartic_search(const Int& n, const Int& k_max);

// Full chain: quartic triangle of area m = (k^2-1)n, the classic map onto
// y^2 = x^3 - m^2 x (= curve_k(n, k)), then the trapezoid side map.
TrapezoidK quartic_to_trapezoid(const QuarticRow& row);

// n = k^2 + 1 is always expressible: (k^2-1)(k^2+1) = k^4 - 1 with
// (alpha, beta) = (k, 1).
std::pair<Int, TrapezoidK> prop31_witness(const Int& k);

}  // namespace trapcong
