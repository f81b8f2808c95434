#include "trapcong/kcong.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace trapcong {

CurveQ curve_k(const Int& n, const Int& k) {
    if (n < 1) throw std::invalid_argument("curve_k: n >= 1 required");
    if (k < 2) throw std::invalid_argument("curve_k: k >= 2 required (k = 1 is a rectangle)");
    Int M = (k * k - 1) * n;
    return CurveQ{Rat(-(M * M)), Rat(0)};
}

TrapezoidK point_to_trapezoid_k(const Int& n, const Int& k, const PointQ& P) {
    CurveQ E = curve_k(n, k);
    if (!on_curve(E, P)) throw std::invalid_argument("point_to_trapezoid_k: point not on curve");
    if (P.is_infinity() || P.y().is_zero() || P.x().is_zero())
        throw std::invalid_argument("point_to_trapezoid_k: degenerate point");
    Int M = (k * k - 1) * n;
    Rat Mq(M);
    if (P.x() == Mq || P.x() == -Mq)
        throw std::invalid_argument("point_to_trapezoid_k: 2-torsion x-coordinate");
    Rat d = abs(Rat(2 * n) * P.x() / P.y());
    Rat a = Rat(k) * d;
    Rat b = abs((P.x() * P.x() - Mq * Mq) / (Rat(k + 1) * P.y()));
    Rat c = (P.x() * P.x() + Mq * Mq) / (Rat(k + 1) * abs(P.y()));
    auto v = validate_trapezoid_k(a, b, c, d, k);
    if (!v.ok()) throw std::logic_error("point_to_trapezoid_k: side map produced invalid sides");
    if (area(*v) != Rat(n)) throw std::logic_error("point_to_trapezoid_k: area mismatch");
    return *v;
}

std::array<std::pair<Int, Int>, 3> cubic_identity_solutions(const Int& n) {
    if (n < 1) throw std::invalid_argument("cubic_identity_solutions: n >= 1 required");
    std::array<std::pair<Int, Int>, 3> out = {{{n, n}, {8 * n - 3, 4 * n - 1}, {8 * n + 3, 4 * n + 1}}};
    for (const auto& [k, m] : out)
        if (n * (k * k - 1) != m * m * m - m)
            throw std::logic_error("cubic_identity_solutions: identity failed");
    return out;
}

TrapezoidK nnn_witness(const Int& n) {
    if (n < 2) throw std::invalid_argument("nnn_witness: n >= 2 required");
    Int m = n * n * n - n;
    RightTriangleQ t{Rat(n * n - 1), Rat(2 * n), Rat(n * n + 1)};
    PointQ P = triangle_to_point(m, t);
    return point_to_trapezoid_k(n, n, P);
}

PellProblem pell_reduce(const Int& n, const Int& lambda) {
    if (n < 1 || lambda < 1) throw std::invalid_argument("pell_reduce: positive n, lambda required");
    Int scale = n - lambda * lambda;
    if (scale == 0) throw std::invalid_argument("pell_reduce: lambda^2 = n is degenerate");
    Int D = n * n - pow_int(lambda, 4);
    return PellProblem{n, lambda, D, 2 * n * lambda * scale, scale};
}

namespace {

// Minimal (u, v) with u^2 - D v^2 = 1, by the continued fraction of sqrt(D).
std::pair<Int, Int> fundamental_unit(const Int& D) {
    Int a0 = isqrt(D);
    Int P = 0, Q = 1, a = a0;
    Int h0 = 1, h1 = a0, k0 = 0, k1 = 1;
    while (true) {
        P = a * Q - P;
        Q = (D - P * P) / Q;
        a = (a0 + P) / Q;
        Int h2 = a * h1 + h0, k2 = a * k1 + k0;
        h0 = h1; h1 = h2;
        k0 = k1; k1 = k2;
        if (Q == 1) {
            if (h0 * h0 - D * k0 * k0 == 1) return {h0, k0};
            // negative Pell convergent; square it
            return {h0 * h0 + D * k0 * k0, 2 * h0 * k0};
        }
    }
}

bool verify_pell(const PellProblem& P, const Int& alpha, const Int& beta) {
    return (P.n - P.lambda * P.lambda) * alpha * alpha -
               (P.n + P.lambda * P.lambda) * beta * beta ==
           2 * P.n * P.lambda;
}

PellSolutions solve_square_disc(const PellProblem& prob, std::size_t want) {
    // X^2 - (mb)^2 = N factors as (X - mb)(X + mb) = N.
    PellSolutions out;
    out.finite_only = true;
    Int mroot = isqrt(prob.D);
    Int N = prob.N;
    std::set<std::pair<Int, Int>> sols;
    for (Int e = 1; e * e <= N; ++e) {
        if (N % e != 0) continue;
        Int f = N / e;
        if ((f - e) % 2 != 0) continue;
        Int X = (e + f) / 2;
        Int mb = (f - e) / 2;
        if (mb % mroot != 0) continue;
        Int beta = mb / mroot;
        if (X % prob.scale != 0) continue;
        Int alpha = X / prob.scale;
        if (alpha <= 0) continue;
        if (verify_pell(prob, alpha, beta)) sols.insert({alpha, beta});
    }
    for (const auto& s : sols) {
        out.pairs.push_back(s);
        if (out.pairs.size() >= want) break;
    }
    return out;
}

}  // namespace

PellSolutions pell_solve(const PellProblem& prob, std::size_t want) {
    if (prob.D <= 0) throw std::domain_error("pell_solve: D <= 0");
    if (is_square(prob.D)) return solve_square_disc(prob, want);

    auto [u, v] = fundamental_unit(prob.D);
    // class representatives live within |beta| <= max of the two bounds
    Int B = std::max(isqrt(abs(prob.N) * (u + 1) / (2 * prob.D)), isqrt(abs(prob.N))) + 1;

    std::vector<std::pair<Int, Int>> bases;
    for (Int b0 = 0; b0 <= B; ++b0) {
        Int rr = prob.N + prob.D * b0 * b0;
        if (rr < 0) continue;
        auto X0 = exact_sqrt(rr);
        if (!X0) continue;
        bases.emplace_back(*X0, b0);
        if (*X0 != 0) bases.emplace_back(-*X0, b0);
    }

    Int scale_abs = abs(prob.scale);
    std::set<std::pair<Int, Int>> sols;
    for (const auto& base : bases) {
        Int X = base.first, b = base.second;
        std::size_t found = 0;
        for (int step = 0; step < 64 && found < want + 4; ++step) {
            Int cx = X, cb = b;
            if (cx < 0 && cb <= 0) { cx = -cx; cb = -cb; }
            if (cx >= 0 && cb >= 0 && cx % scale_abs == 0) {
                Int alpha = cx / scale_abs;
                if ((alpha > 0 || (alpha == 0 && cb == 0)) && verify_pell(prob, alpha, cb)) {
                    sols.insert({alpha, cb});
                    ++found;
                }
            }
            Int Xn = u * X + v * prob.D * b;
            Int bn = v * X + u * b;
            X = Xn; b = bn;
        }
    }

    PellSolutions out;
    for (const auto& s : sols) {
        out.pairs.push_back(s);
        if (out.pairs.size() >= want) break;
    }
    return out;
}

std::optional<Int> pell_to_k(const Int& n, const Int& lambda, const Int& alpha, const Int& beta) {
    Int num = alpha * alpha - beta * beta;
    if (num % lambda != 0) return std::nullopt;
    Int k = num / lambda - 1;
    if (k < 2) return std::nullopt;
    if (n * (k - 1) != lambda * (alpha * alpha + beta * beta)) return std::nullopt;
    if ((k * k - 1) * n != pow_int(alpha, 4) - pow_int(beta, 4))
        throw std::logic_error("pell_to_k: quartic identity failed despite system equations");
    return k;
}

std::vector<QuarticRow> quartic_search(const Int& n, const Int& k_max) {
    if (n < 1 || k_max < 2) throw std::invalid_argument("quartic_search: n >= 1, k_max >= 2");
    std::vector<QuarticRow> out;
    for (Int k = 2; k <= k_max; ++k) {
        Int m = (k * k - 1) * n;
        Int alpha = isqrt(isqrt(m)) ;
        while (pow_int(alpha, 4) <= m) ++alpha;  // smallest alpha with alpha^4 > m
        for (; pow_int(alpha, 4) - pow_int(alpha - 1, 4) <= m; ++alpha) {
            Int r = pow_int(alpha, 4) - m;
            auto beta = exact_kth_root(r, 4);
            if (beta && *beta >= 1 && *beta < alpha) out.push_back({n, k, alpha, *beta});
        }
    }
    std::sort(out.begin(), out.end(), [](const QuarticRow& a, const QuarticRow& b) {
        return std::tie(a.k, a.alpha) < std::tie(b.k, b.alpha);
    });
    return out;
}

TrapezoidK quartic_to_trapezoid(const QuarticRow& row) {
    if (!(row.k >= 2 && row.alpha > row.beta && row.beta >= 1))
        throw std::invalid_argument("quartic_to_trapezoid: invalid row");
    Int m = (row.k * row.k - 1) * row.n;
    if (m != pow_int(row.alpha, 4) - pow_int(row.beta, 4))
        throw std::invalid_argument("quartic_to_trapezoid: row fails the quartic identity");
    auto [m2, tri] = quartic_triangle(row.alpha, row.beta);
    (void)m2;
    PointQ P = triangle_to_point(m, tri);
    return point_to_trapezoid_k(row.n, row.k, P);
}

std::pair<Int, TrapezoidK> prop31_witness(const Int& k) {
    if (k < 2) throw std::invalid_argument("prop31_witness: k >= 2 required");
    Int n = k * k + 1;
    QuarticRow row{n, k, k, 1};
    return {n, quartic_to_trapezoid(row)};
}

}  // namespace trapcong
