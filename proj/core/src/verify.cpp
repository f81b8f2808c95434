#include "trapcong/verify.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "trapcong/classic.hpp"
#include "trapcong/dcong.hpp"
#include "trapcong/icong.hpp"
#include "trapcong/json_io.hpp"
#include "trapcong/kcong.hpp"

namespace trapcong {

namespace {

// ---- published values under test ------------------------------------

const std::vector<std::uint64_t> kPaperIntersection = {6,  18, 30, 42, 50, 54, 60,
                                                       70, 78, 84, 90, 98, 100};

const std::vector<std::uint64_t> kPaperNonPrimeList = {1,  4,  8,  16, 20, 25, 28,
                                                       32, 49, 52, 56, 58, 62, 64,
                                                       74, 77, 82, 86, 88, 91, 94};

const std::vector<std::uint64_t> kPaperD0List = {6,   30,  60,  60,  84,  96,  180, 210, 330,
                                                 480, 486, 504, 546, 630, 840, 924, 960};

struct TableRow {
    std::uint64_t k, alpha, beta;
};
const std::map<std::uint64_t, std::vector<TableRow>> kPaperTable = {
    {2, {{11, 4, 2}, {131, 14, 8}, {181, 16, 2}, {513, 34, 30}, {573, 29, 15}}},
    {3, {{9, 4, 2}, {57, 10, 4}, {521, 32, 22}, {729, 37, 23}}},
    {4,
     {{31, 8, 4}, {59, 13, 11}, {129, 18, 14}, {161, 18, 6}, {365, 31, 25}, {511, 32, 8},
      {545, 44, 40}}},
    {5,
     {{2, 2, 1}, {6, 4, 3}, {7, 4, 2}, {86, 16, 13}, {390, 58, 57}, {482, 38, 31}, {487, 33, 3},
      {985, 47, 13}}},
    {6, {{69, 13, 1}, {219, 34, 32}, {319, 28, 8}, {441, 37, 29}}},
    {7, {{103, 22, 20}, {519, 51, 47}}},
    {8, {{33, 10, 6}, {239, 26, 2}, {481, 38, 22}, {611, 73, 71}, {781, 47, 1}}},
    {9, {{649, 57, 51}}},
    {10,
     {{3, 3, 1}, {5, 4, 2}, {35, 11, 7}, {83, 17, 11}, {365, 34, 8}, {581, 76, 74}, {773, 52, 34},
      {897, 54, 26}}},
};

// (lambda, {n...}) pairs claimed to feed infinitely many ratios k
const std::vector<std::pair<std::uint64_t, std::vector<std::uint64_t>>> kPaperPellFamilies = {
    {1, {2, 5}},
    {2, {10, 13, 52}},
    {3, {13, 17, 27, 30, 45}},
    {4, {17, 18, 26, 32, 50, 68, 80}},
};

// the six worked quadruples for ratio k = n = 2 and k = n = 3
struct KExample {
    long n;
    const char *a, *b, *c, *d;
};
const std::vector<KExample> kPaperKExamples = {
    {2, "8/3", "1", "5/3", "4/3"},
    {2, "80/7", "7/30", "1201/210", "40/7"},
    {2, "6808/4653", "1551/851", "7776485/3959703", "3404/4653"},
    {3, "9/4", "2", "5/2", "3/4"},
    {3, "21/40", "60/7", "1201/140", "7/40"},
    {3, "851/517", "4653/1702", "7776485/2639802", "851/1551"},
};

struct DExample {
    long n, d;
    const char *a, *b, *c;
};
const std::vector<DExample> kPaperDExamples = {
    {1, 3, "1352/123", "123/1045", "1412921/128535"},
    {2, 6, "94571/1950", "7800/117971", "11156645809/230043450"},
    {3, 9, "123734/1095", "3285/71722", "8874450677/78535590"},
};

// ---- helpers ----------------------------------------------------------

std::string join_u64(const std::vector<std::uint64_t>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

Rat parse_rat(const char* s) {
    auto q = Rat::parse(s);
    if (!q) throw std::logic_error("bad literal rational");
    return *q;
}

// ---- section 1 --------------------------------------------------------

void section1(std::vector<Report>& out, const VerifyOptions& opt) {
    {
        Report r;
        r.claim_id = "prop1.1-classifier-vs-oracle";
        r.paper_value = "divisor-threshold test characterizes integer-trapezoid areas";
        std::vector<std::uint64_t> mismatches;
        for (std::uint64_t n = 1; n <= opt.equivalence_bound; ++n)
            if (classify_prop11(Int(n)).congruent() != has_i_witness(Int(n)))
                mismatches.push_back(n);
        r.computed_value = "0 mismatches for n <= " + std::to_string(opt.equivalence_bound);
        if (!mismatches.empty()) {
            r.status = Status::Fail;
            r.computed_value = std::to_string(mismatches.size()) + " mismatches";
            r.witnesses = mismatches;
        }
        out.push_back(std::move(r));
    }
    {
        Report r;
        r.claim_id = "prop1.1-star-family-complement";
        r.paper_value = "the five-form family is exactly the non-qualifying set";
        auto star = enumerate_star_forms(opt.star_complement_bound);
        std::vector<std::uint64_t> mismatches;
        for (std::uint64_t n = 2; n <= opt.star_complement_bound; ++n)
            if (star.count(n) == classify_prop11(Int(n)).congruent()) mismatches.push_back(n);
        r.computed_value =
            mismatches.empty() ? "exact complement up to " + std::to_string(opt.star_complement_bound)
                               : std::to_string(mismatches.size()) + " mismatches";
        if (!mismatches.empty()) {
            r.status = Status::Fail;
            r.witnesses = mismatches;
        }
        out.push_back(std::move(r));
    }
    {
        Report r;
        r.claim_id = "sec1-intersection-set-le-100";
        r.paper_value = "{" + join_u64(kPaperIntersection) + "}";
        auto got = intersection_set(100);
        r.computed_value = "{" + join_u64(got) + "}";
        if (got != kPaperIntersection) {
            r.status = Status::Fail;
            r.expected_errata = true;
            std::set<std::uint64_t> g(got.begin(), got.end()),
                p(kPaperIntersection.begin(), kPaperIntersection.end());
            for (auto n : g)
                if (!p.count(n)) {
                    json w;
                    w["missing_from_paper"] = n;
                    w["certificates"] = classify_prop11(Int(n));
                    r.witnesses.push_back(w);
                }
            for (auto n : p)
                if (!g.count(n)) r.witnesses.push_back(json{{"extra_in_paper", n}});
        }
        out.push_back(std::move(r));
    }
    {
        Report r;
        r.claim_id = "sec1-noncongruent-count-le-100";
        r.paper_value = "46";
        std::uint64_t c = count_f(100, CountMode::Oracle);
        r.computed_value = std::to_string(c);
        if (c != 46) {
            r.status = Status::Fail;
            r.expected_errata = true;
        }
        out.push_back(std::move(r));
    }
    {
        Report r;
        r.claim_id = "sec1-noncongruent-nonprime-list-le-100";
        r.paper_value = "{" + join_u64(kPaperNonPrimeList) + "} (21 values)";
        std::vector<std::uint64_t> got;
        for (std::uint64_t n = 1; n <= 100; ++n)
            if (!has_i_witness(Int(n)) && !is_prime(Int(n))) got.push_back(n);
        r.computed_value = "{" + join_u64(got) + "} (" + std::to_string(got.size()) + " values)";
        std::set<std::uint64_t> g(got.begin(), got.end()),
            p(kPaperNonPrimeList.begin(), kPaperNonPrimeList.end());
        if (g != p) {
            r.status = Status::Fail;
            r.expected_errata = true;
            for (auto n : p)
                if (!g.count(n)) {
                    json w;
                    w["listed_but_congruent"] = n;
                    w["witnesses"] = witness_oracle(Int(n));
                    r.witnesses.push_back(w);
                }
            for (auto n : g)
                if (!p.count(n)) {
                    json w;
                    w["missing_from_list"] = n;
                    w["oracle_witnesses"] = witness_oracle(Int(n));  // empty: no trapezoid exists
                    r.witnesses.push_back(w);
                }
        }
        out.push_back(std::move(r));
    }
    {
        Report r;
        r.claim_id = "sec1-multi-witness-construction";
        r.paper_value = "n = p_1...p_m n' admits m or more witnesses, n' >= (p_m - 1)^2/4";
        json detail = json::array();
        bool ok = true;
        for (unsigned m = 1; m <= 4; ++m) {
            auto mw = multi_witness(m);
            detail.push_back(json{{"m", m},
                                  {"n", mw.n.get_str()},
                                  {"n_prime", mw.n_prime.get_str()},
                                  {"witnesses", mw.witnesses.size()}});
            if (mw.witnesses.size() < m) ok = false;
        }
        // the literal bound fails at m = 1: n = 2 has no witness at all
        bool m1_literal = !witness_oracle(Int(2)).empty();
        r.computed_value = ok ? "constructed witnesses found (cofactor scanned upward)"
                              : "construction failed";
        r.status = ok ? (m1_literal ? Status::Pass : Status::Note) : Status::Fail;
        r.witnesses = detail;
        if (!m1_literal)
            r.witnesses.push_back(json{{"note", "minimal cofactor for m=1 gives n=2, which has no "
                                                "trapezoid; first working cofactor used"}});
        out.push_back(std::move(r));
    }
    {
        Report r;
        r.claim_id = "prop1.4-d0-list-le-1000";
        r.paper_value = "{" + join_u64(kPaperD0List) + "} (16 distinct, one pair repeated)";
        auto entries = list_d0(1000);
        std::vector<std::uint64_t> got;
        for (const auto& e : entries) got.push_back(e.n);
        r.computed_value = "{" + join_u64(got) + "}";
        std::multiset<std::uint64_t> g(got.begin(), got.end()),
            p(kPaperD0List.begin(), kPaperD0List.end());
        if (g != p) {
            r.status = Status::Fail;
            r.expected_errata = true;
            for (const auto& e : entries)
                if (p.count(e.n) < g.count(e.n)) {
                    json w = e;
                    w["issue"] = "missing from the printed list";
                    r.witnesses.push_back(w);
                }
            // the printed duplicate 60,60 vs the computed duplicate 210,210
            for (const auto& e : entries)
                if (e.n == 210) {
                    json w = e;
                    w["issue"] = "the repeated value is 210, not 60";
                    r.witnesses.push_back(w);
                }
        }
        out.push_back(std::move(r));
    }
    {
        Report r;
        r.claim_id = "sec1-d0-duplicate-210";
        r.paper_value = "triangles (21,20,29) and (35,12,37) share area 210";
        auto entries = list_d0(1000);
        std::vector<json> two;
        for (const auto& e : entries)
            if (e.n == 210) two.push_back(e);
        bool ok = two.size() == 2;
        r.computed_value = std::to_string(two.size()) + " triangles of area 210";
        r.status = ok ? Status::Pass : Status::Fail;
        r.witnesses = two;
        out.push_back(std::move(r));
    }
    {
        Report r;
        r.claim_id = "prop1.4-g-bounds";
        r.paper_value = "sqrt(x)/2 < g(x) <= x^(2/3)/(2 4^(1/3)) + O(x^(5/9))";
        bool ok = true;
        json detail = json::array();
        for (auto x : opt.g_xs) {
            auto g = count_g(x);
            double lo = std::sqrt(static_cast<double>(x)) / 2;
            double hi = std::pow(static_cast<double>(x), 2.0 / 3.0) / (2 * std::cbrt(4.0)) +
                        2 * std::pow(static_cast<double>(x), 5.0 / 9.0);
            bool here = lo < static_cast<double>(g) && static_cast<double>(g) < hi;
            ok = ok && here;
            detail.push_back(json{{"x", x}, {"g", g}, {"lower", lo}, {"upper", hi}, {"ok", here}});
        }
        r.computed_value = ok ? "bounds hold at all sampled x" : "bound violated";
        r.status = ok ? Status::Pass : Status::Fail;
        r.witnesses = detail;
        out.push_back(std::move(r));
    }
    {
        Report r;
        r.claim_id = "thm1.3-asymptotic-window";
        r.paper_value = "f(x) ~ (1 + ln 2) x / log x";
        double ratio = f_ratio(opt.f_x, CountMode::StarForms);
        std::ostringstream os;
        os << "f(" << opt.f_x << ") log x / x = " << ratio << " (target 1.6931...)";
        r.computed_value = os.str();
        bool ok = ratio > 1.2 && ratio < 2.2;
        r.status = ok ? Status::Pass : Status::Fail;
        if (!ok) r.witnesses.push_back(json{{"ratio", ratio}});
        out.push_back(std::move(r));
    }
}

// ---- section 2 --------------------------------------------------------

void section2(std::vector<Report>& out, const VerifyOptions& opt) {
    {
        Report r;
        r.claim_id = "sec2-ratio-quadruple-examples";
        r.paper_value = "three quadruples each for ratio k = n = 2 and k = n = 3";
        bool ok = true;
        for (const auto& e : kPaperKExamples) {
            auto v = validate_trapezoid_k(parse_rat(e.a), parse_rat(e.b), parse_rat(e.c),
                                          parse_rat(e.d), Int(e.n));
            if (!v.ok() || area(*v) != Rat(Int(e.n))) {
                ok = false;
                r.witnesses.push_back(json{{"n", e.n}, {"a", e.a}, {"violations", v.violations}});
            }
        }
        r.computed_value = ok ? "all six validate with the stated areas" : "validation failed";
        r.status = ok ? Status::Pass : Status::Fail;
        out.push_back(std::move(r));
    }
    {
        Report r;
        r.claim_id = "thm1.6-offset-quadruple-examples";
        r.paper_value = "offset witnesses for n = 1, 2, 3 with d = 3n";
        bool ok = true;
        for (const auto& e : kPaperDExamples) {
            auto v = validate_trapezoid_d(parse_rat(e.a), parse_rat(e.b), parse_rat(e.c),
                                          Rat(e.d));
            bool good = v.ok() && area(*v) == Rat(e.n) && thm16_sides(Int(e.n)) == *v;
            if (!good) {
                ok = false;
                r.witnesses.push_back(json{{"n", e.n}, {"a", e.a}});
            }
        }
        r.computed_value = ok ? "all three validate and match the closed forms" : "mismatch";
        r.status = ok ? Status::Pass : Status::Fail;
        out.push_back(std::move(r));
    }
    {
        Report r;
        r.claim_id = "thm1.6-discriminant-convention";
        r.paper_value = "discriminant of the d = 3n curve printed as (4 + 81 n^2) n^6";
        bool ok = true;
        for (std::uint64_t n = 1; n <= opt.thm16_n_max && ok; ++n) {
            Int ni(n);
            auto C = d_curves(ni, 3 * ni);
            Rat expect = Rat(16 * pow_int(ni, 6) * (4 + 81 * ni * ni));
            ok = discriminant(C.E) == expect;
        }
        r.computed_value =
            "computed -16(4A^3 + 27B^2) = 16 n^6 (4 + 81 n^2); printed value omits the factor 16";
        r.status = ok ? Status::Note : Status::Fail;
        out.push_back(std::move(r));
    }
    {
        Report r;
        r.claim_id = "thm1.6-base-point";
        r.paper_value = "(-6n^2, 3n^2) lies on the d = 3n curve";
        bool ok = true;
        for (std::uint64_t n = 1; n <= opt.thm16_n_max && ok; ++n) {
            Int ni(n);
            ok = named_points(ni, 3 * ni).P.has_value();
        }
        r.computed_value = ok ? "verified for n <= " + std::to_string(opt.thm16_n_max) : "failed";
        r.status = ok ? Status::Pass : Status::Fail;
        out.push_back(std::move(r));
    }
    {
        Report r;
        r.claim_id = "thm1.6-double-closed-form";
        r.paper_value = "[2]P = ((27n^2+1)(243n^2+1)/36, -(81n^2+1)(6561n^4+324n^2-1)/216)";
        bool ok = true;
        for (std::uint64_t n = 1; n <= opt.thm16_n_max && ok; ++n) {
            Int ni(n);
            Int n2 = ni * ni;
            auto C = d_curves(ni, 3 * ni);
            PointQ P(Rat(-6 * n2), Rat(3 * n2));
            PointQ expect(Rat((27 * n2 + 1) * (243 * n2 + 1), Int(36)),
                          Rat(-(81 * n2 + 1) * (6561 * n2 * n2 + 324 * n2 - 1), Int(216)));
            ok = dbl(C.E, P) == expect;
        }
        r.computed_value = ok ? "group law reproduces the closed form" : "mismatch";
        r.status = ok ? Status::Pass : Status::Fail;
        out.push_back(std::move(r));
    }
    {
        Report r;
        r.claim_id = "thm1.6-double-nonintegral";
        r.paper_value = "x([2]P) is never an integer";
        std::vector<std::uint64_t> bad;
        for (std::uint64_t n = 1; n <= opt.nonintegral_n_max; ++n) {
            Int ni(n);
            auto C = d_curves(ni, 3 * ni);
            PointQ P(Rat(-6 * ni * ni), Rat(3 * ni * ni));
            if (is_integral(dbl(C.E, P))) bad.push_back(n);
        }
        r.computed_value = bad.empty()
                               ? "non-integral for n <= " + std::to_string(opt.nonintegral_n_max)
                               : "integral instances found";
        r.status = bad.empty() ? Status::Pass : Status::Fail;
        if (!bad.empty()) r.witnesses = bad;
        out.push_back(std::move(r));
    }
    {
        Report r;
        r.claim_id = "thm1.6-double-infinite-order";
        r.paper_value = "[2]P has infinite order for n >= 4";
        std::vector<std::uint64_t> bad;
        for (std::uint64_t n = 1; n <= opt.thm16_n_max; ++n) {
            Int ni(n);
            auto C = d_curves(ni, 3 * ni);
            PointQ P(Rat(-6 * ni * ni), Rat(3 * ni * ni));
            if (!has_infinite_order(C.E, dbl(C.E, P))) bad.push_back(n);
        }
        r.computed_value = bad.empty() ? "infinite order for every n >= 1 (torsion-bound test)"
                                       : "torsion instances found";
        r.status = bad.empty() ? Status::Pass : Status::Fail;
        if (!bad.empty()) r.witnesses = bad;
        out.push_back(std::move(r));
    }
    {
        Report r;
        r.claim_id = "thm1.6-side-formulas";
        r.paper_value = "closed-form sides for d = 3n; printed c-numerator reads (9-6d^2)x^2 + ...";
        bool ok = true;
        for (std::uint64_t n = 1; n <= opt.thm16_n_max && ok; ++n) {
            auto t = thm16_sides(Int(n));  // validates and cross-checks internally
            ok = area(t) == Rat(Int(n));
        }
        r.computed_value =
            "sides valid and equal to the point pipeline for n <= " +
            std::to_string(opt.thm16_n_max) +
            "; c-numerator implemented as 9x^2 - 6d^2x + d^4 + 9n^2, forced by a^2 + b^2 = c^2";
        r.status = ok ? Status::Note : Status::Fail;
        out.push_back(std::move(r));
    }
}

// ---- section 3 --------------------------------------------------------

void section3(std::vector<Report>& out, const VerifyOptions& opt) {
    {
        Report r;
        r.claim_id = "eq3.1-integer-points";
        r.paper_value = "the ratio curve has four integer points (torsion plus infinity)";
        // the three listed finite points are 2-torsion and lie on the curve,
        // but further integer points exist, e.g. (12, 36) on the (2,2) curve
        CurveQ E = curve_k(2, 2);
        bool listed_ok = on_curve(E, PointQ(Rat(0), Rat(0))) &&
                         on_curve(E, PointQ(Rat(6), Rat(0))) && on_curve(E, PointQ(Rat(-6), Rat(0)));
        PointQ extra(Rat(12), Rat(36));
        bool extra_integral = on_curve(E, extra) && is_integral(extra);
        r.computed_value = listed_ok
                               ? "listed torsion points verified; additional integer points exist"
                               : "listed points fail";
        r.status = listed_ok ? Status::Note : Status::Fail;
        if (extra_integral)
            r.witnesses.push_back(json{{"curve", "n=2, k=2"}, {"integer_point", extra}});
        out.push_back(std::move(r));
    }
    {
        Report r;
        r.claim_id = "eq3.2-quartic-family";
        r.paper_value = "alpha^4 - beta^4 is a congruent number (witness triangle exists)";
        bool ok = true;
        for (Int a = 2; a <= 30 && ok; ++a)
            for (Int b = 1; b < a && ok; ++b) {
                auto [m, tri] = quartic_triangle(a, b);
                ok = area(tri) == Rat(m);
            }
        r.computed_value = ok ? "triangle identity exact for all alpha > beta in [1, 30]"
                              : "identity failed";
        r.status = ok ? Status::Pass : Status::Fail;
        out.push_back(std::move(r));
    }
    {
        Report r;
        r.claim_id = "prop3.1-ratio-witnesses";
        r.paper_value = "n = k^2 + 1 is expressible for every fixed k (proof text puts alpha = k^2)";
        bool ok = true;
        for (Int k = 2; k <= 10 && ok; ++k) {
            auto [n, t] = prop31_witness(k);
            ok = area(t) == Rat(n) && t.k == k;
        }
        r.computed_value =
            "chain valid for k = 2..10 with alpha = k (alpha = k^2 would give n = k^6+k^4+k^2+1)";
        r.status = ok ? Status::Note : Status::Fail;
        out.push_back(std::move(r));
    }
    {
        Report r;
        r.claim_id = "sec3-cubic-identity";
        r.paper_value = "n(k^2-1) = m^3 - m has solutions (n,n), (8n-3,4n-1), (8n+3,4n+1)";
        bool ok = true;
        for (std::uint64_t n = 1; n <= 1000 && ok; ++n) {
            auto sols = cubic_identity_solutions(Int(n));
            for (const auto& [k, m] : sols)
                ok = ok && (Int(n) * (k * k - 1) == m * m * m - m);
        }
        r.computed_value = ok ? "all three pairs verified for n = 1..1000" : "identity failed";
        r.status = ok ? Status::Pass : Status::Fail;
        out.push_back(std::move(r));
    }
    // Pell families, one report per (lambda, n)
    for (const auto& [lam, ns] : kPaperPellFamilies) {
        for (auto n : ns) {
            Report r;
            r.claim_id = "sec3-pell-lambda" + std::to_string(lam) + "-n" + std::to_string(n);
            r.paper_value = "the reduced Pell equation has infinitely many solutions and yields "
                            "ratios k for n = " + std::to_string(n);
            auto prob = pell_reduce(Int(n), Int(lam));
            auto sols = pell_solve(prob, opt.pell_want);
            std::size_t mapped = 0;
            json detail = json::array();
            for (const auto& [alpha, beta] : sols.pairs) {
                auto k = pell_to_k(Int(n), Int(lam), alpha, beta);
                if (k) ++mapped;
                detail.push_back(json{{"alpha", alpha.get_str()},
                                      {"beta", beta.get_str()},
                                      {"k", k ? k->get_str() : "none"}});
            }
            bool enough = sols.pairs.size() >= opt.pell_want;
            bool all_map = mapped > 0;
            std::ostringstream os;
            os << sols.pairs.size() << " solutions, " << mapped << " map to integer ratios";
            r.computed_value = os.str();
            r.witnesses = detail;
            if (enough && all_map) {
                r.status = Status::Pass;
            } else {
                r.status = Status::Fail;
                // (2,52) and (3,45): solutions exist but none maps to an
                // integer ratio; a parity obstruction rules the mapping out
                r.expected_errata = (lam == 2 && n == 52) || (lam == 3 && n == 45);
            }
            out.push_back(std::move(r));
        }
    }
    {
        Report r;
        r.claim_id = "sec3-table-rows";
        r.paper_value = "printed quartic solutions (k, alpha, beta) for 1 < n <= 10";
        bool ok = true;
        for (const auto& [n, rows] : kPaperTable) {
            auto got = quartic_search(Int(n), Int(static_cast<unsigned long>(opt.table_k_max)));
            std::set<std::array<std::uint64_t, 3>> gs, ps;
            for (const auto& row : got)
                gs.insert({to_u64(row.k, "table"), to_u64(row.alpha, "table"),
                           to_u64(row.beta, "table")});
            for (const auto& row : rows) ps.insert({row.k, row.alpha, row.beta});
            if (gs != ps) {
                ok = false;
                json w;
                w["n"] = n;
                for (const auto& e : gs)
                    if (!ps.count(e))
                        w["missing_from_table"].push_back(json{{"k", e[0]}, {"alpha", e[1]}, {"beta", e[2]}});
                for (const auto& e : ps)
                    if (!gs.count(e))
                        w["not_found"].push_back(json{{"k", e[0]}, {"alpha", e[1]}, {"beta", e[2]}});
                r.witnesses.push_back(w);
            }
        }
        r.computed_value = ok ? "search reproduces every row set exactly (k <= " +
                                    std::to_string(opt.table_k_max) + ")"
                              : "row sets differ";
        r.status = ok ? Status::Pass : Status::Fail;
        out.push_back(std::move(r));
    }
    {
        Report r;
        r.claim_id = "cor3.3-counting-criterion";
        r.paper_value = "form counts agree exactly for areas of expressible n, fail otherwise";
        // spot checks on classical values: 5, 6, 7 consistent; 1, 2, 3, 10 not
        bool ok = true;
        json detail = json::array();
        auto probe = [&](std::uint64_t m, bool expect) {
            std::uint64_t c1, c2;
            if (m % 2) {
                c1 = count_ternary(TernaryForm::F1, m);
                c2 = count_ternary(TernaryForm::F2, m);
            } else {
                c1 = count_ternary(TernaryForm::F3, m);
                c2 = count_ternary(TernaryForm::F4, m);
            }
            bool consistent = c1 == 2 * c2;
            detail.push_back(json{{"m", m}, {"count_base", c1}, {"count_double", c2},
                                  {"consistent", consistent}});
            if (consistent != expect) ok = false;
        };
        for (auto m : {5, 6, 7}) probe(m, true);
        for (auto m : {1, 2, 3, 10}) probe(m, false);
        r.computed_value = ok ? "counts match the classical expressibility pattern"
                              : "unexpected counting pattern";
        r.status = ok ? Status::Pass : Status::Fail;
        r.witnesses = detail;
        out.push_back(std::move(r));
    }
}

// ---- section 4 --------------------------------------------------------

void section4(std::vector<Report>& out, const VerifyOptions& opt) {
    {
        Report r;
        r.claim_id = "prop4.1-named-points";
        r.paper_value = "Q, R lie on the integral model; [2]Q matches the printed closed form";
        bool ok = true;
        for (std::uint64_t n = 1; n <= opt.prop41_grid && ok; ++n)
            for (std::uint64_t d = 1; d <= opt.prop41_grid && ok; ++d) {
                auto pts = named_points(Int(n), Int(d));  // throws on any failure
                (void)pts;
            }
        r.computed_value = ok ? "verified on the full grid" : "failure";
        r.status = ok ? Status::Pass : Status::Fail;
        out.push_back(std::move(r));
    }
    {
        Report r;
        r.claim_id = "prop4.1-S-coordinates";
        r.paper_value = "printed S lies on the curve for n != d^2";
        bool ok = true;
        for (std::uint64_t n = 1; n <= opt.prop41_grid && ok; ++n)
            for (std::uint64_t d = 1; d <= opt.prop41_grid && ok; ++d) {
                if (Int(n) == Int(d) * Int(d)) continue;
                ok = named_points(Int(n), Int(d)).S.has_value();
            }
        r.computed_value = ok ? "on-curve on the full grid" : "failure";
        r.status = ok ? Status::Pass : Status::Fail;
        out.push_back(std::move(r));
    }
    {
        Report r;
        r.claim_id = "prop4.1-S-chord-description";
        r.paper_value = "S described as the third intersection of the line through Q and R";
        // Q and R share their y-coordinate, so the literal third intersection
        // is (3d^2 + 9n, 27dn), which differs from the printed S.
        Int n = 2, d = 1;
        auto C = d_curves(n, d);
        auto pts = named_points(n, d);
        PointQ literal = chord_third(C.Eprime, pts.Q, pts.R);
        bool differs = !(literal == *pts.S);
        r.computed_value = "literal chord point is " + literal.str() + ", printed S is " +
                           pts.S->str() + "; the printed coordinates are taken as authoritative";
        r.status = differs ? Status::Note : Status::Pass;
        r.witnesses.push_back(json{{"chord_third", literal}, {"printed_S", *pts.S}});
        out.push_back(std::move(r));
    }
    {
        Report r;
        r.claim_id = "prop4.1-sides";
        r.paper_value = "closed-form sides from S (n > d^2) and -S (n < d^2)";
        bool ok = true;
        for (std::uint64_t n = 1; n <= opt.prop41_grid && ok; ++n)
            for (std::uint64_t d = 1; d <= opt.prop41_grid && ok; ++d) {
                if (Int(n) == Int(d) * Int(d)) continue;
                auto t = prop41_sides(Int(n), Int(d));  // validates + pipeline cross-check
                ok = area(t) == Rat(Int(n));
            }
        r.computed_value =
            ok ? "valid and equal to the point pipeline on the grid; the printed c of the -S "
                 "branch carries a stray factor 2 (corrected form forced by a^2+b^2=c^2)"
               : "failure";
        r.status = ok ? Status::Note : Status::Fail;
        out.push_back(std::move(r));
    }
    {
        Report r;
        r.claim_id = "prop4.1-offset1-family";
        r.paper_value = "for d = 1 every n >= 2 works, with printed sides";
        bool ok = true;
        for (std::uint64_t n = 2; n <= opt.prop41_grid && ok; ++n) {
            Int ni(n);
            Rat a(2 * (ni * ni + 1), (ni - 1) * (ni + 1));
            Rat b((ni - 1) * (ni + 1), 2 * ni);
            Rat c(pow_int(ni, 4) + 6 * ni * ni + 1, 2 * (ni - 1) * (ni + 1) * ni);
            ok = prop41_sides(ni, 1) == TrapezoidD{a, b, c, Rat(1)};
        }
        r.computed_value = ok ? "printed family matches the general closed form" : "mismatch";
        r.status = ok ? Status::Pass : Status::Fail;
        out.push_back(std::move(r));
    }
    {
        Report r;
        r.claim_id = "prop4.2-all-offsets";
        r.paper_value = "for every n, all offsets d with d^2 != n admit a witness";
        bool ok = true;
        json detail = json::array();
        for (std::uint64_t n = 1; n <= 12 && ok; ++n) {
            auto entries = search_with_fixed_n(Int(n), Int(8));
            for (const auto& e : entries) {
                if (e.source == "skip") {
                    detail.push_back(json{{"n", n}, {"d", e.d.get_str()}, {"skipped", true}});
                    continue;
                }
                ok = ok && e.witness.has_value() && area(*e.witness) == Rat(Int(n));
            }
        }
        r.computed_value = ok ? "witness for every admissible offset (n <= 12, d <= 8)" : "failure";
        r.status = ok ? Status::Pass : Status::Fail;
        r.witnesses = detail;
        out.push_back(std::move(r));
    }
    {
        Report r;
        r.claim_id = "remark4.3-j-invariants";
        r.paper_value = "ratio curves all have j = 1728; offset curves vary with n";
        bool ok = true;
        for (std::uint64_t n = 1; n <= 10 && ok; ++n)
            for (std::uint64_t k = 2; k <= 10 && ok; ++k)
                ok = j_invariant(curve_k(Int(n), Int(k))) == Rat(1728);
        std::set<std::string> js;
        for (std::uint64_t n = 1; n <= 3; ++n)
            js.insert(j_invariant(d_curves(Int(n), 1).E).str());
        bool varies = js.size() >= 2;
        r.computed_value = ok && varies
                               ? "j = 1728 on the ratio grid; distinct offset-curve j at d = 1"
                               : "unexpected j-invariant behaviour";
        r.status = (ok && varies) ? Status::Pass : Status::Fail;
        out.push_back(std::move(r));
    }
}

}  // namespace

std::vector<Report> verify_paper(Scope scope, const VerifyOptions& opt) {
    std::vector<Report> out;
    if (scope == Scope::All || scope == Scope::Section1) section1(out, opt);
    if (scope == Scope::All || scope == Scope::Section2) section2(out, opt);
    if (scope == Scope::All || scope == Scope::Section3) section3(out, opt);
    if (scope == Scope::All || scope == Scope::Section4) section4(out, opt);
    return out;
}

}  // namespace trapcong
