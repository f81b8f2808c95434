#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "trapcong/model.hpp"

namespace trapcong {

// Generator pair for primitive Pythagorean triples: x > y >= 1, coprime,
// opposite parity. Legs are {2xy, x^2 - y^2}, hypotenuse x^2 + y^2.
struct PythParam {
    std::uint64_t x, y;
};

// Divisor-threshold classification of integer-trapezoid areas: n qualifies
// iff some odd prime p | n has cofactor n/p >= (p^2-1)/4, or the odd part
// k of n = 2^i k (i >= 1) satisfies k >= 2^(2i) - 1. Both certificates are
// reported when both exist.
struct Prop11Certificate {
    std::optional<std::pair<Int, Int>> odd_prime;       // (p, n/p)
    std::optional<std::pair<unsigned, Int>> two_power;  // (i, n/2^i)
    bool congruent() const { return odd_prime.has_value() || two_power.has_value(); }
};

Prop11Certificate classify_prop11(const Int& n);

// Complete list of integer right trapezoids of area n, by exhausting the
// Pythagorean parametrization. Empty means n is not i-congruent. This is
// the ground truth the printed lists are compared against.
std::vector<TrapezoidI> witness_oracle(const Int& n);

// Early-exit variant of witness_oracle(n) != empty.
bool has_i_witness(const Int& n);

// The five-form family characterizing the non-qualifying integers.
struct IForm {
    enum class Tag { Prime, PrimeSquared, PrimeProduct, TwoPower, TwoPowerPrime } tag;
    std::uint64_t p = 0;  // Prime, PrimeSquared, PrimeProduct, TwoPowerPrime
    std::uint64_t q = 0;  // PrimeProduct
    unsigned i = 0;       // TwoPower, TwoPowerPrime
    std::string str() const;
};

// Every n <= x matching at least one form, with all matching forms.
std::map<std::uint64_t, std::vector<IForm>> enumerate_star_forms(std::uint64_t x);

enum class CountMode { Oracle, StarForms };

// Number of n <= x that are NOT i-congruent, under the chosen ground truth.
std::uint64_t count_f(std::uint64_t x, CountMode mode);

// count_f(x) * log(x) / x, for comparison against 1 + ln 2.
double f_ratio(std::uint64_t x, CountMode mode);

// Degenerate (d = 0) areas n = s t (s^2 - t^2) over pairs s > t >= 1 whose
// coprime parts have opposite parity; the associated right triangle has
// legs (2 s t, s^2 - t^2) and hypotenuse s^2 + t^2 (a square multiple of a
// primitive triple when gcd(s, t) > 1).
struct D0Entry {
    std::uint64_t s, t;
    std::uint64_t n;
    std::uint64_t leg_a, leg_b, hyp;  // 2st, s^2 - t^2, s^2 + t^2
};

// Multiset over admissible pairs, ordered by (n, s, t).
std::vector<D0Entry> list_d0(std::uint64_t x);
std::uint64_t count_g(std::uint64_t x);

// n <= x admitting both an odd-prime certificate and a power-of-two
// certificate.
std::vector<std::uint64_t> intersection_set(std::uint64_t x);

struct MultiWitness {
    Int n;
    Int n_prime;  // the chosen cofactor
    std::vector<TrapezoidI> witnesses;
};

// Smallest n = p_1 ... p_m n' (n' scanned upward from max(1, (p_m-1)^2/4))
// whose oracle list has at least m distinct members. Throws if no n' below
// `bound` works; the construction guarantees one for every m in practice.
MultiWitness multi_witness(unsigned m, std::uint64_t bound = 1u << 20);

}  // namespace trapcong
