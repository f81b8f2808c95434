#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace trapcong {

// Exact arbitrary-precision integer. All library arithmetic is exact; the
// magnitudes reached by the curve pipelines (degree-8 expressions in inputs
// up to 1e6) are far within range.
using Int = mpz_class;

// gcd(0, 0) == 0; result is always non-negative.
Int gcd(const Int& a, const Int& b);

// Floor of the square root. Throws std::domain_error for negative input.
Int isqrt(const Int& n);

bool is_square(const Int& n);

// sqrt(n) when n is a perfect square, nullopt otherwise.
std::optional<Int> exact_sqrt(const Int& n);

// Floor of the k-th root (k >= 1); exact flag via exact_kth_root.
std::optional<Int> exact_kth_root(const Int& n, unsigned k);

// Deterministic below 2^64 (strong-pseudoprime test over a proven base
// set); trial division above, which is plenty for the workloads here.
bool is_prime(const Int& n);

std::vector<std::uint64_t> primes_up_to(std::uint64_t x);

// Prime factorization as (prime, exponent) pairs in increasing prime order.
// Trial division up to 1e6 followed by Pollard rho. Throws for n < 1.
std::vector<std::pair<Int, unsigned>> factorize(const Int& n);

// 2-adic valuation; v2(0) is an error.
unsigned v2(const Int& n);

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Narrowing helper for enumeration entry points that run in machine words.
std::uint64_t to_u64(const Int& n, const char* what);

}  // namespace trapcong
