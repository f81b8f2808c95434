#include "trapcong/arith.hpp"

#include <algorithm>

namespace trapcong {

Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt: negative argument");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_square(const Int& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

std::optional<Int> exact_sqrt(const Int& n) {
    if (!is_square(n)) return std::nullopt;
    return isqrt(n);
}

std::optional<Int> exact_kth_root(const Int& n, unsigned k) {
    if (k == 0) throw std::domain_error("exact_kth_root: k == 0");
    if (n < 0 && k % 2 == 0) return std::nullopt;
    Int r;
    int exact = mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    if (!exact) return std::nullopt;
    return r;
}

unsigned v2(const Int& n) {
    if (n == 0) throw std::domain_error("v2(0)");
    return static_cast<unsigned>(mpz_scan1(n.get_mpz_t(), 0));
}

std::uint64_t to_u64(const Int& n, const char* what) {
    if (n < 0 || !n.fits_ulong_p())
        throw std::domain_error(std::string(what) + ": argument out of supported range");
    return n.get_ui();
}

namespace {

// Strong-pseudoprime check for odd n > 2 to base a (a reduced mod n).
bool strong_probable_prime(const Int& n, unsigned long a) {
    Int base = Int(a) % n;
    if (base == 0) return true;
    Int d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    d >>= s;
    Int x;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return true;
        if (x == 1) return false;
    }
    return false;
}

}  // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    if (n.fits_ulong_p() || mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
        // Deterministic for n < 3.3e24, which covers the 64-bit range.
        for (unsigned long a : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul})
            if (!strong_probable_prime(n, a)) return false;
        return true;
    }
    Int d = 41;
    while (d * d <= n) {
        if (n % d == 0) return false;
        d += 2;
    }
    return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t x) {
    std::vector<std::uint64_t> out;
    if (x < 2) return out;
    std::vector<bool> composite(x + 1, false);
    for (std::uint64_t i = 2; i * i <= x; ++i)
        if (!composite[i])
            for (std::uint64_t j = i * i; j <= x; j += i) composite[j] = true;
    for (std::uint64_t i = 2; i <= x; ++i)
        if (!composite[i]) out.push_back(i);
    return out;
}

namespace {

Int pollard_rho(const Int& n) {
    // Brent's variant; n must be odd composite with no small factors.
    for (unsigned long c = 1;; ++c) {
        Int x = 2, y = 2, d = 1;
        Int diff;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            diff = x - y;
            if (diff == 0) break;
            d = gcd(diff, n);
        }
        if (d != 0 && d != 1 && d != n) return d;
    }
}

void factor_rec(Int n, std::vector<Int>& primes) {
    if (n == 1) return;
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    Int d = pollard_rho(n);
    factor_rec(d, primes);
    factor_rec(n / d, primes);
}

}  // namespace

std::vector<std::pair<Int, unsigned>> factorize(const Int& n) {
    if (n < 1) throw std::domain_error("factorize: argument must be >= 1");
    std::vector<std::pair<Int, unsigned>> out;
    Int m = n;
    auto push = [&out](const Int& p) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.emplace_back(p, 1);
    };
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        while (m % p == 0) {
            push(Int(static_cast<unsigned long>(p)));
            m /= static_cast<unsigned long>(p);
        }
    }
    // wheel over 7, 11, ... up to 1e6
    std::uint64_t d = 7;
    static const int steps[8] = {4, 2, 4, 2, 4, 6, 2, 6};
    int si = 0;
    while (d <= 1000000 && Int(static_cast<unsigned long>(d)) * static_cast<unsigned long>(d) <= m) {
        while (m % static_cast<unsigned long>(d) == 0) {
            push(Int(static_cast<unsigned long>(d)));
            m /= static_cast<unsigned long>(d);
        }
        d += steps[si];
        si = (si + 1) % 8;
    }
    if (m > 1) {
        if (Int(static_cast<unsigned long>(std::min<std::uint64_t>(d, 1000001))) *
                static_cast<unsigned long>(std::min<std::uint64_t>(d, 1000001)) > m ||
            is_prime(m)) {
            push(m);
        } else {
            std::vector<Int> primes;
            factor_rec(m, primes);
            std::sort(primes.begin(), primes.end());
            for (const Int& p : primes) push(p);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

}  // namespace trapcong
