#include "trapcong/icong.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace trapcong {

namespace {

constexpr std::uint64_t kEnumCap = 1000000000000000ull;  // 1e15, keeps u64 loops safe

std::uint64_t checked_u64(const Int& n, const char* what) {
    std::uint64_t v = to_u64(n, what);
    if (v > kEnumCap) throw std::domain_error(std::string(what) + ": argument above 1e15");
    return v;
}

// Visits each admissible (x, y) pair and both landing cases for area n.
// The callback returns false to stop early.
template <typename F>
void for_each_witness(std::uint64_t n, F&& visit) {
    if (n == 0) return;
    for (std::uint64_t x = 2; x * (x * x - 1) <= n; ++x) {
        for (std::uint64_t y = 1; y < x; ++y) {
            if ((x + y) % 2 == 0) continue;
            if (std::gcd(x, y) != 1) continue;
            std::uint64_t diff = x * x - y * y;
            std::uint64_t prod = x * y;
            if (prod > n / diff) continue;  // prod * diff > n, without overflow
            std::uint64_t hyp = x * x + y * y;
            // height = x^2 - y^2
            if (n % diff == 0) {
                std::uint64_t k = n / diff;
                if (k >= prod)
                    if (!visit(k + prod, k - prod, diff, hyp)) return;
            }
            // height = 2xy
            if (n % prod == 0) {
                std::uint64_t k = n / prod;
                if (k % 2 == 1 && k >= diff)
                    if (!visit((k + diff) / 2, (k - diff) / 2, 2 * prod, hyp)) return;
            }
        }
    }
}

}  // namespace

Prop11Certificate classify_prop11(const Int& n) {
    if (n < 1) throw std::invalid_argument("classify_prop11: n >= 1 required");
    Prop11Certificate cert;
    if (mpz_even_p(n.get_mpz_t())) {
        unsigned i = v2(n);
        Int k = n >> i;
        Int threshold = (Int(1) << (2 * i)) - 1;
        if (k >= threshold) cert.two_power = {i, k};
    }
    Int odd_part = n >> (n == 0 ? 0 : mpz_scan1(n.get_mpz_t(), 0));
    if (odd_part > 1) {
        for (const auto& [p, e] : factorize(odd_part)) {
            (void)e;
            // k >= (p^2 - 1)/4, compared exactly as 4k >= p^2 - 1
            if (4 * (n / p) >= p * p - 1) {
                cert.odd_prime = {p, n / p};
                break;
            }
        }
    }
    return cert;
}

std::vector<TrapezoidI> witness_oracle(const Int& n) {
    if (n < 1) throw std::invalid_argument("witness_oracle: n >= 1 required");
    std::uint64_t nu = checked_u64(n, "witness_oracle");
    std::set<std::array<std::uint64_t, 4>> seen;
    for_each_witness(nu, [&](std::uint64_t a, std::uint64_t d, std::uint64_t b, std::uint64_t c) {
        seen.insert({a, b, c, d});
        return true;
    });
    std::vector<TrapezoidI> out;
    out.reserve(seen.size());
    for (const auto& [a, b, c, d] : seen) {
        auto v = validate_trapezoid_i(Int(a), Int(b), Int(c), Int(d));
        if (!v.ok()) throw std::logic_error("witness_oracle: produced an invalid trapezoid");
        out.push_back(*v);
    }
    return out;
}

bool has_i_witness(const Int& n) {
    if (n < 1) throw std::invalid_argument("has_i_witness: n >= 1 required");
    std::uint64_t nu = checked_u64(n, "has_i_witness");
    bool found = false;
    for_each_witness(nu, [&](std::uint64_t, std::uint64_t, std::uint64_t, std::uint64_t) {
        found = true;
        return false;
    });
    return found;
}

namespace {

// 2^(1+i/2) < p < 2^(2i) - 1, shift-safe for large i.
bool in_two_power_window(std::uint64_t p, unsigned i) {
    if (i + 2 < 64) {
        if (!(static_cast<unsigned __int128>(p) * p > (1ull << (i + 2)))) return false;
    }
    if (2 * i < 64) {
        if (!(p < (1ull << (2 * i)) - 1)) return false;
    }
    return true;
}

}  // namespace

std::string IForm::str() const {
    switch (tag) {
        case Tag::Prime: return "p=" + std::to_string(p);
        case Tag::PrimeSquared: return "p^2, p=" + std::to_string(p);
        case Tag::PrimeProduct: return "pq, p=" + std::to_string(p) + ", q=" + std::to_string(q);
        case Tag::TwoPower: return "2^" + std::to_string(i);
        case Tag::TwoPowerPrime: return "2^" + std::to_string(i) + " p, p=" + std::to_string(p);
    }
    return "?";
}

std::map<std::uint64_t, std::vector<IForm>> enumerate_star_forms(std::uint64_t x) {
    if (x < 1) throw std::invalid_argument("enumerate_star_forms: x >= 1 required");
    std::map<std::uint64_t, std::vector<IForm>> out;
    auto add = [&out](std::uint64_t n, IForm f) { out[n].push_back(f); };
    auto primes = primes_up_to(x);
    std::vector<bool> is_p(x + 1, false);
    for (auto p : primes) is_p[p] = true;

    for (auto p : primes) add(p, {IForm::Tag::Prime, p, 0, 0});
    for (auto p : primes) {
        if (p * p > x) break;
        if (p != 3) add(p * p, {IForm::Tag::PrimeSquared, p, 0, 0});
    }
    for (auto p : primes) {
        if (p <= 5) continue;
        if (p * p >= x) break;
        // q ranges over primes with p < q < (p^2 - 1)/4 and pq <= x
        std::uint64_t qmax = std::min(x / p, (p * p - 2) / 4);
        for (std::uint64_t q = p + 1; q <= qmax; ++q)
            if (is_p[q] && 4 * q < p * p - 1) add(p * q, {IForm::Tag::PrimeProduct, p, q, 0});
    }
    for (unsigned i = 0; (1ull << i) <= x; ++i) add(1ull << i, {IForm::Tag::TwoPower, 0, 0, i});
    for (unsigned i = 2; (1ull << i) <= x; ++i) {
        std::uint64_t pw = 1ull << i;
        for (std::uint64_t p = 3; p <= x / pw; p += 2)
            if (is_p[p] && in_two_power_window(p, i)) add(pw * p, {IForm::Tag::TwoPowerPrime, p, 0, i});
    }
    return out;
}

namespace {

std::uint64_t count_star_forms(std::uint64_t x) {
    std::vector<bool> mark(x + 1, false);
    auto primes = primes_up_to(x);
    std::vector<bool> is_p(x + 1, false);
    for (auto p : primes) is_p[p] = true;
    for (auto p : primes) mark[p] = true;
    for (auto p : primes) {
        if (p * p > x) break;
        if (p != 3) mark[p * p] = true;
    }
    for (auto p : primes) {
        if (p <= 5) continue;
        if (p * p >= x) break;
        std::uint64_t qmax = std::min(x / p, (p * p - 2) / 4);
        for (std::uint64_t q = p + 1; q <= qmax; ++q)
            if (is_p[q] && 4 * q < p * p - 1) mark[p * q] = true;
    }
    for (unsigned i = 0; (1ull << i) <= x; ++i) mark[1ull << i] = true;
    for (unsigned i = 2; (1ull << i) <= x; ++i) {
        std::uint64_t pw = 1ull << i;
        for (std::uint64_t p = 3; p <= x / pw; p += 2)
            if (is_p[p] && in_two_power_window(p, i)) mark[pw * p] = true;
    }
    std::uint64_t c = 0;
    for (std::uint64_t n = 1; n <= x; ++n)
        if (mark[n]) ++c;
    return c;
}

}  // namespace

std::uint64_t count_f(std::uint64_t x, CountMode mode) {
    if (x < 2) throw std::invalid_argument("count_f: x >= 2 required");
    if (mode == CountMode::StarForms) return count_star_forms(x);
    std::uint64_t c = 0;
    for (std::uint64_t n = 1; n <= x; ++n)
        if (!has_i_witness(Int(n))) ++c;
    return c;
}

double f_ratio(std::uint64_t x, CountMode mode) {
    return static_cast<double>(count_f(x, mode)) * std::log(static_cast<double>(x)) /
           static_cast<double>(x);
}

std::vector<D0Entry> list_d0(std::uint64_t x) {
    if (x < 1) throw std::invalid_argument("list_d0: x >= 1 required");
    std::vector<D0Entry> out;
    for (std::uint64_t s = 2; s * (s * s - 1) <= x; ++s) {
        for (std::uint64_t t = 1; t < s; ++t) {
            std::uint64_t g = std::gcd(s, t);
            if ((s / g + t / g) % 2 == 0) continue;
            std::uint64_t n = s * t * (s * s - t * t);
            if (n <= x)
                out.push_back({s, t, n, 2 * s * t, s * s - t * t, s * s + t * t});
        }
    }
    std::sort(out.begin(), out.end(), [](const D0Entry& a, const D0Entry& b) {
        return std::tie(a.n, a.s, a.t) < std::tie(b.n, b.s, b.t);
    });
    return out;
}

std::uint64_t count_g(std::uint64_t x) { return list_d0(x).size(); }

std::vector<std::uint64_t> intersection_set(std::uint64_t x) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 2; n <= x; n += 2) {
        auto cert = classify_prop11(Int(n));
        if (cert.odd_prime && cert.two_power) out.push_back(n);
    }
    return out;
}

MultiWitness multi_witness(unsigned m, std::uint64_t bound) {
    if (m < 1) throw std::invalid_argument("multi_witness: m >= 1 required");
    auto primes = primes_up_to(1u << 10);
    if (primes.size() < m) throw std::invalid_argument("multi_witness: m too large");
    Int base = 1;
    for (unsigned j = 0; j < m; ++j) base *= static_cast<unsigned long>(primes[j]);
    Int pm(static_cast<unsigned long>(primes[m - 1]));
    Int start = ((pm - 1) * (pm - 1) + 3) / 4;  // ceil((p_m - 1)^2 / 4)
    if (start < 1) start = 1;
    for (Int np = start; np <= Int(static_cast<unsigned long>(bound)); ++np) {
        Int n = base * np;
        auto ws = witness_oracle(n);
        if (ws.size() >= m) return {n, np, std::move(ws)};
    }
    throw std::runtime_error("multi_witness: no admissible cofactor below bound");
}

}  // namespace trapcong
