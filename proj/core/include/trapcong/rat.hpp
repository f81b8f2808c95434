#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "trapcong/arith.hpp"

namespace trapcong {

// Exact rational in lowest terms with positive denominator. Canonical form
// is established on construction and maintained by every operation, so
// equality is plain coordinate equality.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(long v) : q_(v) {}                 // NOLINT(google-explicit-constructor)
    Rat(const Int& v) : q_(v) {}           // NOLINT(google-explicit-constructor)
    // exact-match overload for gmp integer expression templates
    template <typename U>
    Rat(const __gmp_expr<mpz_t, U>& e) : q_(Int(e)) {}  // NOLINT
    Rat(const Int& num, const Int& den);
    explicit Rat(const mpq_class& q);

    const Int& num() const { return q_.get_num(); }
    const Int& den() const { return q_.get_den(); }

    bool is_integer() const { return den() == 1; }
    bool is_zero() const { return num() == 0; }
    int sign() const { return sgn(q_); }

    // "num/den", or just "num" when the denominator is 1.
    std::string str() const;
    static std::optional<Rat> parse(const std::string& s);

    Rat operator-() const { return Rat(mpq_class(-q_)); }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

    double to_double() const { return q_.get_d(); }

private:
    mpq_class q_;
};

Rat abs(const Rat& q);

// Exact square root of a non-negative rational, nullopt when irrational.
std::optional<Rat> rat_sqrt(const Rat& q);

std::ostream& operator<<(std::ostream& os, const Rat& q);

}  // namespace trapcong
